#pragma once

#include <stdexcept>

namespace csd {

// An input document (graph, fraction, profile, ...) violates its wire format.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// The defender action set grew past the configured cap.
class GuardrailError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// The uniform-on-V* equilibrium construction failed its post-hoc check.
// Rare but real (see build_equilibrium); carries a witness description.
class EquilibriumConstructionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace csd
