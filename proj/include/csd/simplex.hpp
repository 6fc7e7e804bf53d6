#pragma once

#include "csd/rational.hpp"

#include <optional>
#include <vector>

namespace csd {

enum class RowSense { LessEq, Eq };

enum class LpStatus { Optimal, Infeasible, Unbounded };

// maximize objective.x  subject to  constraints*x (sense) rhs,  x >= 0,
// everything exact rationals. Callers express >= rows by negation.
struct LpProblem {
  RationalMatrix constraints;   // m x k
  RationalVector rhs;           // m
  std::vector<RowSense> sense;  // m
  RationalVector objective;     // k
};

struct LpOptions {
  // Early exit: stop phase 2 as soon as the objective strictly exceeds this.
  std::optional<Rational> stop_above;
};

struct LpSolution {
  LpStatus status = LpStatus::Infeasible;
  bool stopped_early = false;  // hit stop_above; primal is feasible, not proven optimal
  Rational objective = 0;
  RationalVector primal;  // size k
  RationalVector dual;    // size m, duals of the rows as given (meaningful at optimality)
};

// Two-phase primal simplex on a dense rational tableau, Bland's rule
// throughout (deterministic, cycle-free). Duals are read off the final
// objective row at the slack/artificial column of each row.
LpSolution solve_lp(const LpProblem& prob, const LpOptions& opts = {});

}  // namespace csd
