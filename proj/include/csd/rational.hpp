#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <iterator>
#include <type_traits>

// Boost < 1.75 decides whether a constructor argument is a "byte container" by
// reading std::iterator_traits<C::const_iterator>::value_type for any C that
// has a const_iterator member.  Eigen 3.4 gives two-dimensional dense
// expressions `const_iterator = void`, and under C++20 iterator_traits<void>
// is empty, so the probe becomes a hard error in the middle of unrelated
// overload resolution (e.g. a Matrix * Vector product).  Boost only defines
// the <C, false> partial specialization, so we supply the missing <C, true>
// one with a SFINAE-safe probe: iterators without traits are simply not byte
// containers.  Real byte containers (std::string, std::vector<char>) keep
// working.
namespace csd::detail {

template <class It, class = void>
struct iterator_value {
  using type = void;
};
template <class It>
struct iterator_value<It, std::void_t<typename std::iterator_traits<It>::value_type>> {
  using type = typename std::iterator_traits<It>::value_type;
};

template <class T>
struct is_byte_like : std::bool_constant<std::is_integral_v<T> && sizeof(T) == 1> {};
template <>
struct is_byte_like<void> : std::false_type {};

}  // namespace csd::detail

namespace boost::multiprecision::detail {

template <class C>
struct is_byte_container_imp<C, true>
    : csd::detail::is_byte_like<typename std::remove_cv<
          typename csd::detail::iterator_value<typename C::const_iterator>::type>::type> {};

}  // namespace boost::multiprecision::detail

#include <boost/multiprecision/rational_adaptor.hpp>
#include <boost/multiprecision/eigen.hpp>

#include <Eigen/Core>

#include <string>
#include <string_view>

namespace csd {

// Exact rational scalar, always in lowest terms with positive denominator.
// Eager evaluation (et_off) so it can be used as an Eigen scalar; the
// boost/multiprecision/eigen.hpp include provides the NumTraits glue.
using Rational = boost::multiprecision::number<
    boost::multiprecision::rational_adaptor<boost::multiprecision::cpp_int_backend<>>,
    boost::multiprecision::et_off>;

using BigInt = boost::multiprecision::cpp_int;

using RationalVector = Eigen::Matrix<Rational, Eigen::Dynamic, 1>;
using RationalMatrix = Eigen::Matrix<Rational, Eigen::Dynamic, Eigen::Dynamic>;

// num/den reduced to canonical form. Throws std::invalid_argument on den == 0.
Rational make_rational(long long num, long long den);

// Canonical wire form "num/den", denominator always present ("3" -> "3/1").
std::string to_fraction(const Rational& r);

// Accepts "num/den" or a bare integer, optional surrounding whitespace.
// Throws ParseError on anything else (including a zero denominator).
Rational parse_fraction(std::string_view text);

double to_double(const Rational& r);

}  // namespace csd
