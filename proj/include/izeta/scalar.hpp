#ifndef IZETA_SCALAR_HPP
#define IZETA_SCALAR_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <type_traits>

namespace izeta {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

template <typename Scalar>
inline constexpr bool is_exact_v = std::is_same_v<Scalar, Rational>;

// Integer power by repeated squaring; works for double and Rational alike.
template <typename Scalar>
Scalar ipow(Scalar base, int exponent) {
  Scalar result(1);
  bool invert = exponent < 0;
  unsigned e = invert ? static_cast<unsigned>(-exponent) : static_cast<unsigned>(exponent);
  while (e != 0) {
    if (e & 1u) result *= base;
    base *= base;
    e >>= 1u;
  }
  if (invert) return Scalar(1) / result;
  return result;
}

template <typename Scalar>
double to_double(const Scalar& x) {
  if constexpr (std::is_arithmetic_v<Scalar>) {
    return static_cast<double>(x);
  } else {
    return x.template convert_to<double>();
  }
}

// Relative discrepancy |a - b| / max(|a|, |b|, floor).
inline double relative_gap(double a, double b, double floor = 1e-300) {
  double scale = std::max({std::abs(a), std::abs(b), floor});
  return std::abs(a - b) / scale;
}

}  // namespace izeta

#endif  // IZETA_SCALAR_HPP
