#pragma once

#include <cassert>

#include "supercong/rational.hpp"

namespace supercong {

struct RationalInterval {
  Rational lo, hi;

  Rational width() const { return hi - lo; }
  bool contains(const Rational& x) const { return lo < x && x < hi; }
};

namespace detail {

// Alternating-series bracket for arctan(1/x), x >= 2: stops once the next
// term drops below eps, then uses that term as a rigorous tail bound.
inline RationalInterval arctan_inv_bounds(long long x, const Rational& eps) {
  assert(x >= 2 && eps > 0);
  const Int x2 = Int(x) * x;
  Rational sum(0);
  Int denom_pow = x;  // x^(2j+1)
  long long j = 0;
  bool positive = true;
  for (;;) {
    Rational term = make_rational(1, denom_pow * (2 * j + 1));
    if (term < eps) {
      // Partial sum S and S +/- term bracket the limit.
      if (positive) return {sum, sum + term};
      return {sum - term, sum};
    }
    sum += positive ? term : -term;
    denom_pow *= x2;
    ++j;
    positive = !positive;
  }
}

// Machin: pi = 16*arctan(1/5) - 4*arctan(1/239), width < eps.
inline RationalInterval pi_bounds_eps(const Rational& eps) {
  RationalInterval a = arctan_inv_bounds(5, eps / 32);
  RationalInterval b = arctan_inv_bounds(239, eps / 8);
  return {16 * a.lo - 4 * b.hi, 16 * a.hi - 4 * b.lo};
}

}  // namespace detail

// Exact rational bounds lo < pi < hi with hi - lo < 10^-digits.
inline RationalInterval pi_bounds(int digits) {
  assert(digits >= 1 && digits <= 1100);
  return detail::pi_bounds_eps(
      make_rational(1, ipow(10, static_cast<unsigned long long>(digits))));
}

// lo < 16/pi < hi with hi - lo < 10^-digits.
inline RationalInterval sixteen_over_pi_bounds(int digits) {
  assert(digits >= 1 && digits <= 1000);
  RationalInterval pi = detail::pi_bounds_eps(
      make_rational(1, 2 * ipow(10, static_cast<unsigned long long>(digits))));
  // pi > 3 makes 16*(hi-lo)/(lo*hi) < 16/9 * (hi-lo) < 10^-digits.
  assert(pi.lo > 3);
  return {16 / pi.hi, 16 / pi.lo};
}

// lo < 32/pi^3 < hi with hi - lo < 10^-digits.
inline RationalInterval thirtytwo_over_pi3_bounds(int digits) {
  assert(digits >= 1 && digits <= 1000);
  RationalInterval pi = detail::pi_bounds_eps(
      make_rational(1, 2 * ipow(10, static_cast<unsigned long long>(digits))));
  assert(pi.lo > 3);
  Rational lo3 = pi.lo * pi.lo * pi.lo;
  Rational hi3 = pi.hi * pi.hi * pi.hi;
  return {32 / hi3, 32 / lo3};
}

}  // namespace supercong
