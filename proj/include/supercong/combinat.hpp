#pragma once

#include <algorithm>
#include <cassert>
#include <stdexcept>
#include <vector>

#include "supercong/errors.hpp"
#include "supercong/rational.hpp"

namespace supercong {

// Pochhammer symbol (a)_m.
//   m >= 0: a(a+1)...(a+m-1), empty product for m = 0.
//   m <  0: prod_{k=1}^{|m|} 1/(a-k).
inline Rational rising(const Rational& a, long long m) {
  Rational acc(1);
  if (m >= 0) {
    for (long long j = 0; j < m; ++j) acc *= a + j;
    return acc;
  }
  for (long long k = 1; k <= -m; ++k) {
    Rational f = a - k;
    if (f == 0) throw PoleError("rising: vanishing factor at negative index");
    acc /= f;
  }
  return acc;
}

// 1/(a)_m = Gamma(a)/Gamma(a+m), with the pole-induced zeros of the
// reciprocal Gamma quotient returned as exact 0. For m < 0 this is the
// plain product prod_{k=1}^{|m|} (a-k), which vanishes precisely when the
// quotient has such a zero.
inline Rational inv_rising_or_zero(const Rational& a, long long m) {
  if (m < 0) {
    Rational acc(1);
    for (long long k = 1; k <= -m; ++k) acc *= a - k;
    return acc;
  }
  Rational v(1);
  for (long long j = 0; j < m; ++j) v *= a + j;
  if (v == 0) throw PoleError("inv_rising_or_zero: reciprocal of a genuine zero");
  return 1 / v;
}

// n! / (k! (n-k)!) for 0 <= k <= n.
inline Rational binomial(long long n, long long k) {
  if (k < 0 || n < 0 || k > n)
    throw std::domain_error("binomial: requires 0 <= k <= n");
  k = std::min(k, n - k);
  Int num = 1, den = 1;
  for (long long j = 1; j <= k; ++j) {
    num *= n - k + j;
    den *= j;
  }
  return make_rational(std::move(num), std::move(den));
}

// Generalized harmonic number H_n^{(i)} = sum_{j=1}^{n} j^{-i}.
inline Rational harmonic(long long n, int i) {
  assert(i >= 1);
  Rational acc(0);
  for (long long j = 1; j <= n; ++j)
    acc += make_rational(1, ipow(j, static_cast<unsigned long long>(i)));
  return acc;
}

// Polynomial in eps truncated at a fixed degree. Coefficient i is the
// coefficient of eps^i; anything beyond the truncation is discarded, never
// assumed zero.
struct EpsPoly {
  std::vector<Rational> coeff;

  int degree() const { return static_cast<int>(coeff.size()) - 1; }
  const Rational& operator[](std::size_t i) const { return coeff[i]; }
};

// Coefficients of (1+eps)(2+eps)...(k+eps) up to eps^d.
inline EpsPoly rising_eps_poly(long long k, int d) {
  assert(k >= 0 && d >= 0);
  std::vector<Rational> c(static_cast<std::size_t>(d) + 1, Rational(0));
  c[0] = 1;
  for (long long j = 1; j <= k; ++j) {
    for (int i = d; i >= 0; --i) {
      c[static_cast<std::size_t>(i)] *= j;
      if (i > 0) c[static_cast<std::size_t>(i)] += c[static_cast<std::size_t>(i) - 1];
    }
  }
  return EpsPoly{std::move(c)};
}

}  // namespace supercong
