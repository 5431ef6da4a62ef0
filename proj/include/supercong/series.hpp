#pragma once

#include <cassert>
#include <stdexcept>
#include <utility>

#include "supercong/combinat.hpp"
#include "supercong/padic.hpp"
#include "supercong/pi_reference.hpp"
#include "supercong/rational.hpp"

namespace supercong {

// ---------------------------------------------------------------------------
// Ramanujan 16/pi series: summand (1/2)_n^3 / n!^3 * (42n+5) / 64^n.
// ---------------------------------------------------------------------------

inline Rational k2_term(long long n) {
  assert(n >= 0);
  Rational half(1, 2);
  Rational r = rising(half, n);
  Rational f = rising(Rational(1), n);
  return r * r * r * (42 * n + 5) / (f * f * f * rat_pow(Rational(64), n));
}

namespace detail {

// t_{n+1}/t_n for the (K.2) summand, as an exact integer fraction.
inline Rational k2_ratio(long long n) {
  Int a = 2 * n + 1;
  Int num = a * a * a * (42 * n + 47);
  Int b = n + 1;
  Int den = 512 * b * b * b * (42 * n + 5);
  return make_rational(std::move(num), std::move(den));
}

// t_{n+1}/t_n for the Gourevitch degree-7 summand.
inline Rational g7_ratio(long long n) {
  auto weight = [](long long m) -> Int {
    return Int(168) * m * m * m + Int(76) * m * m + 14 * m + 1;
  };
  Int a = 2 * n + 1;
  Int num = ipow(a, 7) * weight(n + 1);
  Int b = n + 1;
  Int den = 8192 * ipow(b, 7) * weight(n);
  return make_rational(std::move(num), std::move(den));
}

}  // namespace detail

// S(N) = sum_{n=0}^{N} k2_term(n), by the term-ratio recurrence.
inline Rational s_k2(long long N) {
  assert(N >= 0);
  Rational term(5), sum(5);
  for (long long n = 0; n < N; ++n) {
    term *= detail::k2_ratio(n);
    sum += term;
  }
  return sum;
}

// Same sum in scaled p-adic arithmetic; agrees with padic_encode(s_k2(N))
// at the surviving precision.
inline PadicScaled s_k2_padic(long long N, long long p, int prec) {
  assert(N >= 0 && p >= 3 && p % 2 == 1);
  PadicScaled term = padic_encode(Rational(5), p, prec);
  PadicScaled sum = term;
  for (long long n = 0; n < N; ++n) {
    term = term * padic_encode(detail::k2_ratio(n), p, prec);
    sum = sum + term;
  }
  return sum;
}

// ---------------------------------------------------------------------------
// Gourevitch 32/pi^3 series:
// summand (1/2)_n^7 / n!^7 * (168n^3 + 76n^2 + 14n + 1) / 2^(6n).
// ---------------------------------------------------------------------------

inline Rational g7_term(long long n) {
  assert(n >= 0);
  Rational half(1, 2);
  Rational num = rat_pow(rising(half, n), 7) *
                 Rational(Int(168) * n * n * n + Int(76) * n * n + 14 * n + 1);
  Rational den = rat_pow(rising(Rational(1), n), 7) * rat_pow(Rational(64), n);
  return num / den;
}

inline Rational s_g7(long long N) {
  assert(N >= 0);
  Rational term(1), sum(1);
  for (long long n = 0; n < N; ++n) {
    term *= detail::g7_ratio(n);
    sum += term;
  }
  return sum;
}

inline PadicScaled s_g7_padic(long long N, long long p, int prec) {
  assert(N >= 0 && p >= 3 && p % 2 == 1);
  PadicScaled term = padic_encode(Rational(1), p, prec);
  PadicScaled sum = term;
  for (long long n = 0; n < N; ++n) {
    term = term * padic_encode(detail::g7_ratio(n), p, prec);
    sum = sum + term;
  }
  return sum;
}

// ---------------------------------------------------------------------------
// Guillera WZ pair.
// ---------------------------------------------------------------------------

// F(n,k) = (84n^2 - 56nk + 4k^2 + 52n - 12k + 5) *
//          (-1)^k (1/2)_n (1/2)_{n+k} (1/2)_{n-k}^2 / (2^{4n} (1)_n^2 (1)_{2n-k+1}).
// Zero whenever 2n-k+1 < 0, through the pole-reciprocal-is-zero rule.
inline Rational wz_f(long long n, long long k) {
  assert(n >= 0 && k >= 0);
  Rational half(1, 2);
  Int w = Int(84) * n * n - Int(56) * n * k + Int(4) * k * k + 52 * n - 12 * k + 5;
  Rational value(std::move(w));
  if (k % 2 == 1) value = -value;
  value *= rising(half, n) * rising(half, n + k);
  Rational nk = rising(half, n - k);
  value *= nk * nk;
  value *= inv_rising_or_zero(Rational(1), 2 * n - k + 1);
  Rational fact = rising(Rational(1), n);
  return value / (make_rational(ipow(2, static_cast<unsigned long long>(4 * n)), 1) *
                  fact * fact);
}

// G(n,k) = 64n^2 (-1)^k (1/2)_n (1/2)_{n+k-1} (1/2)_{n-k}^2 / (2^{4n} (1)_n^2 (1)_{2n-k}).
inline Rational wz_g(long long n, long long k) {
  assert(n >= 0 && k >= 0);
  Rational half(1, 2);
  Rational value(Int(64) * n * n);
  if (k % 2 == 1) value = -value;
  value *= rising(half, n) * rising(half, n + k - 1);
  Rational nk = rising(half, n - k);
  value *= nk * nk;
  value *= inv_rising_or_zero(Rational(1), 2 * n - k);
  Rational fact = rising(Rational(1), n);
  return value / (make_rational(ipow(2, static_cast<unsigned long long>(4 * n)), 1) *
                  fact * fact);
}

// sum_{k=1}^{p} G((p+1)/2, k), by the term-ratio recurrence over k.
inline Rational g_row_sum(long long p) {
  assert(p >= 3 && p % 2 == 1);
  const long long n = (p + 1) / 2;
  Rational term = wz_g(n, 1);
  Rational sum = term;
  for (long long k = 1; k < p; ++k) {
    // ratio of consecutive Pochhammer quotients in k
    Rational ratio = -Rational(2 * n + 2 * k - 1, 2);
    Rational inv = make_rational(2, Int(2) * n - 2 * k - 1);
    ratio *= inv * inv * (2 * n - k);
    term *= ratio;
    sum += term;
  }
  return sum;
}

// ---------------------------------------------------------------------------
// Lemma-specific sums.
// ---------------------------------------------------------------------------

// LHS prod_{k=1}^{p-1} (p+2k) and RHS (-1)^((p-1)/2) prod_{k=1}^{(p-1)/2} (2k-1)^2.
inline std::pair<Rational, Rational> key1_sides(long long p) {
  if (p <= 3) throw std::domain_error("key1_sides: requires prime p > 3");
  Int lhs = 1;
  for (long long k = 1; k <= p - 1; ++k) lhs *= p + 2 * k;
  Int rhs = 1;
  for (long long k = 1; k <= (p - 1) / 2; ++k) rhs *= Int(2 * k - 1) * (2 * k - 1);
  if (((p - 1) / 2) % 2 == 1) rhs = -rhs;
  return {Rational(std::move(lhs)), Rational(std::move(rhs))};
}

// sum_{k=2}^{p} (-1)^k (1/2)_{(p-1)/2+k} (1/2)_{(p+1)/2-k}^2 / (1)_{p+1-k}.
inline Rational key2_sum(long long p) {
  assert(p >= 3 && p % 2 == 1);
  Rational half(1, 2);
  Rational b = rising(half, (p + 1) / 2 - 2);
  Rational term = rising(half, (p - 1) / 2 + 2) * b * b /
                  rising(Rational(1), p - 1);
  Rational sum = term;
  for (long long k = 2; k < p; ++k) {
    Rational ratio = -Rational(p + 2 * k, 2);
    Rational inv = make_rational(2, Int(p) - 2 * k);
    ratio *= inv * inv * (p + 1 - k);
    term *= ratio;
    sum += term;
  }
  return sum;
}

// sum_{n=1}^{p-1} (1 - p/2)_{n-1}^2 / (n! (1 - 3p/2)_{n-1}).
inline Rational easier_sum(long long p) {
  if (p <= 3) throw std::domain_error("easier_sum: requires prime p > 3");
  Rational term(1), sum(1);
  for (long long n = 1; n < p - 1; ++n) {
    // (2n - 3p) is odd for odd p, so the denominator factor never vanishes.
    Int a = 2 * n - p;
    term *= make_rational(a * a, Int(2) * (n + 1) * (2 * n - 3 * p));
    sum += term;
  }
  return sum;
}

// Exact rational bounds around 16/pi; the Machin machinery lives in
// pi_reference.hpp.
inline RationalInterval reference_16_over_pi(int digits) {
  return sixteen_over_pi_bounds(digits);
}

}  // namespace supercong
