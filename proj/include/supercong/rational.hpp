#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cassert>
#include <compare>
#include <cstdint>
#include <string>
#include <utility>

#include "supercong/errors.hpp"

namespace supercong {

using Int = boost::multiprecision::cpp_int;

// Exact fraction, always in lowest terms with positive denominator.
// Zero is 0/1. The universal oracle value type.
using Rational = boost::multiprecision::cpp_rational;

inline Rational make_rational(Int num, Int den) {
  assert(den != 0);
  // boost::rational rejects negative denominators for unbounded integers.
  if (den < 0) {
    num = -num;
    den = -den;
  }
  return Rational(std::move(num), std::move(den));
}

inline Int ipow(Int base, unsigned long long e) {
  Int acc = 1;
  while (e != 0) {
    if (e & 1) acc *= base;
    base *= base;
    e >>= 1;
  }
  return acc;
}

// x^e with integer (possibly negative) exponent; 0^0 = 1.
inline Rational rat_pow(const Rational& x, long long e) {
  if (e == 0) return Rational(1);
  if (x == 0) {
    if (e < 0) throw DivisionByZero("0 raised to a negative power");
    return Rational(0);
  }
  const bool neg = e < 0;
  const auto a = static_cast<unsigned long long>(neg ? -e : e);
  Int num = ipow(numerator(x), a);
  Int den = ipow(denominator(x), a);
  return neg ? make_rational(std::move(den), std::move(num))
             : make_rational(std::move(num), std::move(den));
}

// p-adic valuation, or +infinity for zero.
struct ValOrInf {
  bool is_inf = false;
  long long v = 0;

  static ValOrInf infinity() { return {true, 0}; }
  static ValOrInf finite(long long x) { return {false, x}; }

  friend bool operator==(const ValOrInf& a, const ValOrInf& b) {
    return a.is_inf == b.is_inf && (a.is_inf || a.v == b.v);
  }
  friend std::strong_ordering operator<=>(const ValOrInf& a, const ValOrInf& b) {
    if (a.is_inf && b.is_inf) return std::strong_ordering::equal;
    if (a.is_inf) return std::strong_ordering::greater;
    if (b.is_inf) return std::strong_ordering::less;
    return a.v <=> b.v;
  }
  friend bool operator>=(const ValOrInf& a, long long k) {
    return a.is_inf || a.v >= k;
  }
  friend ValOrInf operator+(const ValOrInf& a, const ValOrInf& b) {
    if (a.is_inf || b.is_inf) return infinity();
    return finite(a.v + b.v);
  }

  std::string str() const { return is_inf ? "+inf" : std::to_string(v); }
};

// Valuation of a nonzero integer at p.
inline long long int_vp(Int n, long long p) {
  assert(n != 0);
  long long v = 0;
  Int q, r;
  for (;;) {
    divide_qr(n, Int(p), q, r);
    if (r != 0) return v;
    n = q;
    ++v;
  }
}

// v_p(x): valuation of numerator minus valuation of denominator; +inf for 0.
inline ValOrInf vp(const Rational& x, long long p) {
  if (x == 0) return ValOrInf::infinity();
  const Int& num = numerator(x);
  const Int& den = denominator(x);
  if (num % p != 0) {
    if (den % p != 0) return ValOrInf::finite(0);
    return ValOrInf::finite(-int_vp(den, p));
  }
  // Lowest terms: p cannot divide both.
  return ValOrInf::finite(int_vp(num, p));
}

struct CongruenceResult {
  bool ok = false;
  ValOrInf valuation;
};

// a == b (mod p^k) in the rational sense: v_p(a-b) >= k.
inline CongruenceResult congruent(const Rational& a, const Rational& b,
                                  long long p, long long k) {
  assert(k >= 1);
  ValOrInf v = vp(a - b, p);
  return {v >= k, v};
}

// Modular inverse by extended gcd; requires gcd(a, m) = 1.
inline Int inv_mod(Int a, const Int& m) {
  assert(m > 1);
  a %= m;
  if (a < 0) a += m;
  Int r0 = m, r1 = a, t0 = 0, t1 = 1;
  while (r1 != 0) {
    Int q = r0 / r1;
    Int r2 = r0 - q * r1;
    r0 = std::move(r1);
    r1 = std::move(r2);
    Int t2 = t0 - q * t1;
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  assert(r0 == 1 && "inverse of a non-unit");
  if (t0 < 0) t0 += m;
  return t0;
}

inline constexpr std::size_t kDigestLimit = 64;

// Decimal "num/den" string, truncated at kDigestLimit characters.
inline std::string decimal_digest(const Rational& x) {
  std::string s = numerator(x).str();
  if (denominator(x) != 1) {
    s += '/';
    s += denominator(x).str();
  }
  if (s.size() > kDigestLimit) {
    s.resize(kDigestLimit);
    s += "…truncated";
  }
  return s;
}

// Fixed-point decimal expansion with `digits` fractional digits,
// truncated toward zero.
inline std::string decimal_string(const Rational& x, int digits) {
  assert(digits >= 0);
  const bool neg = x < 0;
  Rational a = neg ? Rational(-x) : x;
  Int scaled = (numerator(a) * ipow(10, static_cast<unsigned long long>(digits))) /
               denominator(a);
  std::string s = scaled.str();
  if (static_cast<int>(s.size()) <= digits)
    s.insert(0, static_cast<std::size_t>(digits) + 1 - s.size(), '0');
  if (digits > 0) s.insert(s.size() - static_cast<std::size_t>(digits), ".");
  if (neg) s.insert(0, "-");
  return s;
}

}  // namespace supercong
