#pragma once

#include <algorithm>
#include <cassert>
#include <string>
#include <utility>

#include "supercong/errors.hpp"
#include "supercong/rational.hpp"

namespace supercong {

// Fixed-precision scaled p-adic residue: represents a value congruent to
// p^e * r (mod p^(e+N)), with 0 <= r < p^N. After normalization either r
// is a unit or r = 0, the latter meaning "zero to within the surviving
// precision" (distinct from the exact-zero flag).
//
// Immutable after construction; all operations return new values.
class PadicScaled {
 public:
  static PadicScaled exact_zero(long long p, int prec) {
    PadicScaled x(p, prec);
    x.zero_ = true;
    return x;
  }

  PadicScaled(long long p, int prec, long long e, Int r)
      : p_(p), prec_(prec), e_(e), r_(std::move(r)) {
    assert(p_ >= 3 && p_ % 2 == 1);
    assert(prec_ >= 1);
    Int m = modulus();
    r_ %= m;
    if (r_ < 0) r_ += m;
    normalize();
  }

  static PadicScaled encode(const Rational& x, long long p, int prec) {
    assert(prec >= 1);
    if (x == 0) return exact_zero(p, prec);
    Int num = numerator(x);
    Int den = denominator(x);
    long long e = 0;
    while (num % p == 0) {
      num /= p;
      ++e;
    }
    while (den % p == 0) {
      den /= p;
      --e;
    }
    Int m = ipow(p, static_cast<unsigned long long>(prec));
    Int r = (num % m) * inv_mod(den, m) % m;
    if (r < 0) r += m;
    return PadicScaled(p, prec, e, std::move(r));
  }

  long long prime() const { return p_; }
  int precision() const { return prec_; }
  long long exponent() const { return e_; }
  const Int& residue() const { return r_; }
  bool is_exact_zero() const { return zero_; }

  // r == 0 while not exactly zero: value is 0 mod p^(e+N), unknown beyond.
  bool is_indistinguishable_from_zero() const { return !zero_ && r_ == 0; }

  // Exact valuation when the residue is a unit (or the value is exactly 0);
  // otherwise only the lower bound e+N is known.
  ValOrInf valuation() const {
    if (zero_) return ValOrInf::infinity();
    assert(r_ != 0 && "valuation undetermined at this precision");
    return ValOrInf::finite(e_);
  }
  bool valuation_known() const { return zero_ || r_ != 0; }
  long long valuation_lower_bound() const {
    assert(!zero_);
    return r_ != 0 ? e_ : e_ + prec_;
  }

  friend PadicScaled operator+(const PadicScaled& x, const PadicScaled& y) {
    assert(x.p_ == y.p_);
    if (x.zero_) return y;
    if (y.zero_) return x;
    const long long m = std::min(x.e_, y.e_);
    const long long abs_prec =
        std::min(x.e_ + x.prec_, y.e_ + y.prec_);
    const long long g = abs_prec - m;
    if (g <= 0)
      throw PrecisionExhausted("padic add: no surviving precision");
    PadicScaled out(x.p_, static_cast<int>(g));
    out.e_ = m;
    Int mod = out.modulus();
    Int rx = (x.r_ * ipow(x.p_, static_cast<unsigned long long>(x.e_ - m))) % mod;
    Int ry = (y.r_ * ipow(y.p_, static_cast<unsigned long long>(y.e_ - m))) % mod;
    out.r_ = (rx + ry) % mod;
    out.normalize();
    return out;
  }

  PadicScaled operator-() const {
    if (zero_) return *this;
    PadicScaled out(*this);
    if (out.r_ != 0) out.r_ = out.modulus() - out.r_;
    return out;
  }

  friend PadicScaled operator-(const PadicScaled& x, const PadicScaled& y) {
    return x + (-y);
  }

  friend PadicScaled operator*(const PadicScaled& x, const PadicScaled& y) {
    assert(x.p_ == y.p_);
    if (x.zero_ || y.zero_)
      return exact_zero(x.p_, std::min(x.prec_, y.prec_));
    PadicScaled out(x.p_, std::min(x.prec_, y.prec_));
    out.e_ = x.e_ + y.e_;
    out.r_ = (x.r_ * y.r_) % out.modulus();
    out.normalize();
    return out;
  }

  PadicScaled invert() const {
    if (zero_) throw DivisionByZero("padic invert of exact zero");
    if (r_ == 0)
      throw PrecisionExhausted("padic invert: residue is zero at this precision");
    PadicScaled out(p_, prec_);
    out.e_ = -e_;
    out.r_ = inv_mod(r_, out.modulus());
    return out;
  }

  friend PadicScaled operator/(const PadicScaled& x, const PadicScaled& y) {
    return x * y.invert();
  }

  PadicScaled pow(long long e) const {
    if (e < 0) return invert().pow(-e);
    PadicScaled acc = encode(Rational(1), p_, prec_);
    PadicScaled base = *this;
    auto n = static_cast<unsigned long long>(e);
    if (n == 0) return acc;
    while (n != 0) {
      if (n & 1) acc = acc * base;
      n >>= 1;
      if (n != 0) base = base * base;
    }
    return acc;
  }

  std::string digest() const {
    if (zero_) return "0";
    std::string s = r_.str();
    s += " * " + std::to_string(p_) + "^" + std::to_string(e_);
    s += " (mod " + std::to_string(p_) + "^" + std::to_string(e_ + prec_) + ")";
    if (s.size() > kDigestLimit) {
      s.resize(kDigestLimit);
      s += "…truncated";
    }
    return s;
  }

 private:
  PadicScaled(long long p, int prec) : p_(p), prec_(prec) {
    assert(prec_ >= 1);
  }

  Int modulus() const { return ipow(p_, static_cast<unsigned long long>(prec_)); }

  // Strip p-powers out of the residue into the exponent.
  void normalize() {
    if (zero_ || r_ == 0) return;
    while (r_ % p_ == 0) {
      r_ /= p_;
      ++e_;
      --prec_;
    }
    assert(prec_ >= 1);
  }

  long long p_;
  int prec_;
  long long e_ = 0;
  Int r_ = 0;
  bool zero_ = false;
};

inline PadicScaled padic_encode(const Rational& x, long long p, int prec) {
  return PadicScaled::encode(x, p, prec);
}

// True when x - y is zero to within the surviving precision.
inline bool padic_agrees(const PadicScaled& x, const PadicScaled& y) {
  PadicScaled d = x - y;
  return d.is_exact_zero() || d.is_indistinguishable_from_zero();
}

}  // namespace supercong
