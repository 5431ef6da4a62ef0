#pragma once

#include <cassert>
#include <map>
#include <sstream>
#include <string>
#include <utility>

#include "supercong/rational.hpp"

namespace supercong {

// Exact bivariate polynomial in (n, k), sparse map from exponent pairs to
// rational coefficients. No zero coefficient is ever stored, so equality is
// structural on the canonical map.
class BiPoly {
 public:
  using Key = std::pair<int, int>;  // (degree in n, degree in k)
  using Map = std::map<Key, Rational>;

  BiPoly() = default;
  explicit BiPoly(const Rational& c) {
    if (c != 0) coeff_[{0, 0}] = c;
  }
  explicit BiPoly(long long c) : BiPoly(Rational(c)) {}

  static BiPoly monomial(int dn, int dk, const Rational& c) {
    BiPoly p;
    if (c != 0) p.coeff_[{dn, dk}] = c;
    return p;
  }
  static BiPoly var_n() { return monomial(1, 0, Rational(1)); }
  static BiPoly var_k() { return monomial(0, 1, Rational(1)); }

  const Map& terms() const { return coeff_; }
  bool is_zero() const { return coeff_.empty(); }

  friend bool operator==(const BiPoly& a, const BiPoly& b) {
    return a.coeff_ == b.coeff_;
  }

  BiPoly& operator+=(const BiPoly& o) {
    for (const auto& [key, c] : o.coeff_) add_term(key, c);
    return *this;
  }
  BiPoly& operator-=(const BiPoly& o) {
    for (const auto& [key, c] : o.coeff_) add_term(key, -c);
    return *this;
  }
  friend BiPoly operator+(BiPoly a, const BiPoly& b) { return a += b; }
  friend BiPoly operator-(BiPoly a, const BiPoly& b) { return a -= b; }

  BiPoly operator-() const {
    BiPoly out;
    for (const auto& [key, c] : coeff_) out.coeff_[key] = -c;
    return out;
  }

  friend BiPoly operator*(const BiPoly& a, const BiPoly& b) {
    BiPoly out;
    for (const auto& [ka, ca] : a.coeff_)
      for (const auto& [kb, cb] : b.coeff_)
        out.add_term({ka.first + kb.first, ka.second + kb.second}, ca * cb);
    return out;
  }

  friend BiPoly operator*(const BiPoly& a, const Rational& s) {
    BiPoly out;
    if (s == 0) return out;
    for (const auto& [key, c] : a.coeff_) out.coeff_[key] = c * s;
    return out;
  }

  Rational eval(const Rational& n, const Rational& k) const {
    Rational acc(0);
    for (const auto& [key, c] : coeff_)
      acc += c * rat_pow(n, key.first) * rat_pow(k, key.second);
    return acc;
  }

  std::string str() const {
    if (coeff_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [key, c] : coeff_) {
      if (!first) os << " + ";
      first = false;
      os << "(" << c << ")";
      if (key.first > 0) os << "*n^" << key.first;
      if (key.second > 0) os << "*k^" << key.second;
    }
    return os.str();
  }

 private:
  void add_term(const Key& key, const Rational& c) {
    auto it = coeff_.find(key);
    if (it == coeff_.end()) {
      if (c != 0) coeff_.emplace(key, c);
      return;
    }
    it->second += c;
    if (it->second == 0) coeff_.erase(it);
  }

  Map coeff_;
};

// Quotient of two BiPoly values. No reduction to lowest terms; equality is
// decided by cross-multiplication.
struct RatFunc {
  BiPoly num;
  BiPoly den;

  RatFunc() : num(), den(Rational(1)) {}
  RatFunc(BiPoly n, BiPoly d) : num(std::move(n)), den(std::move(d)) {
    assert(!den.is_zero() && "RatFunc with zero denominator");
  }
  explicit RatFunc(const BiPoly& p) : num(p), den(Rational(1)) {}

  friend RatFunc operator+(const RatFunc& a, const RatFunc& b) {
    return {a.num * b.den + b.num * a.den, a.den * b.den};
  }
  friend RatFunc operator-(const RatFunc& a, const RatFunc& b) {
    return {a.num * b.den - b.num * a.den, a.den * b.den};
  }
  friend RatFunc operator*(const RatFunc& a, const RatFunc& b) {
    return {a.num * b.num, a.den * b.den};
  }
  RatFunc operator-() const { return {-num, den}; }
};

inline bool ratfunc_eq(const RatFunc& a, const RatFunc& b) {
  return a.num * b.den == b.num * a.den;
}

}  // namespace supercong
