#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "supercong/bipoly.hpp"
#include "supercong/series.hpp"

namespace supercong {

// One signed product of polynomials over a product of polynomials. The
// certificate sides are sums of these, transcribed factor by factor so a
// test can perturb any constituent coefficient.
struct CertFraction {
  int sign = 1;
  std::vector<BiPoly> num;
  std::vector<BiPoly> den;

  RatFunc value() const {
    BiPoly top{Rational(sign)};
    for (const auto& f : num) top = top * f;
    BiPoly bottom{Rational(1)};
    for (const auto& f : den) bottom = bottom * f;
    return {std::move(top), std::move(bottom)};
  }
};

struct CertificateIdentity {
  std::vector<CertFraction> lhs;
  std::vector<CertFraction> rhs;

  static RatFunc side_value(const std::vector<CertFraction>& side) {
    RatFunc acc{BiPoly{Rational(0)}};
    for (const auto& frac : side) acc = acc + frac.value();
    return acc;
  }
  RatFunc lhs_value() const { return side_value(lhs); }
  RatFunc rhs_value() const { return side_value(rhs); }
};

// The divided form of the WZ relation for the Guillera pair:
//
//   - (84n^2-56kn+108n+4k^2-20k+21)(1/2+n-k)^2 / (64n^2 (2n-k+2)(2n-k+1))
//   - (84n^2-56nk+4k^2+52n-12k+5)(n+k-1/2)(2n-k+2) / (64n^2 (2n-k+1)(2n-k+2))
//   = (1/2+n)(n+k-1/2)(1/2+n-k)^2 / (16n^2 (2n-k+2)(2n-k+1)) - 1
inline CertificateIdentity guillera_certificate() {
  const BiPoly n = BiPoly::var_n();
  const BiPoly k = BiPoly::var_k();
  const Rational half(1, 2);

  auto quad = [&](long long cnn, long long cnk, long long ckk, long long cn,
                  long long ck, long long c0) {
    return n * n * Rational(cnn) + n * k * Rational(cnk) + k * k * Rational(ckk) +
           n * Rational(cn) + k * Rational(ck) + BiPoly(Rational(c0));
  };

  const BiPoly weight_f_shifted = quad(84, -56, 4, 108, -20, 21);
  const BiPoly weight_f = quad(84, -56, 4, 52, -12, 5);
  const BiPoly half_plus_n_minus_k = BiPoly(half) + n - k;
  const BiPoly n_plus_k_minus_half = n + k - BiPoly(half);
  const BiPoly half_plus_n = BiPoly(half) + n;
  const BiPoly t1 = n * Rational(2) - k + BiPoly(Rational(1));  // 2n-k+1
  const BiPoly t2 = n * Rational(2) - k + BiPoly(Rational(2));  // 2n-k+2
  const BiPoly n2_64 = n * n * Rational(64);
  const BiPoly n2_16 = n * n * Rational(16);
  const BiPoly one(Rational(1));

  CertificateIdentity id;
  id.lhs.push_back({-1,
                    {weight_f_shifted, half_plus_n_minus_k, half_plus_n_minus_k},
                    {n2_64, t2, t1}});
  id.lhs.push_back({-1, {weight_f, n_plus_k_minus_half, t2}, {n2_64, t1, t2}});
  id.rhs.push_back({+1,
                    {half_plus_n, n_plus_k_minus_half, half_plus_n_minus_k,
                     half_plus_n_minus_k},
                    {n2_16, t2, t1}});
  id.rhs.push_back({-1, {one}, {}});
  return id;
}

inline bool certificate_check(const CertificateIdentity& id) {
  return ratfunc_eq(id.lhs_value(), id.rhs_value());
}

inline bool certificate_check() { return certificate_check(guillera_certificate()); }

// ---------------------------------------------------------------------------
// Pointwise checks of the undivided WZ relation and the telescoped sums.
// ---------------------------------------------------------------------------

struct GridResult {
  bool ok = true;
  long long n = -1, k = -1;  // first violation when !ok
};

using PairFn = std::function<Rational(long long, long long)>;

// F(n,k-1) - F(n,k) = G(n+1,k) - G(n,k) for 0 <= n <= n_max, 1 <= k <= k_max.
inline GridResult wz_grid_check_fn(long long n_max, long long k_max,
                                   const PairFn& F, const PairFn& G) {
  for (long long n = 0; n <= n_max; ++n)
    for (long long k = 1; k <= k_max; ++k)
      if (F(n, k - 1) - F(n, k) != G(n + 1, k) - G(n, k)) return {false, n, k};
  return {};
}

inline GridResult wz_grid_check(long long n_max, long long k_max) {
  return wz_grid_check_fn(n_max, k_max, wz_f, wz_g);
}

struct TelescopeResult {
  bool ok = true;
  std::string failed;  // which identity failed, empty when ok
  Rational lhs, rhs;   // the telescoped sums (both sides)
};

// Checks, exactly:
//   sum_{n=0}^{(p-1)/2} F(n,0) = F((p-1)/2, p) + sum_{k=1}^{p} G((p+1)/2, k)
// and for each k = 1..p the row identity
//   sum_{n=0}^{(p-1)/2} (F(n,k-1) - F(n,k)) = G((p+1)/2, k).
inline TelescopeResult telescoping_check(long long p) {
  assert(p >= 3 && p % 2 == 1);
  const long long half_p = (p - 1) / 2;
  TelescopeResult res;

  Rational lhs(0);
  for (long long n = 0; n <= half_p; ++n) lhs += wz_f(n, 0);
  Rational rhs = wz_f(half_p, p) + g_row_sum(p);
  res.lhs = lhs;
  res.rhs = rhs;
  if (lhs != rhs) {
    res.ok = false;
    res.failed = "telescoped sum";
    return res;
  }

  for (long long k = 1; k <= p; ++k) {
    Rational row(0);
    for (long long n = 0; n <= half_p; ++n) row += wz_f(n, k - 1) - wz_f(n, k);
    if (row != wz_g(half_p + 1, k)) {
      res.ok = false;
      res.failed = "row identity at k=" + std::to_string(k);
      return res;
    }
  }
  return res;
}

}  // namespace supercong
