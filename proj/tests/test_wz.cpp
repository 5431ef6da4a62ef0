#include "catch_amalgamated.hpp"

#include <algorithm>

#include "supercong/wz.hpp"

using namespace supercong;

TEST_CASE("bipoly arithmetic") {
  const BiPoly n = BiPoly::var_n();
  const BiPoly k = BiPoly::var_k();
  const BiPoly zero;

  BiPoly a = n * n + k * Rational(3);
  CHECK(a + zero == a);
  CHECK(a - a == zero);

  CHECK((n + k) * (n - k) == n * n - k * k);

  // (2n-k+1)(2n-k+2) = 4n^2 - 4nk + 6n + k^2 - 3k + 2
  BiPoly t1 = n * Rational(2) - k + BiPoly(Rational(1));
  BiPoly t2 = n * Rational(2) - k + BiPoly(Rational(2));
  BiPoly expanded = n * n * Rational(4) - n * k * Rational(4) + n * Rational(6) +
                    k * k + k * Rational(-3) + BiPoly(Rational(2));
  CHECK(t1 * t2 == expanded);

  CHECK(t1.eval(Rational(2), Rational(3)) == Rational(2));
  CHECK((n * n * Rational(64)).eval(Rational(1, 2), Rational(0)) == Rational(16));
}

TEST_CASE("bipoly ops are order independent") {
  const BiPoly n = BiPoly::var_n();
  const BiPoly k = BiPoly::var_k();
  BiPoly a = n * n - k * Rational(2) + BiPoly(Rational(1, 3));
  BiPoly b = k * k * Rational(5) + n;
  BiPoly c = n * k - BiPoly(Rational(7));
  CHECK((a + b) + c == a + (b + c));
  CHECK(a + b == b + a);
  CHECK(a * b == b * a);
  CHECK((a * b) * c == a * (b * c));
  CHECK(a * (b + c) == a * b + a * c);
}

TEST_CASE("ratfunc equality by cross-multiplication") {
  const BiPoly n = BiPoly::var_n();
  const BiPoly k = BiPoly::var_k();
  RatFunc x{n * n + k, n + BiPoly(Rational(1))};
  CHECK(ratfunc_eq(x, x));
  RatFunc lhs{n * n - k * k, n - k};
  RatFunc rhs{n + k, BiPoly(Rational(1))};
  CHECK(ratfunc_eq(lhs, rhs));
  CHECK_FALSE(ratfunc_eq(RatFunc{n, k}, RatFunc{k, n}));
}

TEST_CASE("certificate identity holds") {
  CHECK(certificate_check());
  // construction-order variant: evaluate fractions in reverse
  auto id = guillera_certificate();
  std::reverse(id.lhs.begin(), id.lhs.end());
  std::reverse(id.rhs.begin(), id.rhs.end());
  CHECK(certificate_check(id));
}

TEST_CASE("certificate breaks under the +5 -> +6 mutation") {
  auto id = guillera_certificate();
  // lhs[1].num[0] is the F(n,k) weight 84n^2-56nk+4k^2+52n-12k+5
  id.lhs[1].num[0] += BiPoly(Rational(1));
  CHECK_FALSE(certificate_check(id));
}

TEST_CASE("certificate sides evaluate pointwise to the divided WZ relation") {
  auto id = guillera_certificate();
  RatFunc lhs = id.lhs_value();
  RatFunc rhs = id.rhs_value();
  for (long long n = 1; n <= 6; ++n) {
    for (long long k = 1; k <= 6; ++k) {
      if (2 * n - k + 1 == 0 || 2 * n - k + 2 == 0) continue;
      Rational g = wz_g(n, k);
      if (g == 0) continue;
      Rational ln = lhs.num.eval(Rational(n), Rational(k));
      Rational ld = lhs.den.eval(Rational(n), Rational(k));
      Rational rn = rhs.num.eval(Rational(n), Rational(k));
      Rational rd = rhs.den.eval(Rational(n), Rational(k));
      REQUIRE(ld != 0);
      REQUIRE(rd != 0);
      CHECK(ln / ld == (wz_f(n, k - 1) - wz_f(n, k)) / g);
      CHECK(rn / rd == wz_g(n + 1, k) / g - 1);
    }
  }
  // the single instance named in both directions
  Rational l21 = lhs.num.eval(Rational(2), Rational(1)) /
                 lhs.den.eval(Rational(2), Rational(1));
  Rational r21 = rhs.num.eval(Rational(2), Rational(1)) /
                 rhs.den.eval(Rational(2), Rational(1));
  CHECK(l21 == r21);
}

TEST_CASE("wz grid") {
  CHECK(wz_grid_check(10, 10).ok);
  // one instance by hand: F(1,0)-F(1,1) = G(2,1)-G(1,1)
  CHECK(wz_f(1, 0) - wz_f(1, 1) == wz_g(2, 1) - wz_g(1, 1));
  // a broken G (63n^2 instead of 64n^2) must fail somewhere
  auto mutated = wz_grid_check_fn(
      5, 5, wz_f, [](long long n, long long k) { return wz_g(n, k) * Rational(63, 64); });
  CHECK_FALSE(mutated.ok);
}

TEST_CASE("telescoping") {
  auto t3 = telescoping_check(3);
  CHECK(t3.ok);
  CHECK(t3.lhs == Rational(2607, 512));
  CHECK(t3.rhs == Rational(2607, 512));
  // 315/32 - 3/512 + 45/256 - 315/64 telescopes the right-hand side
  CHECK(Rational(315, 32) + Rational(-3, 512) + Rational(45, 256) +
            Rational(-315, 64) ==
        Rational(2607, 512));
  CHECK(telescoping_check(5).ok);
  CHECK(telescoping_check(13).ok);
  // the telescoped left side is the truncated series itself
  for (long long p : {3LL, 5LL, 7LL, 11LL}) {
    auto t = telescoping_check(p);
    CHECK(t.lhs == s_k2((p - 1) / 2));
  }
}
