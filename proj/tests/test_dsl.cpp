#include "catch_amalgamated.hpp"

#include <random>
#include <vector>

#include "supercong/dsl.hpp"
#include "supercong/series.hpp"

using namespace supercong;

namespace {
const char* kK2Summand = "poch(1/2,n)^3 / fact(n)^3 * (42*n+5) / 64^n";
const char* kG7Summand =
    "poch(1/2,n)^7 / fact(n)^7 * (168*n^3+76*n^2+14*n+1) / 2^(6*n)";
}  // namespace

TEST_CASE("parse and evaluate the built-in summands") {
  auto k2 = parse(kK2Summand, {"n"});
  CHECK(eval_exact(k2, {{"n", 0}}) == Rational(5));
  CHECK(eval_exact(k2, {{"n", 1}}) == Rational(47, 512));
  CHECK(eval_exact(k2, {{"n", 2}}) == k2_term(2));

  auto rhs = parse("5*p*(-1)^((p-1)/2)", {"p"});
  CHECK(eval_exact(rhs, {{"p", 3}}) == Rational(-15));
  CHECK(eval_exact(rhs, {{"p", 5}}) == Rational(25));

  auto g7 = parse(kG7Summand, {"n"});
  CHECK(eval_exact(g7, {{"n", 1}}) == Rational(259, 8192));
}

TEST_CASE("sums agree with the builtin series") {
  auto k2 = parse(kK2Summand, {"n"});
  CHECK(sum_series(k2, "n", 0) == Rational(5));
  CHECK(sum_series(k2, "n", 1) == Rational(2607, 512));
  for (long long N : {5LL, 20LL, 50LL}) CHECK(sum_series(k2, "n", N) == s_k2(N));
  auto g7 = parse(kG7Summand, {"n"});
  CHECK(sum_series(g7, "n", 1) == Rational(8451, 8192));
  for (long long N : {5LL, 20LL, 50LL}) CHECK(sum_series(g7, "n", N) == s_g7(N));
}

TEST_CASE("parse errors carry locations") {
  try {
    parse("poch(1/2,m)", {"n"});
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.offset == 9);
    CHECK(e.line == 1);
    CHECK(e.column == 10);
    CHECK(std::string(e.what()).find("unknown variable") != std::string::npos);
  }

  CHECK_THROWS_AS(parse("1 +", {}), ParseError);
  CHECK_THROWS_AS(parse("(1+2", {}), ParseError);
  CHECK_THROWS_AS(parse("1 ~ 2", {}), ParseError);
  CHECK_THROWS_AS(parse("poch(n,1)", {"n"}), ParseError);  // base must be rational
  CHECK_THROWS_AS(parse("2 2", {}), ParseError);           // no implicit '*'
  CHECK_THROWS_AS(parse("", {}), ParseError);
  CHECK_THROWS_AS(parse("poch(1/0,n)", {"n"}), ParseError);

  try {
    parse("1 +\n* 2", {});
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.line == 2);
    CHECK(e.column == 1);
  }
}

TEST_CASE("evaluation errors") {
  CHECK_THROWS_AS(eval_exact(parse("2^(p/2)", {"p"}), {{"p", 3}}),
                  NonIntegerExponent);
  CHECK_THROWS_AS(eval_exact(parse("1/(n-1)", {"n"}), {{"n", 1}}), DivisionByZero);
  CHECK_THROWS_AS(eval_exact(parse("0^(0-1)", {}), {}), DivisionByZero);
  CHECK_THROWS_AS(eval_exact(parse("fact(0-2)", {}), {}), PoleError);
  CHECK_THROWS_AS(eval_exact(parse("poch(2,0-3)", {}), {}), PoleError);
  CHECK(eval_exact(parse("0^0", {}), {}) == Rational(1));
  CHECK(eval_exact(parse("64^n", {"n"}), {{"n", 0}}) == Rational(1));
}

TEST_CASE("precedence and associativity") {
  CHECK(eval_exact(parse("-2^2", {}), {}) == Rational(-4));
  CHECK(eval_exact(parse("2^3^2", {}), {}) == Rational(512));
  CHECK(eval_exact(parse("2^-2", {}), {}) == Rational(1, 4));
  CHECK(eval_exact(parse("1-2-3", {}), {}) == Rational(-4));
  CHECK(eval_exact(parse("24/2/3", {}), {}) == Rational(4));
  CHECK(eval_exact(parse("2+3*4", {}), {}) == Rational(14));
  CHECK(eval_exact(parse("2/3^2", {}), {}) == Rational(2, 9));
}

TEST_CASE("padic evaluation matches encode after exact evaluation") {
  auto k2 = parse(kK2Summand, {"n"});
  CHECK(padic_agrees(eval_padic(k2, {{"n", 2}}, 5, 10),
                     padic_encode(Rational(2403, 2097152), 5, 10)));
  CHECK(padic_agrees(eval_padic(k2, {{"n", 1}}, 7, 8),
                     padic_encode(Rational(47, 512), 7, 8)));
  CHECK(eval_padic(parse("0", {}), {}, 5, 6).is_exact_zero());
  CHECK(padic_agrees(sum_series_padic(k2, "n", 3, 11, 12),
                     padic_encode(s_k2(3), 11, 12)));
}

TEST_CASE("randomized padic vs exact") {
  const std::vector<std::string> sources{
      "poch(1/2,n)^3 / fact(n)^3 * (42*n+5) / 64^n",
      "poch(-3/2,n) * (n+2)^2 - fact(n)/(n+1)",
      "(2*n+1)^3 * (42*n+47) / (512*(n+1)^3*(42*n+5))",
      "poch(1/2,n)*poch(1/2,0-n)*(0-1)^n",
      "(n^2-3*n+7)/(n+5)",
  };
  const std::vector<long long> primes{3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47};
  std::mt19937_64 rng(77);
  std::uniform_int_distribution<int> pick_src(0, static_cast<int>(sources.size()) - 1);
  std::uniform_int_distribution<int> pick_p(0, static_cast<int>(primes.size()) - 1);
  std::uniform_int_distribution<long long> pick_n(0, 12);
  int done = 0;
  while (done < 300) {
    auto ast = parse(sources[static_cast<std::size_t>(pick_src(rng))], {"n"});
    long long p = primes[static_cast<std::size_t>(pick_p(rng))];
    Bindings env{{"n", pick_n(rng)}};
    Rational exact = eval_exact(ast, env);
    PadicScaled modular = eval_padic(ast, env, p, 10);
    INFO("n=" << env["n"] << " p=" << p);
    CHECK(padic_agrees(modular, padic_encode(exact, p, 10)));
    ++done;
  }
}

TEST_CASE("pretty-print round trip") {
  const std::vector<std::string> corpus{
      kK2Summand,
      kG7Summand,
      "5*p*(-1)^((p-1)/2)",
      "p^3*(-1)^((p-1)/2)",
      "(p^r-1)/2",
      "4*r",
      "8*r",
      "-n",
      "-(n+1)",
      "n-(n-1)",
      "2^3^2",
      "-2^2",
      "2^-2",
      "(n+1)*(n+2)/(n+3)",
      "poch(-1/2,n+1)",
      "fact(2*n)",
      "1/2/3",
      "n^2-3*n+7",
      "poch(3,n)^2*poch(1/2,2*n)",
      "42",
  };
  for (const auto& src : corpus) {
    std::vector<std::string> vars{"n", "p", "r"};
    auto first = parse(src, vars);
    auto printed = pretty_print(first);
    INFO(src << "  ->  " << printed);
    auto second = parse(printed, vars);
    CHECK(ast_equal(first.root, second.root));
    CHECK(pretty_print(second) == printed);
  }
}
