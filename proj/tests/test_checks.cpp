#include "catch_amalgamated.hpp"

#include "supercong/checks.hpp"
#include "supercong/wz.hpp"

using namespace supercong;

TEST_CASE("check_k2 small primes") {
  auto r3 = check_k2(3);
  CHECK(r3.pass);
  CHECK(r3.achieved == ValOrInf::finite(4));
  CHECK(r3.lhs_digest == "2607/512");
  CHECK(r3.rhs_digest == "-15");

  auto r5 = check_k2(5);
  CHECK(r5.pass);
  CHECK(r5.achieved == ValOrInf::finite(4));
  // s_k2(2) - 25 = -5^4 * 66797 / 2^21
  CHECK(s_k2(2) - 25 == make_rational(Int(-625) * 66797, ipow(2, 21)));

  CHECK(check_k2(7).pass);
  CHECK_THROWS_AS(check_k2(4), std::domain_error);
}

TEST_CASE("check_k2 backends agree") {
  CheckOptions exact;
  exact.backend = Backend::Exact;
  CheckOptions padic;
  padic.backend = Backend::Padic;
  for (long long p : {3LL, 5LL, 17LL, 97LL, 149LL}) {
    auto a = check_k2(p, exact);
    auto b = check_k2(p, padic);
    CHECK(a.pass == b.pass);
    CHECK(a.achieved == b.achieved);
  }
}

TEST_CASE("check_swisher") {
  // r = 1 coincides with the main theorem since S(0) = 5
  for (long long p : primes_in_range(3, 100)) {
    auto sw = check_swisher(p, 1);
    auto k2 = check_k2(p);
    CHECK(sw.pass == k2.pass);
    CHECK(sw.achieved == k2.achieved);
    CHECK(sw.required == ValOrInf::finite(4));
  }
  auto s32 = check_swisher(3, 2);
  CHECK(s32.required == ValOrInf::finite(8));
  CHECK(s32.pass);
  CHECK(s32.achieved == ValOrInf::finite(8));

  // exact cross-check of the r = 2 statement at p = 3
  Rational lhs = s_k2(4);
  Rational rhs = Rational(-3) * s_k2(1);
  CHECK(vp(lhs - rhs, 3) >= 8);

  auto s52 = check_swisher(5, 2);
  CHECK(s52.required == ValOrInf::finite(8));
  CHECK(s52.pass);
  CheckOptions exact;
  exact.backend = Backend::Exact;
  auto s52e = check_swisher(5, 2, exact);
  CHECK(s52e.pass == s52.pass);
  CHECK(s52e.achieved == s52.achieved);
}

TEST_CASE("check_g7 and the p=5 exception") {
  auto g3 = check_g7(3, 1);
  CHECK(g3.required == ValOrInf::finite(8));
  CHECK(g3.pass);
  // tilde-S(1) = 8451/8192 against 27*(-1)
  CHECK(s_g7(1) == Rational(8451, 8192));
  CHECK(vp(s_g7(1) + 27, 3) == ValOrInf::finite(8));

  auto g5 = check_g7(5, 1);
  CHECK(g5.required == ValOrInf::finite(7));
  CHECK(g5.pass);
  CHECK(g5.achieved == ValOrInf::finite(7));

  CHECK(check_g7(7, 1).pass);
  CHECK(required_g7(5, 2) == ValOrInf::finite(15));
  CHECK(required_g7(7, 2) == ValOrInf::finite(16));
}

TEST_CASE("lemma checks") {
  auto k1 = check_lemma_key1(5);
  CHECK(k1.pass);
  CHECK(k1.achieved == ValOrInf::finite(3));  // 9009 - 9 = 9000 = 2^3 3^2 5^3
  auto k17 = check_lemma_key1(7);
  CHECK(k17.pass);
  CHECK(k17.achieved == ValOrInf::finite(3));  // 6235515 + 225 = 7^3 * 18180
  CHECK(Rational(6235515) + 225 == Rational(343) * 18180);
  CHECK_THROWS_AS(check_lemma_key1(3), std::domain_error);

  auto k2_3 = check_lemma_key2(3);
  CHECK(k2_3.pass);
  CHECK(k2_3.achieved == ValOrInf::finite(4));
  CHECK(check_lemma_key2(5).pass);
  CHECK(check_lemma_key2(11).pass);

  auto e5 = check_easier(5);
  CHECK(e5.pass);
  CHECK(e5.achieved == ValOrInf::finite(2));
  CHECK(check_easier(7).pass);
  CHECK_THROWS_AS(check_easier(3), std::domain_error);
}

TEST_CASE("claim checks") {
  auto f3 = check_fclaim(3);
  CHECK(f3.pass);
  CHECK(f3.achieved == ValOrInf::finite(4));
  CHECK(Rational(315, 32) + 18 == make_rational(Int(81) * 11, 32));
  CHECK(check_fclaim(5).rhs_digest == "30");
  CHECK(check_fclaim(5).pass);
  CHECK(check_fclaim(7).rhs_digest == "-42");
  CHECK(check_fclaim(7).pass);

  auto g3 = check_gclaim(3);
  CHECK(g3.pass);
  CHECK(g3.rhs_digest == "3");
  CHECK(check_gclaim(5).rhs_digest == "-5");
  CHECK(check_gclaim(5).pass);
  CHECK(check_gclaim(7).rhs_digest == "7");
  CHECK(check_gclaim(7).pass);

  auto s3 = check_gstep2(3);
  CHECK(s3.pass);
  CHECK(wz_g(2, 1) - 3 == make_rational(Int(-81) * 19, 512));
  CHECK(check_gstep2(5).pass);
  CHECK(check_gstep2(11).pass);
}

TEST_CASE("classical inputs") {
  auto m5 = check_morley(5);
  CHECK(m5.pass);
  CHECK(binomial(4, 2) - 256 == Rational(-250));  // -2 * 5^3
  auto m7 = check_morley(7);
  CHECK(m7.pass);
  CHECK(binomial(6, 3) + 4096 == Rational(4116));  // 2^2 * 3 * 7^3
  CHECK_THROWS_AS(check_morley(3), std::domain_error);
  // the excluded case genuinely fails mod 27
  CHECK_FALSE(congruent(binomial(2, 1), Rational(-4), 3, 3).ok);

  CHECK(check_wolstenholme(5).lhs_digest == "25/12");
  CHECK(check_wolstenholme(5).pass);
  CHECK(check_wolstenholme(7).lhs_digest == "49/20");
  CHECK(check_wolstenholme(7).pass);
  CHECK_THROWS_AS(check_wolstenholme(3), std::domain_error);

  auto h5 = check_h2(5);
  CHECK(h5.pass);
  CHECK(h5.lhs_digest == "205/144");
  CHECK(h5.rhs_digest == "5/4");

  auto p3 = check_p2(3);
  CHECK(p3.pass);
  CHECK(p3.achieved.is_inf);
  CHECK(p3.lhs_digest == "1/2");
  auto p5 = check_p2(5);
  CHECK(p5.pass);
  CHECK(p5.lhs_digest == "3/16");
  CHECK(check_p2(13).pass);
}

TEST_CASE("proof skeleton implication") {
  // fclaim & gclaim & telescoping at p imply the main congruence
  for (long long p : {3LL, 5LL, 7LL, 11LL, 13LL, 17LL, 19LL, 23LL, 29LL, 31LL,
                      37LL, 41LL, 43LL, 47LL}) {
    bool f = check_fclaim(p).pass;
    bool g = check_gclaim(p).pass;
    bool t = telescoping_check(p).ok;
    bool k = check_k2(p).pass;
    REQUIRE(f);
    REQUIRE(g);
    REQUIRE(t);
    CHECK(k);
  }
}

TEST_CASE("registry") {
  CHECK(check_registry().size() == 13);
  const CheckInfo* k2 = find_check("k2");
  REQUIRE(k2 != nullptr);
  CHECK(k2->min_p == 3);
  CHECK(find_check("morley")->min_p == 5);
  CHECK(find_check("bogus") == nullptr);
  CHECK(find_check("g7")->required(5, 1) == ValOrInf::finite(7));
  CHECK(find_check("g7")->required(7, 1) == ValOrInf::finite(8));
  CHECK(find_check("p2")->required(7, 1).is_inf);
}

TEST_CASE("sweep") {
  auto one = sweep({"k2"}, 3, 3, 1, 1);
  REQUIRE(one.size() == 1);
  CHECK(one[0].status == CheckStatus::Passed);

  auto reports = sweep({"k2", "morley"}, 3, 20, 1, 4);
  REQUIRE(reports.size() == 14);  // primes {3,5,7,11,13,17,19} x 2 checks
  CHECK(reports[0].check_name == "k2");
  CHECK(reports[0].p == 3);
  CHECK(reports[1].check_name == "morley");
  CHECK(reports[1].p == 3);
  CHECK(reports[1].status == CheckStatus::Skipped);
  CHECK(reports[1].note.find("hypothesis not met") != std::string::npos);
  for (std::size_t i = 2; i < reports.size(); ++i)
    CHECK(reports[i].status == CheckStatus::Passed);

  CHECK(sweep({}, 3, 100, 1, 1).empty());
  CHECK_THROWS_AS(sweep({"nope"}, 3, 10, 1, 1), std::invalid_argument);

  // one record per prime in [3, 50] (there are 14 of them), all passing
  auto wide = sweep({"k2"}, 3, 50, 1, 8);
  CHECK(wide.size() == 14);
  for (const auto& rep : wide) CHECK(rep.status == CheckStatus::Passed);
}

TEST_CASE("sweep is deterministic in the worker count") {
  auto a = sweep({"k2", "key2", "morley"}, 3, 60, 1, 1);
  auto b = sweep({"k2", "key2", "morley"}, 3, 60, 1, 8);
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].check_name == b[i].check_name);
    CHECK(a[i].p == b[i].p);
    CHECK(a[i].status == b[i].status);
    CHECK(a[i].achieved == b[i].achieved);
    CHECK(a[i].lhs_digest == b[i].lhs_digest);
  }
}

TEST_CASE("sweep aggregates errors without aborting") {
  // r = 40 overflows the truncation bound; swisher errors, k2 is unaffected
  auto reports = sweep({"swisher", "k2"}, 3, 5, 40, 2);
  REQUIRE(reports.size() == 4);
  for (const auto& rep : reports) {
    if (rep.check_name == "k2") CHECK(rep.status == CheckStatus::Passed);
    if (rep.check_name == "swisher") {
      CHECK(rep.status == CheckStatus::Error);
      CHECK_FALSE(rep.note.empty());
    }
  }
}

TEST_CASE("precision exhausted is raised, not guessed") {
  CheckOptions opt;
  opt.backend = Backend::Padic;
  opt.guard_digits = 0;
  // With no guard digits a swisher difference of valuation exactly 4r can
  // exceed the surviving window only in contrived cases; force one by
  // requesting far more than the window can hold.
  PadicScaled tiny = padic_encode(Rational(1), 5, 2);
  PadicScaled same = padic_encode(Rational(1), 5, 2);
  PadicScaled diff = tiny - same;
  CHECK(diff.is_indistinguishable_from_zero());
  CHECK(diff.valuation_lower_bound() == 2);
  CHECK_THROWS_AS(detail::finish_padic("t", 5, 1, 6, tiny, same),
                  PrecisionExhausted);
}
