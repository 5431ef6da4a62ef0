#pragma once

#include <algorithm>
#include <atomic>
#include <cassert>
#include <chrono>
#include <stdexcept>
#include <string>
#include <string_view>
#include <thread>
#include <vector>

#include "supercong/combinat.hpp"
#include "supercong/padic.hpp"
#include "supercong/primes.hpp"
#include "supercong/report.hpp"
#include "supercong/series.hpp"

namespace supercong {

enum class Backend { Auto, Exact, Padic };

struct CheckOptions {
  Backend backend = Backend::Auto;
  // Extra p-adic digits beyond the required valuation, so additive
  // cancellation cannot corrupt a verdict.
  int guard_digits = 10;
  // Auto picks the exact backend when both p and the truncation index stay
  // at or below this bound.
  long long exact_threshold = 200;
};

namespace detail {

inline int sign_pow(long long e) { return e % 2 == 0 ? 1 : -1; }

inline void require_odd_prime(long long p, const char* who) {
  if (p < 3 || p % 2 == 0)
    throw std::domain_error(std::string(who) + ": requires an odd prime");
}

inline void require_prime_gt3(long long p, const char* who) {
  if (p <= 3)
    throw std::domain_error(std::string(who) + ": requires prime p > 3");
}

inline CheckReport finish_exact(std::string name, long long p, int r,
                                ValOrInf required, const Rational& lhs,
                                const Rational& rhs) {
  CheckReport rep;
  rep.check_name = std::move(name);
  rep.p = p;
  rep.r = r;
  rep.required = required;
  rep.achieved = vp(lhs - rhs, p);
  rep.pass = rep.achieved >= rep.required;
  rep.status = rep.pass ? CheckStatus::Passed : CheckStatus::Failed;
  rep.lhs_digest = decimal_digest(lhs);
  rep.rhs_digest = decimal_digest(rhs);
  return rep;
}

inline CheckReport finish_padic(std::string name, long long p, int r,
                                long long required, const PadicScaled& lhs,
                                const PadicScaled& rhs) {
  CheckReport rep;
  rep.check_name = std::move(name);
  rep.p = p;
  rep.r = r;
  rep.required = ValOrInf::finite(required);
  PadicScaled diff = lhs - rhs;
  if (diff.is_exact_zero()) {
    rep.achieved = ValOrInf::infinity();
  } else if (!diff.is_indistinguishable_from_zero()) {
    rep.achieved = ValOrInf::finite(diff.exponent());
  } else {
    const long long bound = diff.valuation_lower_bound();
    if (bound < required)
      throw PrecisionExhausted(rep.check_name +
                               ": verdict needs digits beyond precision");
    rep.achieved = ValOrInf::finite(bound);
    rep.achieved_is_lower_bound = true;
  }
  rep.pass = rep.achieved >= rep.required;
  rep.status = rep.pass ? CheckStatus::Passed : CheckStatus::Failed;
  rep.lhs_digest = lhs.digest();
  rep.rhs_digest = rhs.digest();
  return rep;
}

inline bool use_exact(const CheckOptions& o, long long p, long long truncation) {
  switch (o.backend) {
    case Backend::Exact: return true;
    case Backend::Padic: return false;
    case Backend::Auto: break;
  }
  return p <= o.exact_threshold && truncation <= o.exact_threshold;
}

// (p^r - 1) / 2 as a machine integer, with a sanity cap.
inline long long truncation_index(long long p, int r) {
  Int n = (ipow(p, static_cast<unsigned long long>(r)) - 1) / 2;
  if (n > 1'000'000'000)
    throw std::domain_error("truncation index (p^r-1)/2 too large");
  return n.convert_to<long long>();
}

}  // namespace detail

// --------------------------------------------------------------------------
// Required-valuation registry (self-describing reports; the p = 5 exception
// of the degree-7 conjecture lives here, not at call sites).
// --------------------------------------------------------------------------

inline ValOrInf required_k2(long long, int) { return ValOrInf::finite(4); }
inline ValOrInf required_swisher(long long, int r) { return ValOrInf::finite(4LL * r); }
inline ValOrInf required_g7(long long p, int r) {
  return ValOrInf::finite(8LL * r - (p == 5 ? 1 : 0));
}
inline ValOrInf required_key1(long long, int) { return ValOrInf::finite(3); }
inline ValOrInf required_key2(long long, int) { return ValOrInf::finite(3); }
inline ValOrInf required_easier(long long, int) { return ValOrInf::finite(2); }
inline ValOrInf required_fclaim(long long, int) { return ValOrInf::finite(4); }
inline ValOrInf required_gclaim(long long, int) { return ValOrInf::finite(4); }
inline ValOrInf required_gstep2(long long, int) { return ValOrInf::finite(4); }
inline ValOrInf required_morley(long long, int) { return ValOrInf::finite(3); }
inline ValOrInf required_wolstenholme(long long, int) { return ValOrInf::finite(2); }
inline ValOrInf required_h2(long long, int) { return ValOrInf::finite(1); }
inline ValOrInf required_p2(long long, int) { return ValOrInf::infinity(); }

// --------------------------------------------------------------------------
// Checkers.
// --------------------------------------------------------------------------

// Main theorem: sum_{n=0}^{(p-1)/2} of the (K.2) summand == 5p(-1)^((p-1)/2)
// (mod p^4).
inline CheckReport check_k2(long long p, const CheckOptions& opt = {}) {
  detail::require_odd_prime(p, "check_k2");
  const long long N = (p - 1) / 2;
  const Rational rhs(5 * p * detail::sign_pow((p - 1) / 2));
  if (detail::use_exact(opt, p, N))
    return detail::finish_exact("k2", p, 1, required_k2(p, 1), s_k2(N), rhs);
  const int prec = 4 + opt.guard_digits;
  return detail::finish_padic("k2", p, 1, 4, s_k2_padic(N, p, prec),
                              padic_encode(rhs, p, prec));
}

// Swisher extension: S((p^r-1)/2) == p(-1)^((p-1)/2) S((p^(r-1)-1)/2)
// (mod p^(4r)).
inline CheckReport check_swisher(long long p, int r, const CheckOptions& opt = {}) {
  detail::require_odd_prime(p, "check_swisher");
  if (r < 1) throw std::domain_error("check_swisher: requires r >= 1");
  const long long N_hi = detail::truncation_index(p, r);
  const long long N_lo = detail::truncation_index(p, r - 1);
  const long long required = 4LL * r;
  const Rational scale(p * detail::sign_pow((p - 1) / 2));
  if (detail::use_exact(opt, p, N_hi))
    return detail::finish_exact("swisher", p, r, required_swisher(p, r),
                                s_k2(N_hi), scale * s_k2(N_lo));
  const int prec = static_cast<int>(required) + opt.guard_digits;
  PadicScaled lhs = s_k2_padic(N_hi, p, prec);
  PadicScaled rhs = padic_encode(scale, p, prec) * s_k2_padic(N_lo, p, prec);
  return detail::finish_padic("swisher", p, r, required, lhs, rhs);
}

// Gourevitch degree-7 analogue: required modulus p^(8r), except p^(8r-1)
// at p = 5.
inline CheckReport check_g7(long long p, int r, const CheckOptions& opt = {}) {
  detail::require_odd_prime(p, "check_g7");
  if (r < 1) throw std::domain_error("check_g7: requires r >= 1");
  const long long N_hi = detail::truncation_index(p, r);
  const long long N_lo = detail::truncation_index(p, r - 1);
  const ValOrInf required = required_g7(p, r);
  const Rational scale(Int(p) * p * p * detail::sign_pow((p - 1) / 2));
  if (detail::use_exact(opt, p, N_hi))
    return detail::finish_exact("g7", p, r, required, s_g7(N_hi),
                                scale * s_g7(N_lo));
  const int prec = static_cast<int>(required.v) + opt.guard_digits;
  PadicScaled lhs = s_g7_padic(N_hi, p, prec);
  PadicScaled rhs = padic_encode(scale, p, prec) * s_g7_padic(N_lo, p, prec);
  return detail::finish_padic("g7", p, r, required.v, lhs, rhs);
}

// Lemma: prod_{k=1}^{p-1}(p+2k) == (-1)^((p-1)/2) prod (2k-1)^2 (mod p^3).
inline CheckReport check_lemma_key1(long long p, const CheckOptions& = {}) {
  detail::require_prime_gt3(p, "check_lemma_key1");
  auto [lhs, rhs] = key1_sides(p);
  return detail::finish_exact("key1", p, 1, required_key1(p, 1), lhs, rhs);
}

// Lemma: the shifted alternating sum vanishes mod p^3.
inline CheckReport check_lemma_key2(long long p, const CheckOptions& = {}) {
  detail::require_odd_prime(p, "check_lemma_key2");
  return detail::finish_exact("key2", p, 1, required_key2(p, 1), key2_sum(p),
                              Rational(0));
}

// sum_{n=1}^{p-1} (1-p/2)_{n-1}^2 / (n!(1-3p/2)_{n-1}) == 0 (mod p^2).
inline CheckReport check_easier(long long p, const CheckOptions& = {}) {
  detail::require_prime_gt3(p, "check_easier");
  return detail::finish_exact("easier", p, 1, required_easier(p, 1),
                              easier_sum(p), Rational(0));
}

// F((p-1)/2, p) == 6p(-1)^((p-1)/2) (mod p^4).
inline CheckReport check_fclaim(long long p, const CheckOptions& = {}) {
  detail::require_odd_prime(p, "check_fclaim");
  const Rational rhs(6 * p * detail::sign_pow((p - 1) / 2));
  return detail::finish_exact("fclaim", p, 1, required_fclaim(p, 1),
                              wz_f((p - 1) / 2, p), rhs);
}

// sum_{k=1}^{p} G((p+1)/2, k) == p(-1)^((p+1)/2) (mod p^4).
inline CheckReport check_gclaim(long long p, const CheckOptions& = {}) {
  detail::require_odd_prime(p, "check_gclaim");
  const Rational rhs(p * detail::sign_pow((p + 1) / 2));
  return detail::finish_exact("gclaim", p, 1, required_gclaim(p, 1),
                              g_row_sum(p), rhs);
}

// G((p+1)/2, 1) == (-1)^((p+1)/2) p (mod p^4).
inline CheckReport check_gstep2(long long p, const CheckOptions& = {}) {
  detail::require_odd_prime(p, "check_gstep2");
  const Rational rhs(p * detail::sign_pow((p + 1) / 2));
  return detail::finish_exact("gstep2", p, 1, required_gstep2(p, 1),
                              wz_g((p + 1) / 2, 1), rhs);
}

// Morley: binom(p-1, (p-1)/2) == (-1)^((p-1)/2) 2^(2p-2) (mod p^3).
inline CheckReport check_morley(long long p, const CheckOptions& = {}) {
  detail::require_prime_gt3(p, "check_morley");
  Rational rhs(ipow(2, static_cast<unsigned long long>(2 * p - 2)));
  if (detail::sign_pow((p - 1) / 2) < 0) rhs = -rhs;
  return detail::finish_exact("morley", p, 1, required_morley(p, 1),
                              binomial(p - 1, (p - 1) / 2), rhs);
}

// Wolstenholme: H_{p-1}^{(1)} == 0 (mod p^2).
inline CheckReport check_wolstenholme(long long p, const CheckOptions& = {}) {
  detail::require_prime_gt3(p, "check_wolstenholme");
  return detail::finish_exact("wolstenholme", p, 1, required_wolstenholme(p, 1),
                              harmonic(p - 1, 1), Rational(0));
}

// H_{p-1}^{(2)} == H_{(p-1)/2}^{(2)} == 0 (mod p): both sums must vanish.
inline CheckReport check_h2(long long p, const CheckOptions& = {}) {
  detail::require_prime_gt3(p, "check_h2");
  const Rational full = harmonic(p - 1, 2);
  const Rational half = harmonic((p - 1) / 2, 2);
  CheckReport rep;
  rep.check_name = "h2";
  rep.p = p;
  rep.required = required_h2(p, 1);
  rep.achieved = std::min(vp(full, p), vp(half, p));
  rep.pass = rep.achieved >= rep.required;
  rep.status = rep.pass ? CheckStatus::Passed : CheckStatus::Failed;
  rep.lhs_digest = decimal_digest(full);
  rep.rhs_digest = decimal_digest(half);
  return rep;
}

// Exact identity (1/2)_{(p-1)/2}/(1)_{(p-1)/2}^2 =
// binom(p-1,(p-1)/2) / (2^(p-2)(p-1)(1)_{(p-3)/2}); achieved reported +inf.
inline CheckReport check_p2(long long p, const CheckOptions& = {}) {
  detail::require_odd_prime(p, "check_p2");
  const long long m = (p - 1) / 2;
  Rational f = rising(Rational(1), m);
  const Rational lhs = rising(Rational(1, 2), m) / (f * f);
  const Rational rhs =
      binomial(p - 1, m) /
      (Rational(ipow(2, static_cast<unsigned long long>(p - 2))) * (p - 1) *
       rising(Rational(1), (p - 3) / 2));
  return detail::finish_exact("p2", p, 1, required_p2(p, 1), lhs, rhs);
}

// --------------------------------------------------------------------------
// Registry and sweep driver.
// --------------------------------------------------------------------------

struct CheckInfo {
  std::string_view name;
  long long min_p;  // 3 for odd primes, 5 for the p > 3 hypotheses
  bool uses_r;
  ValOrInf (*required)(long long p, int r);
  CheckReport (*run)(long long p, int r, const CheckOptions&);
  std::string_view summary;
};

namespace detail {
template <CheckReport (*F)(long long, const CheckOptions&)>
CheckReport ignore_r(long long p, int, const CheckOptions& o) {
  return F(p, o);
}
}  // namespace detail

inline const std::vector<CheckInfo>& check_registry() {
  static const std::vector<CheckInfo> table = {
      {"easier", 5, false, required_easier, detail::ignore_r<check_easier>,
       "intermediate sum vanishes mod p^2"},
      {"fclaim", 3, false, required_fclaim, detail::ignore_r<check_fclaim>,
       "F((p-1)/2,p) == 6p(-1)^((p-1)/2) mod p^4"},
      {"g7", 3, true,
       required_g7,
       [](long long p, int r, const CheckOptions& o) { return check_g7(p, r, o); },
       "degree-7 analogue mod p^(8r) (p=5: 8r-1)"},
      {"gclaim", 3, false, required_gclaim, detail::ignore_r<check_gclaim>,
       "sum of G((p+1)/2,k) == p(-1)^((p+1)/2) mod p^4"},
      {"gstep2", 3, false, required_gstep2, detail::ignore_r<check_gstep2>,
       "G((p+1)/2,1) == (-1)^((p+1)/2) p mod p^4"},
      {"h2", 5, false, required_h2, detail::ignore_r<check_h2>,
       "H_{p-1}^{(2)} and H_{(p-1)/2}^{(2)} vanish mod p"},
      {"k2", 3, false, required_k2, detail::ignore_r<check_k2>,
       "Van Hamme (K.2) mod p^4"},
      {"key1", 5, false, required_key1, detail::ignore_r<check_lemma_key1>,
       "odd-shift product lemma mod p^3"},
      {"key2", 3, false, required_key2, detail::ignore_r<check_lemma_key2>,
       "alternating Pochhammer sum vanishes mod p^3"},
      {"morley", 5, false, required_morley, detail::ignore_r<check_morley>,
       "Morley's congruence mod p^3"},
      {"p2", 3, false, required_p2, detail::ignore_r<check_p2>,
       "central Pochhammer/binomial identity (exact)"},
      {"swisher", 3, true,
       required_swisher,
       [](long long p, int r, const CheckOptions& o) {
         return check_swisher(p, r, o);
       },
       "Swisher extension mod p^(4r)"},
      {"wolstenholme", 5, false, required_wolstenholme,
       detail::ignore_r<check_wolstenholme>, "H_{p-1}^{(1)} vanishes mod p^2"},
  };
  return table;
}

inline const CheckInfo* find_check(std::string_view name) {
  for (const auto& info : check_registry())
    if (info.name == name) return &info;
  return nullptr;
}

// Runs one registered check, filling elapsed time and converting stray
// failures into error reports. Hypothesis violations become skips.
inline CheckReport run_check(const CheckInfo& info, long long p, int r,
                             const CheckOptions& opt) {
  CheckReport rep;
  if (p < info.min_p || p % 2 == 0) {
    rep.check_name = std::string(info.name);
    rep.p = p;
    rep.r = info.uses_r ? r : 1;
    rep.required = info.required(p, r);
    rep.achieved = ValOrInf::finite(-1);
    rep.status = CheckStatus::Skipped;
    rep.note = "hypothesis not met: requires " +
               std::string(info.min_p > 3 ? "prime p > 3" : "odd prime");
    return rep;
  }
  const auto t0 = std::chrono::steady_clock::now();
  try {
    rep = info.run(p, info.uses_r ? r : 1, opt);
  } catch (const PrecisionExhausted& e) {
    rep.check_name = std::string(info.name);
    rep.p = p;
    rep.r = info.uses_r ? r : 1;
    rep.required = info.required(p, r);
    rep.achieved = ValOrInf::finite(-1);
    rep.status = CheckStatus::Error;
    rep.pass = false;
    rep.precision_exhausted = true;
    rep.note = e.what();
  } catch (const std::exception& e) {
    rep.check_name = std::string(info.name);
    rep.p = p;
    rep.r = info.uses_r ? r : 1;
    rep.required = info.required(p, r);
    rep.achieved = ValOrInf::finite(-1);
    rep.status = CheckStatus::Error;
    rep.pass = false;
    rep.note = e.what();
  }
  const auto t1 = std::chrono::steady_clock::now();
  rep.elapsed_ms =
      std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count();
  return rep;
}

// Runs every named check over all primes in [p_lo, p_hi]. Primes that fail a
// check's hypothesis yield skipped reports rather than being dropped, so the
// record set is a deterministic function of the arguments. Scheduling across
// workers never affects output order: results land in pre-assigned slots
// ordered by (p, check_name).
inline std::vector<CheckReport> sweep(const std::vector<std::string>& checks,
                                      long long p_lo, long long p_hi, int r,
                                      unsigned workers,
                                      const CheckOptions& opt = {}) {
  if (p_lo > p_hi) throw std::invalid_argument("sweep: p_lo > p_hi");
  std::vector<const CheckInfo*> infos;
  for (const auto& name : checks) {
    const CheckInfo* info = find_check(name);
    if (info == nullptr)
      throw std::invalid_argument("unknown check name: " + name);
    infos.push_back(info);
  }
  std::sort(infos.begin(), infos.end(),
            [](const CheckInfo* a, const CheckInfo* b) { return a->name < b->name; });
  infos.erase(std::unique(infos.begin(), infos.end()), infos.end());

  const std::vector<long long> primes = primes_in_range(p_lo, p_hi);
  struct Task {
    const CheckInfo* info;
    long long p;
  };
  std::vector<Task> tasks;
  for (long long p : primes)
    for (const CheckInfo* info : infos) tasks.push_back({info, p});

  std::vector<CheckReport> out(tasks.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= tasks.size()) return;
      out[i] = run_check(*tasks[i].info, tasks[i].p, r, opt);
    }
  };
  workers = std::max(1u, workers);
  if (workers == 1 || tasks.size() <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    const unsigned n = std::min<unsigned>(workers, static_cast<unsigned>(tasks.size()));
    pool.reserve(n);
    for (unsigned i = 0; i < n; ++i) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  return out;
}

}  // namespace supercong
