#pragma once

#include <atomic>
#include <string>
#include <string_view>
#include <thread>
#include <vector>

#include "supercong/checks.hpp"
#include "supercong/dsl.hpp"
#include "supercong/errors.hpp"
#include "supercong/primes.hpp"
#include "supercong/report.hpp"

namespace supercong {

// One user-defined congruence family:
//   sum_{n=0}^{terms(p,r)} summand(n)  ==  rhs(p,r)   (mod p^modexp(r))
struct SeriesSpec {
  std::string name;
  SummandAst summand;  // over {n}
  SummandAst rhs;      // over {p, r}
  SummandAst modexp;   // over {r}
  SummandAst terms;    // over {p, r}
};

namespace series_file_detail {

struct Line {
  std::string text;
  std::size_t offset;  // byte offset of the line start
  int number;          // 1-based
};

inline bool blank(const std::string& s) {
  for (char c : s)
    if (!std::isspace(static_cast<unsigned char>(c))) return false;
  return true;
}

[[noreturn]] inline void fail_line(const Line& ln, const std::string& message) {
  throw ParseError(message, ln.offset, ln.number, 1);
}

inline SummandAst parse_value(const Line& ln, std::size_t value_pos,
                              const std::string& value,
                              const std::vector<std::string>& vars) {
  try {
    return parse(value, vars);
  } catch (const ParseError& e) {
    // Re-anchor the inner location to the series file.
    throw ParseError(std::string(e.what()), ln.offset + value_pos + e.offset,
                     ln.number, static_cast<int>(value_pos) + e.column,
                     e.expected);
  }
}

}  // namespace series_file_detail

// Plain-text block format: blocks separated by blank lines, one `key=expr`
// per line, keys name/summand/rhs/modexp/terms. Lines starting with '#' are
// comments.
inline std::vector<SeriesSpec> parse_series_file(std::string_view text) {
  using series_file_detail::Line;
  std::vector<Line> lines;
  {
    std::size_t start = 0;
    int number = 1;
    while (start <= text.size()) {
      std::size_t end = text.find('\n', start);
      if (end == std::string_view::npos) end = text.size();
      lines.push_back({std::string(text.substr(start, end - start)), start, number});
      start = end + 1;
      ++number;
      if (end == text.size()) break;
    }
  }

  std::vector<SeriesSpec> out;
  struct Pending {
    std::string name, summand, rhs, modexp, terms;
    Line name_line{{}, 0, 0}, summand_line{{}, 0, 0}, rhs_line{{}, 0, 0},
        modexp_line{{}, 0, 0}, terms_line{{}, 0, 0};
    std::size_t summand_pos = 0, rhs_pos = 0, modexp_pos = 0, terms_pos = 0;
    bool any = false;
  } cur;

  auto flush = [&](const Line& at) {
    if (!cur.any) return;
    if (cur.name.empty())
      series_file_detail::fail_line(at, "series block is missing 'name='");
    auto need = [&](const std::string& v, const char* key) {
      if (v.empty())
        series_file_detail::fail_line(
            at, "series block '" + cur.name + "' is missing '" + key + "='");
    };
    need(cur.summand, "summand");
    need(cur.rhs, "rhs");
    need(cur.modexp, "modexp");
    need(cur.terms, "terms");
    SeriesSpec spec{
        cur.name,
        series_file_detail::parse_value(cur.summand_line, cur.summand_pos,
                                        cur.summand, {"n"}),
        series_file_detail::parse_value(cur.rhs_line, cur.rhs_pos, cur.rhs,
                                        {"p", "r"}),
        series_file_detail::parse_value(cur.modexp_line, cur.modexp_pos,
                                        cur.modexp, {"r"}),
        series_file_detail::parse_value(cur.terms_line, cur.terms_pos, cur.terms,
                                        {"p", "r"}),
    };
    out.push_back(std::move(spec));
    cur = Pending{};
  };

  for (const Line& ln : lines) {
    if (series_file_detail::blank(ln.text)) {
      flush(ln);
      continue;
    }
    std::size_t first = ln.text.find_first_not_of(" \t");
    if (ln.text[first] == '#') continue;
    std::size_t eq = ln.text.find('=');
    if (eq == std::string::npos)
      series_file_detail::fail_line(ln, "expected 'key=value'");
    std::string key = ln.text.substr(first, eq - first);
    while (!key.empty() && std::isspace(static_cast<unsigned char>(key.back())))
      key.pop_back();
    std::size_t vpos = eq + 1;
    std::string value = ln.text.substr(vpos);

    auto set = [&](std::string& slot, Line& slot_line, std::size_t& slot_pos) {
      if (!slot.empty())
        series_file_detail::fail_line(ln, "duplicate key '" + key + "'");
      slot = value;
      slot_line = ln;
      slot_pos = vpos;
      cur.any = true;
    };
    if (key == "name") {
      if (!cur.name.empty())
        series_file_detail::fail_line(ln, "duplicate key 'name'");
      // trim
      std::size_t a = value.find_first_not_of(" \t");
      std::size_t b = value.find_last_not_of(" \t");
      cur.name = a == std::string::npos ? "" : value.substr(a, b - a + 1);
      if (cur.name.empty())
        series_file_detail::fail_line(ln, "empty series name");
      cur.any = true;
      cur.name_line = ln;
    } else if (key == "summand") {
      set(cur.summand, cur.summand_line, cur.summand_pos);
    } else if (key == "rhs") {
      set(cur.rhs, cur.rhs_line, cur.rhs_pos);
    } else if (key == "modexp") {
      set(cur.modexp, cur.modexp_line, cur.modexp_pos);
    } else if (key == "terms") {
      set(cur.terms, cur.terms_line, cur.terms_pos);
    } else {
      series_file_detail::fail_line(ln, "unknown key '" + key + "'");
    }
  }
  flush(lines.empty() ? Line{"", 0, 1} : lines.back());
  return out;
}

// Generic congruence for one series block at one prime.
inline CheckReport run_series_check(const SeriesSpec& spec, long long p, int r,
                                    const CheckOptions& opt = {}) {
  detail::require_odd_prime(p, "series check");
  const Bindings pr{{"p", p}, {"r", r}};
  const long long N = dsl_detail::to_index(eval_exact(spec.terms, pr), "terms");
  if (N < 0) throw std::domain_error("terms expression is negative");
  const long long k =
      dsl_detail::to_index(eval_exact(spec.modexp, {{"r", r}}), "modexp");
  if (k < 1) throw std::domain_error("modexp expression must be >= 1");
  const Rational rhs = eval_exact(spec.rhs, pr);

  if (detail::use_exact(opt, p, N)) {
    CheckReport rep = detail::finish_exact(spec.name, p, r, ValOrInf::finite(k),
                                           sum_series(spec.summand, "n", N), rhs);
    return rep;
  }
  const int prec = static_cast<int>(k) + opt.guard_digits;
  PadicScaled lhs = sum_series_padic(spec.summand, "n", N, p, prec);
  return detail::finish_padic(spec.name, p, r, k, lhs,
                              padic_encode(rhs, p, prec));
}

// Sweeps every block over the prime range; same ordering and skip semantics
// as the built-in sweep.
inline std::vector<CheckReport> dsl_sweep(const std::vector<SeriesSpec>& specs,
                                          long long p_lo, long long p_hi, int r,
                                          unsigned workers,
                                          const CheckOptions& opt = {}) {
  if (p_lo > p_hi) throw std::invalid_argument("dsl_sweep: p_lo > p_hi");
  std::vector<const SeriesSpec*> ordered;
  for (const auto& s : specs) ordered.push_back(&s);
  std::sort(ordered.begin(), ordered.end(),
            [](const SeriesSpec* a, const SeriesSpec* b) { return a->name < b->name; });

  const std::vector<long long> primes = primes_in_range(p_lo, p_hi);
  struct Task {
    const SeriesSpec* spec;
    long long p;
  };
  std::vector<Task> tasks;
  for (long long p : primes)
    for (const SeriesSpec* s : ordered) tasks.push_back({s, p});

  std::vector<CheckReport> out(tasks.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= tasks.size()) return;
      const Task& t = tasks[i];
      CheckReport& rep = out[i];
      if (t.p == 2) {
        rep.check_name = t.spec->name;
        rep.p = 2;
        rep.r = r;
        rep.achieved = ValOrInf::finite(-1);
        rep.status = CheckStatus::Skipped;
        rep.note = "hypothesis not met: requires odd prime";
        continue;
      }
      const auto t0 = std::chrono::steady_clock::now();
      try {
        rep = run_series_check(*t.spec, t.p, r, opt);
      } catch (const PrecisionExhausted& e) {
        rep.check_name = t.spec->name;
        rep.p = t.p;
        rep.r = r;
        rep.status = CheckStatus::Error;
        rep.precision_exhausted = true;
        rep.note = e.what();
      } catch (const std::exception& e) {
        rep.check_name = t.spec->name;
        rep.p = t.p;
        rep.r = r;
        rep.status = CheckStatus::Error;
        rep.note = e.what();
      }
      const auto t1 = std::chrono::steady_clock::now();
      rep.elapsed_ms =
          std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count();
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
