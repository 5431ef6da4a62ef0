// Command-line front end: built-in congruence checks, prime sweeps, WZ
// certificate verification, user-defined series, and numeric sanity checks.
//
// Exit codes: 0 all checks passed; 1 at least one congruence failed;
// 2 usage/parse/config error; 3 precision exhausted.

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "supercong/supercong.hpp"

namespace {

using namespace supercong;

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitPrecision = 3;

struct CommonOptions {
  long long pmin = 3;
  long long pmax = 50;
  int r = 1;
  unsigned workers = 1;
  std::string backend = "auto";
  int guard = 10;
  long long exact_threshold = 200;

  CheckOptions check_options() const {
    CheckOptions o;
    o.backend = backend == "exact"   ? Backend::Exact
                : backend == "padic" ? Backend::Padic
                                     : Backend::Auto;
    o.guard_digits = guard;
    o.exact_threshold = exact_threshold;
    return o;
  }
};

void add_common(CLI::App* cmd, CommonOptions& o, bool with_workers = true) {
  cmd->add_option("--pmin", o.pmin, "smallest prime to test")
      ->capture_default_str();
  cmd->add_option("--pmax", o.pmax, "largest prime to test")
      ->capture_default_str();
  cmd->add_option("--r", o.r, "extension level for swisher/g7")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  if (with_workers)
    cmd->add_option("--workers", o.workers, "parallel workers over primes")
        ->envname("SUPERCONG_WORKERS")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
  cmd->add_option("--backend", o.backend, "arithmetic backend")
      ->check(CLI::IsMember({"auto", "exact", "padic"}))
      ->capture_default_str();
  cmd->add_option("--guard", o.guard, "extra p-adic guard digits")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();
  cmd->add_option("--exact-threshold", o.exact_threshold,
                  "auto backend switches to padic above this p / term count")
      ->capture_default_str();
}

int exit_code_for(const std::vector<CheckReport>& reports) {
  bool failed = false, precision = false, error = false;
  for (const auto& r : reports) {
    if (r.status == CheckStatus::Failed) failed = true;
    if (r.status == CheckStatus::Error) {
      if (r.precision_exhausted)
        precision = true;
      else
        error = true;
    }
  }
  if (failed) return kExitCheckFailed;
  if (precision) return kExitPrecision;
  if (error) return kExitUsage;
  return kExitOk;
}

void print_report_line(const CheckReport& r, std::ostream& os) {
  const char* tag = r.status == CheckStatus::Passed    ? "pass"
                    : r.status == CheckStatus::Failed  ? "FAIL"
                    : r.status == CheckStatus::Skipped ? "skip"
                                                       : "error";
  os << "[" << tag << "] " << r.check_name << " p=" << r.p;
  if (r.r != 1) os << " r=" << r.r;
  if (r.status == CheckStatus::Passed || r.status == CheckStatus::Failed) {
    os << " required=" << r.required.str() << " achieved="
       << (r.achieved_is_lower_bound ? ">=" : "") << r.achieved.str();
    os << " lhs=" << r.lhs_digest << " rhs=" << r.rhs_digest;
  }
  if (!r.note.empty()) os << " (" << r.note << ")";
  os << "\n";
}

void announce_failures(const std::vector<CheckReport>& reports) {
  for (const auto& r : reports)
    if (r.status == CheckStatus::Failed)
      std::cerr << "*** CONGRUENCE FAILED: " << r.check_name << " at p=" << r.p
                << " (r=" << r.r << "): achieved valuation " << r.achieved.str()
                << " < required " << r.required.str()
                << " -- a counterexample, please report\n";
}

int write_reports(const std::vector<CheckReport>& reports,
                  const std::string& out_path, const std::string& format,
                  bool timings) {
  ReportWriteOptions wo;
  wo.include_timings = timings;
  std::ostringstream buf;
  if (format == "csv")
    write_csv(reports, buf, wo);
  else
    write_json(reports, buf, wo);
  if (out_path.empty()) {
    std::cout << buf.str();
    return kExitOk;
  }
  std::ofstream f(out_path, std::ios::binary);
  if (!f) {
    std::cerr << "error: cannot open output file '" << out_path << "'\n";
    return kExitUsage;
  }
  f << buf.str();
  return kExitOk;
}

void print_summary(const std::vector<CheckReport>& reports) {
  const ReportSummary s = summarize(reports);
  std::cerr << "summary: total=" << s.total << " passed=" << s.passed
            << " failed=" << s.failed << " skipped=" << s.skipped
            << " errors=" << s.errors << " min_margin=" << s.min_margin.str()
            << " wall_ms=" << s.wall_ms << "\n";
}

int cmd_verify(const std::vector<std::string>& checks, const CommonOptions& o) {
  std::vector<CheckReport> reports;
  try {
    reports = sweep(checks, o.pmin, o.pmax, o.r, o.workers, o.check_options());
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  for (const auto& r : reports) print_report_line(r, std::cout);
  announce_failures(reports);
  print_summary(reports);
  return exit_code_for(reports);
}

int cmd_sweep(const std::vector<std::string>& checks, const CommonOptions& o,
              const std::string& out_path, const std::string& format,
              bool timings) {
  std::vector<CheckReport> reports;
  try {
    reports = sweep(checks, o.pmin, o.pmax, o.r, o.workers, o.check_options());
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  int rc = write_reports(reports, out_path, format, timings);
  if (rc != kExitOk) return rc;
  announce_failures(reports);
  print_summary(reports);
  return exit_code_for(reports);
}

int cmd_dsl(const std::string& series_path, const CommonOptions& o,
            const std::string& out_path, const std::string& format,
            bool timings) {
  std::ifstream f(series_path, std::ios::binary);
  if (!f) {
    std::cerr << "error: cannot read series file '" << series_path << "'\n";
    return kExitUsage;
  }
  std::ostringstream buf;
  buf << f.rdbuf();
  std::vector<SeriesSpec> specs;
  try {
    specs = parse_series_file(buf.str());
  } catch (const ParseError& e) {
    std::cerr << series_path << ":" << e.line << ":" << e.column
              << ": error: " << e.what();
    if (!e.expected.empty()) std::cerr << " (expected " << e.expected << ")";
    std::cerr << "\n";
    return kExitUsage;
  }
  if (specs.empty()) {
    std::cerr << "error: no series blocks in '" << series_path << "'\n";
    return kExitUsage;
  }
  std::vector<CheckReport> reports =
      dsl_sweep(specs, o.pmin, o.pmax, o.r, o.workers, o.check_options());
  int rc = write_reports(reports, out_path, format, timings);
  if (rc != kExitOk) return rc;
  announce_failures(reports);
  print_summary(reports);
  return exit_code_for(reports);
}

int cmd_wz_certify() {
  if (certificate_check()) {
    std::cout << "certificate identity holds (exact rational-function check)\n";
    return kExitOk;
  }
  std::cerr << "*** certificate identity FAILED\n";
  return kExitCheckFailed;
}

int cmd_wz_grid(long long nmax, long long kmax) {
  const GridResult res = wz_grid_check(nmax, kmax);
  if (res.ok) {
    std::cout << "WZ pair relation holds exactly on 0<=n<=" << nmax
              << ", 1<=k<=" << kmax << "\n";
    return kExitOk;
  }
  std::cerr << "*** WZ pair relation FAILED at n=" << res.n << " k=" << res.k
            << "\n";
  return kExitCheckFailed;
}

int cmd_wz_telescope(long long p) {
  if (p < 3 || p % 2 == 0 || !is_prime(p)) {
    std::cerr << "error: --p must be an odd prime\n";
    return kExitUsage;
  }
  const TelescopeResult res = telescoping_check(p);
  if (res.ok) {
    std::cout << "telescoping identity holds at p=" << p
              << ": both sides = " << decimal_digest(res.lhs) << "\n";
    return kExitOk;
  }
  std::cerr << "*** telescoping FAILED at p=" << p << " (" << res.failed
            << ")\n";
  return kExitCheckFailed;
}

int cmd_numeric(const std::string& which, long long terms, int digits) {
  if (digits < 1 || digits > 1000) {
    std::cerr << "error: --digits must be in [1, 1000]\n";
    return kExitUsage;
  }
  Rational sum;
  RationalInterval iv;
  std::string target;
  if (which == "k2") {
    sum = s_k2(terms);
    iv = sixteen_over_pi_bounds(digits);
    target = "16/pi";
  } else {
    sum = s_g7(terms);
    iv = thirtytwo_over_pi3_bounds(digits);
    target = "32/pi^3";
  }
  std::cout << "partial sum (" << terms << " + 1 terms) = "
            << decimal_string(sum, digits) << "\n";
  std::cout << target << " in (" << decimal_string(iv.lo, digits) << ", "
            << decimal_string(iv.hi, digits) << ")\n";
  const bool inside = iv.contains(sum);
  std::cout << "partial sum inside the interval: " << (inside ? "yes" : "no")
            << "\n";
  return inside ? kExitOk : kExitCheckFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "supercong: exact-arithmetic verification of the Van Hamme (K.2) "
      "supercongruence, its WZ certificate, and related congruences"};
  app.require_subcommand(1);
  app.fallthrough();
  app.set_config("--config", "", "read options from a plain-text config file");

  std::string registry_help = "built-in checks:";
  for (const auto& info : check_registry())
    registry_help += "\n  " + std::string(info.name) + "  (p >= " +
                     std::to_string(info.min_p) + ") " + std::string(info.summary);
  app.footer(registry_help);

  // verify
  auto* verify = app.add_subcommand("verify", "run built-in checks over a prime range");
  std::vector<std::string> verify_checks;
  CommonOptions verify_opt;
  verify->add_option("checks", verify_checks, "check names (see footer)")
      ->required();
  add_common(verify, verify_opt);

  // sweep
  auto* sw = app.add_subcommand("sweep", "run checks over a prime range and write a report file");
  std::vector<std::string> sweep_checks;
  CommonOptions sweep_opt;
  std::string sweep_out, sweep_format = "json";
  bool sweep_timings = false;
  sw->add_option("--checks", sweep_checks, "comma-separated check names")
      ->required()
      ->delimiter(',');
  add_common(sw, sweep_opt);
  sw->add_option("--out", sweep_out, "output file (stdout when omitted)");
  sw->add_option("--format", sweep_format, "report format")
      ->check(CLI::IsMember({"json", "csv"}))
      ->capture_default_str();
  sw->add_flag("--timings", sweep_timings,
               "write real elapsed times (breaks byte-for-byte reproducibility)");

  // wz
  auto* wz = app.add_subcommand("wz", "Wilf-Zeilberger pair checks");
  wz->require_subcommand(1);
  auto* certify = wz->add_subcommand("certify", "prove the divided WZ identity as an exact polynomial identity");
  long long grid_nmax = 10, grid_kmax = 10;
  auto* grid = wz->add_subcommand("grid", "check the WZ relation pointwise with exact rationals");
  grid->add_option("--nmax", grid_nmax, "largest n")->capture_default_str();
  grid->add_option("--kmax", grid_kmax, "largest k")->capture_default_str();
  long long tele_p = 3;
  auto* telescope = wz->add_subcommand("telescope", "check the telescoped sum identity at one prime");
  telescope->add_option("--p", tele_p, "odd prime")->required();

  // dsl
  auto* dsl = app.add_subcommand("dsl", "sweep user-defined series from a file");
  CommonOptions dsl_opt;
  std::string dsl_file, dsl_out, dsl_format = "json";
  bool dsl_timings = false;
  dsl->add_option("--series-file", dsl_file, "series definition file")
      ->required()
      ->check(CLI::ExistingFile);
  add_common(dsl, dsl_opt);
  dsl->add_option("--out", dsl_out, "output file (stdout when omitted)");
  dsl->add_option("--format", dsl_format, "report format")
      ->check(CLI::IsMember({"json", "csv"}))
      ->capture_default_str();
  dsl->add_flag("--timings", dsl_timings, "write real elapsed times");

  // numeric
  auto* numeric = app.add_subcommand("numeric", "compare a truncated sum against rigorous Machin-derived bounds");
  std::string numeric_series;
  long long numeric_terms = 60;
  int numeric_digits = 100;
  numeric->add_option("series", numeric_series, "which series")
      ->required()
      ->check(CLI::IsMember({"k2", "g7"}));
  numeric->add_option("--terms", numeric_terms, "truncation index N")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();
  numeric->add_option("--digits", numeric_digits, "interval width 10^-digits")
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (verify->parsed()) return cmd_verify(verify_checks, verify_opt);
    if (sw->parsed())
      return cmd_sweep(sweep_checks, sweep_opt, sweep_out, sweep_format,
                       sweep_timings);
    if (dsl->parsed())
      return cmd_dsl(dsl_file, dsl_opt, dsl_out, dsl_format, dsl_timings);
    if (wz->parsed()) {
      if (certify->parsed()) return cmd_wz_certify();
      if (grid->parsed()) return cmd_wz_grid(grid_nmax, grid_kmax);
      if (telescope->parsed()) return cmd_wz_telescope(tele_p);
    }
    if (numeric->parsed())
      return cmd_numeric(numeric_series, numeric_terms, numeric_digits);
  } catch (const PrecisionExhausted& e) {
    std::cerr << "error: precision exhausted: " << e.what() << "\n";
    return kExitPrecision;
  } catch (const ParseError& e) {
    std::cerr << "parse error at " << e.line << ":" << e.column << ": "
              << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
