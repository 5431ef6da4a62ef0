#pragma once

#include <json.hpp>

#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "supercong/report.hpp"

namespace supercong {

struct ReportWriteOptions {
  // Real timings vary run to run; files stay byte-identical unless asked.
  bool include_timings = false;
};

struct ReportSummary {
  std::size_t total = 0;
  std::size_t passed = 0;
  std::size_t failed = 0;
  std::size_t skipped = 0;
  std::size_t errors = 0;
  long long wall_ms = 0;
  // Smallest achieved-minus-required margin over decided records; infinite
  // when every decided record is an exact identity.
  ValOrInf min_margin = ValOrInf::infinity();
};

inline ReportSummary summarize(const std::vector<CheckReport>& reports) {
  ReportSummary s;
  s.total = reports.size();
  for (const auto& r : reports) {
    switch (r.status) {
      case CheckStatus::Passed: ++s.passed; break;
      case CheckStatus::Failed: ++s.failed; break;
      case CheckStatus::Skipped: ++s.skipped; break;
      case CheckStatus::Error: ++s.errors; break;
    }
    s.wall_ms += r.elapsed_ms;
    if (r.status == CheckStatus::Passed || r.status == CheckStatus::Failed) {
      if (!r.achieved.is_inf && !r.required.is_inf) {
        ValOrInf margin = ValOrInf::finite(r.achieved.v - r.required.v);
        s.min_margin = std::min(s.min_margin, margin);
      }
    }
  }
  return s;
}

namespace report_io_detail {

inline void revalidate(const CheckReport& r) {
  if (r.status != CheckStatus::Passed && r.status != CheckStatus::Failed) return;
  if (r.pass != (r.achieved >= r.required))
    throw std::logic_error("report writer: pass flag inconsistent with valuations");
}

inline nlohmann::ordered_json valuation_json(const CheckReport& r, bool decided) {
  if (!decided) return nullptr;
  if (r.achieved.is_inf) return "+inf";
  return r.achieved.v;
}

}  // namespace report_io_detail

// One JSON object per line, summary object last.
inline void write_json(const std::vector<CheckReport>& reports, std::ostream& os,
                       const ReportWriteOptions& opt = {}) {
  for (const auto& r : reports) {
    report_io_detail::revalidate(r);
    const bool decided =
        r.status == CheckStatus::Passed || r.status == CheckStatus::Failed;
    nlohmann::ordered_json j;
    j["check"] = r.check_name;
    j["p"] = r.p;
    j["r"] = r.r;
    if (r.required.is_inf)
      j["required_valuation"] = "+inf";
    else
      j["required_valuation"] = r.required.v;
    j["achieved_valuation"] = report_io_detail::valuation_json(r, decided);
    if (r.achieved_is_lower_bound) j["achieved_is_lower_bound"] = true;
    j["pass"] = r.pass;
    j["status"] = to_string(r.status);
    j["lhs_digest"] = r.lhs_digest;
    j["rhs_digest"] = r.rhs_digest;
    j["elapsed_ms"] = opt.include_timings ? r.elapsed_ms : 0;
    if (!r.note.empty()) j["note"] = r.note;
    os << j.dump() << '\n';
  }
  const ReportSummary s = summarize(reports);
  nlohmann::ordered_json j;
  j["total"] = s.total;
  j["passed"] = s.passed;
  j["failed"] = s.failed;
  j["skipped"] = s.skipped;
  j["errors"] = s.errors;
  if (s.min_margin.is_inf)
    j["min_margin"] = "+inf";
  else
    j["min_margin"] = s.min_margin.v;
  j["wall_ms"] = opt.include_timings ? s.wall_ms : 0;
  os << j.dump() << '\n';
}

namespace report_io_detail {

inline std::string csv_escape(const std::string& s) {
  bool quote = false;
  for (char c : s)
    if (c == ',' || c == '"' || c == '\n') quote = true;
  if (!quote) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

}  // namespace report_io_detail

// Header row plus one record per line; "+inf" spelled literally for exact
// identities. A '#'-prefixed summary footer closes the file.
inline void write_csv(const std::vector<CheckReport>& reports, std::ostream& os,
                      const ReportWriteOptions& opt = {}) {
  os << "check,p,r,required_valuation,achieved_valuation,pass,status,"
        "lhs_digest,rhs_digest,elapsed_ms,note\n";
  for (const auto& r : reports) {
    report_io_detail::revalidate(r);
    const bool decided =
        r.status == CheckStatus::Passed || r.status == CheckStatus::Failed;
    os << report_io_detail::csv_escape(r.check_name) << ',' << r.p << ',' << r.r
       << ',' << r.required.str() << ','
       << (decided ? r.achieved.str() : std::string()) << ','
       << (r.pass ? "true" : "false") << ',' << to_string(r.status) << ','
       << report_io_detail::csv_escape(r.lhs_digest) << ','
       << report_io_detail::csv_escape(r.rhs_digest) << ','
       << (opt.include_timings ? r.elapsed_ms : 0) << ','
       << report_io_detail::csv_escape(r.note) << '\n';
  }
  const ReportSummary s = summarize(reports);
  os << "# summary total=" << s.total << " passed=" << s.passed
     << " failed=" << s.failed << " skipped=" << s.skipped
     << " errors=" << s.errors << " min_margin=" << s.min_margin.str()
     << " wall_ms=" << (opt.include_timings ? s.wall_ms : 0) << '\n';
}

}  // namespace supercong
