#pragma once

#include <string>

#include "supercong/rational.hpp"

namespace supercong {

enum class CheckStatus { Passed, Failed, Skipped, Error };

inline const char* to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::Passed: return "passed";
    case CheckStatus::Failed: return "failed";
    case CheckStatus::Skipped: return "skipped";
    case CheckStatus::Error: return "error";
  }
  return "?";
}

// Outcome of one congruence check at one prime.
struct CheckReport {
  std::string check_name;
  long long p = 0;
  int r = 1;
  ValOrInf required = ValOrInf::finite(0);
  ValOrInf achieved = ValOrInf::finite(0);
  // Modular backend may prove only "valuation >= achieved" when the
  // difference is zero at the surviving precision.
  bool achieved_is_lower_bound = false;
  bool pass = false;
  CheckStatus status = CheckStatus::Failed;
  std::string lhs_digest;
  std::string rhs_digest;
  long long elapsed_ms = 0;
  std::string note;  // skip reason or error message
  bool precision_exhausted = false;
};

}  // namespace supercong
