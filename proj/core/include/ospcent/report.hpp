#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "ospcent/check.hpp"

namespace ospcent {

enum class CheckStatus { pass, fail, skipped };

inline const char* to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::pass: return "pass";
    case CheckStatus::fail: return "fail";
    default: return "skipped";
  }
}

struct ReportCheck {
  std::string name;
  CheckStatus status = CheckStatus::skipped;
  std::string details;
  std::map<std::string, std::string> values;  // exact rational renderings
  std::int64_t millis = 0;
};

// Machine-readable verification report. Assembly is ordered by check name;
// the exit-code contract is 0 iff no check failed. Timings are kept out of
// the rendered output unless asked for, so default reports are
// byte-identical across runs and thread counts.
struct Report {
  std::vector<ReportCheck> checks;

  void add(ReportCheck c) { checks.push_back(std::move(c)); }
  void add_items(const std::string& prefix, const std::vector<CheckItem>& items,
                 std::int64_t millis = 0);
  void sort_by_name();

  std::size_t count(CheckStatus s) const;
  bool all_passed() const { return count(CheckStatus::fail) == 0; }
  int exit_code() const { return all_passed() ? 0 : 1; }

  std::string to_text(bool with_timings = false) const;
  std::string to_json(bool with_timings = false) const;
};

// Structural validation against the shipped report schema
// (docs/report.schema.json): required keys, types, status values, and the
// summary/exit_code consistency rules.
bool validate_report_json(const std::string& json_text, std::string* error = nullptr);

}  // namespace ospcent
