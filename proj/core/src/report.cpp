#include "ospcent/report.hpp"

#include <algorithm>
#include <sstream>

#include <json.hpp>

namespace ospcent {

void Report::add_items(const std::string& prefix, const std::vector<CheckItem>& items,
                       std::int64_t millis) {
  for (const auto& it : items) {
    ReportCheck c;
    c.name = prefix + it.name;
    c.status = it.pass ? CheckStatus::pass : CheckStatus::fail;
    c.details = it.details;
    c.millis = millis;
    checks.push_back(std::move(c));
  }
}

void Report::sort_by_name() {
  std::stable_sort(checks.begin(), checks.end(),
                   [](const ReportCheck& a, const ReportCheck& b) { return a.name < b.name; });
}

std::size_t Report::count(CheckStatus s) const {
  std::size_t n = 0;
  for (const auto& c : checks) n += c.status == s ? 1 : 0;
  return n;
}

std::string Report::to_text(bool with_timings) const {
  std::ostringstream os;
  for (const auto& c : checks) {
    os << "[" << (c.status == CheckStatus::pass ? "PASS"
                  : c.status == CheckStatus::fail ? "FAIL"
                                                  : "SKIP")
       << "] " << c.name;
    if (!c.details.empty()) os << "  -- " << c.details;
    for (const auto& [k, v] : c.values) os << "  " << k << "=" << v;
    if (with_timings) os << "  (" << c.millis << " ms)";
    os << "\n";
  }
  os << checks.size() << " checks: " << count(CheckStatus::pass) << " passed, "
     << count(CheckStatus::fail) << " failed, " << count(CheckStatus::skipped) << " skipped\n";
  return os.str();
}

std::string Report::to_json(bool with_timings) const {
  nlohmann::json j;
  j["checks"] = nlohmann::json::array();
  for (const auto& c : checks) {
    nlohmann::json jc;
    jc["name"] = c.name;
    jc["status"] = to_string(c.status);
    jc["details"] = c.details;
    jc["values"] = c.values;
    if (with_timings) jc["millis"] = c.millis;
    j["checks"].push_back(jc);
  }
  j["summary"] = {{"pass", count(CheckStatus::pass)},
                  {"fail", count(CheckStatus::fail)},
                  {"skipped", count(CheckStatus::skipped)}};
  j["exit_code"] = exit_code();
  return j.dump(2) + "\n";
}

bool validate_report_json(const std::string& json_text, std::string* error) {
  auto fail = [&](const std::string& msg) {
    if (error) *error = msg;
    return false;
  };
  nlohmann::json j = nlohmann::json::parse(json_text, nullptr, /*allow_exceptions=*/false);
  if (j.is_discarded()) return fail("not valid JSON");
  if (!j.is_object()) return fail("root must be an object");
  for (const char* key : {"checks", "summary", "exit_code"})
    if (!j.contains(key)) return fail(std::string("missing key: ") + key);
  if (!j["checks"].is_array()) return fail("checks must be an array");
  std::size_t pass = 0, failed = 0, skipped = 0;
  for (const auto& c : j["checks"]) {
    if (!c.is_object()) return fail("check entries must be objects");
    for (const char* key : {"name", "status", "details", "values"})
      if (!c.contains(key)) return fail(std::string("check missing key: ") + key);
    if (!c["name"].is_string() || !c["status"].is_string() || !c["details"].is_string() ||
        !c["values"].is_object())
      return fail("check field types");
    std::string s = c["status"].get<std::string>();
    if (s == "pass") ++pass;
    else if (s == "fail") ++failed;
    else if (s == "skipped") ++skipped;
    else return fail("invalid status: " + s);
    if (c.contains("millis") && !c["millis"].is_number_integer()) return fail("millis type");
  }
  const auto& summary = j["summary"];
  if (!summary.is_object() || !summary.contains("pass") || !summary.contains("fail") ||
      !summary.contains("skipped"))
    return fail("summary shape");
  if (summary["pass"].get<std::size_t>() != pass ||
      summary["fail"].get<std::size_t>() != failed ||
      summary["skipped"].get<std::size_t>() != skipped)
    return fail("summary counts disagree with checks");
  if (!j["exit_code"].is_number_integer()) return fail("exit_code type");
  int ec = j["exit_code"].get<int>();
  if (ec != (failed == 0 ? 0 : 1)) return fail("exit_code violates the contract");
  if (error) error->clear();
  return true;
}

}  // namespace ospcent
