#include <doctest.h>

#include "ospcent/parallel.hpp"
#include "ospcent/report.hpp"
#include "ospcent/tensor.hpp"

using namespace ospcent;

namespace {
Report sample_report() {
  Report r;
  r.add({"020-second", CheckStatus::pass, "", {{"value", "3/8"}}, 12});
  r.add({"010-first", CheckStatus::pass, "all good", {}, 5});
  r.add({"030-third", CheckStatus::skipped, "opt-in", {}, 0});
  r.sort_by_name();
  return r;
}
}  // namespace

TEST_CASE("report ordering, counting and exit code") {
  Report r = sample_report();
  CHECK(r.checks.front().name == "010-first");
  CHECK(r.count(CheckStatus::pass) == 2);
  CHECK(r.count(CheckStatus::skipped) == 1);
  CHECK(r.exit_code() == 0);
  r.add({"040-bad", CheckStatus::fail, "boom", {}, 1});
  CHECK(r.exit_code() == 1);
}

TEST_CASE("json output validates against the schema") {
  Report r = sample_report();
  std::string err;
  CHECK(validate_report_json(r.to_json(), &err));
  CHECK(err.empty());
  CHECK(validate_report_json(r.to_json(/*with_timings=*/true), &err));

  CHECK_FALSE(validate_report_json("{\"checks\": 3}", &err));
  CHECK_FALSE(validate_report_json("not json", &err));
  // forged summary is caught
  CHECK_FALSE(validate_report_json(
      R"({"checks":[{"name":"a","status":"pass","details":"","values":{}}],)"
      R"("summary":{"pass":2,"fail":0,"skipped":0},"exit_code":0})",
      &err));
  // exit-code contract is enforced
  CHECK_FALSE(validate_report_json(
      R"({"checks":[{"name":"a","status":"fail","details":"","values":{}}],)"
      R"("summary":{"pass":0,"fail":1,"skipped":0},"exit_code":0})",
      &err));
}

TEST_CASE("default rendering is byte-identical across thread counts") {
  auto run = [] {
    TensorContext ctx = build_context({1, Parity::plus}, {1, Parity::plus}, {1, Parity::plus});
    BIImage bi = phi_images(build_casimirs(ctx), ctx);
    Report r;
    r.add_items("100-centralizing ", verify_centralizing(bi, ctx));
    r.sort_by_name();
    return std::pair{r.to_text(), r.to_json()};
  };
  set_thread_count(1);
  auto one = run();
  set_thread_count(4);
  auto four = run();
  set_thread_count(0);
  CHECK(one.first == four.first);
  CHECK(one.second == four.second);
}
