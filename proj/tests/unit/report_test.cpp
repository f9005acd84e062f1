#include <gtest/gtest.h>

#include "abelslab/suites.hpp"

using namespace abelslab;

namespace {

Report sample() {
  Report r;
  r.suite = "sample";
  r.config = {{"ring", "zmod:3"}};
  r.add(timed_check("b/second", "anchor b", [](CheckRecord& rec) { rec.bump("cases", 3); }));
  r.add(timed_check("a/first", "anchor a", [](CheckRecord& rec) { rec.fail("witness"); }));
  r.sort_checks();
  return r;
}

}  // namespace

TEST(Report, CountsAndOrdering) {
  Report r = sample();
  ASSERT_EQ(r.checks.size(), 2u);
  EXPECT_EQ(r.checks[0].id, "a/first");
  EXPECT_EQ(r.count(Status::fail), 1u);
  EXPECT_TRUE(r.any_failed());
  EXPECT_EQ(r.checks[0].counterexample, "witness");
}

TEST(Report, ErrorsPropagateOutOfChecks) {
  EXPECT_THROW(timed_check("x", "anchor", [](CheckRecord&) { throw Error(ErrorCode::invalid_argument, "bad"); }), Error);
}

TEST(Report, JsonRoundTrip) {
  Report r = sample();
  auto j = to_json(r);
  EXPECT_TRUE(j.contains("generated_at"));
  Report back = report_from_json(j);
  EXPECT_EQ(strip_volatile(to_json(back)), strip_volatile(j));
  EXPECT_FALSE(strip_volatile(j).dump().find("elapsed_ms") != std::string::npos);
}

TEST(Report, TsvHasOneLinePerCheck) {
  std::string t = to_tsv(sample());
  EXPECT_EQ(std::count(t.begin(), t.end(), '\n'), 3);
}

TEST(Report, MergeKeepsAllChecks) {
  Report a = sample(), b = sample();
  b.checks[0].id = "c/third";
  Report m = merge_reports({a, b});
  EXPECT_EQ(m.suite, "merged");
  EXPECT_EQ(m.checks.size(), 4u);
  EXPECT_TRUE(std::is_sorted(m.checks.begin(), m.checks.end(), [](auto const& x, auto const& y) { return x.id < y.id; }));
}

TEST(Suites, ConfigValidation) {
  SuiteConfig c;
  c.suite = "nope";
  EXPECT_THROW(run_suite(c), Error);
  c.suite = "commutators";
  c.n = 1;
  EXPECT_THROW(c.validate(), Error);
  c.n.reset();
  c.suite = "steinberg";
  c.type = "B3";
  c.ring = "zmod:2";
  try {
    run_suite(c);
    ADD_FAILURE();
  } catch (Error const& e) {
    EXPECT_EQ(e.code(), ErrorCode::char2_unsupported);
  }
}

TEST(Suites, SmallRunsAreDeterministic) {
  SuiteConfig c;
  c.suite = "commutators";
  c.ring = "zmod:3";
  c.n = 3;
  auto a = strip_volatile(to_json(run_suite(c)));
  auto b = strip_volatile(to_json(run_suite(c)));
  EXPECT_EQ(a, b);
  EXPECT_FALSE(run_suite(c).any_failed());
}

TEST(Suites, SeedIsRecorded) {
  SuiteConfig c;
  c.suite = "commutators";
  c.ring = "zmod:2";
  c.n = 3;
  c.seed = 42;
  EXPECT_EQ(c.to_json()["seed"], 42);
}
