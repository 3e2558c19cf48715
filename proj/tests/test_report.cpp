#include <gtest/gtest.h>

#include <cmath>
#include <limits>
#include <numbers>

#include "nullcone/error.hpp"
#include "nullcone/report.hpp"
#include "nullcone/sampling.hpp"
#include "nullcone/verify.hpp"

using namespace nullcone;

TEST(ResidualTracker, KeepsWorstPoint) {
  ResidualTracker t;
  t.add(1e-3, {1, 0, 0, 0});
  t.add(5e-3, {2, 0, 0, 0});
  t.add(2e-3, {3, 0, 0, 0});
  const CheckReport r = t.report("demo", 1e-2);
  EXPECT_EQ(r.samples, 3);
  EXPECT_EQ(r.max_residual, 5e-3);
  EXPECT_EQ(r.worst_point[0], 2.0);
  EXPECT_TRUE(r.pass);
  EXPECT_FALSE(t.report("demo", 1e-3).pass);
}

TEST(ResidualTracker, NanCountsAsInfinite) {
  ResidualTracker t;
  t.add(1.0, {});
  t.add(std::numeric_limits<double>::quiet_NaN(), {7, 0, 0, 0});
  const CheckReport r = t.report("nan", 1e300);
  EXPECT_TRUE(std::isinf(r.max_residual));
  EXPECT_EQ(r.worst_point[0], 7.0);
  EXPECT_FALSE(r.pass);
}

TEST(CheckReport, PassNeedsSamples) {
  EXPECT_FALSE(make_report("empty", 0, 0.0, 1.0, {}).pass);
  EXPECT_TRUE(make_report("one", 1, 1.0, 1.0, {}).pass);
}

TEST(CheckReport, ScaleThresholdRederivesPass) {
  const CheckReport r = make_report("x", 10, 0.5, 1.0, {});
  EXPECT_FALSE(scale_threshold(r, 0.1).pass);
  EXPECT_TRUE(scale_threshold(r, 1.0).pass);
  EXPECT_FALSE(scale_threshold(r, 0.0).pass);
  EXPECT_DOUBLE_EQ(scale_threshold(r, 0.25).threshold, 0.25);
}

TEST(CheckReport, JsonSortedAndComplete) {
  const std::string s = reports_to_json({make_report("b", 1, 0.1, 1, {}), make_report("a", 2, 0.2, 1, {})});
  const auto j = nlohmann::json::parse(s);
  ASSERT_EQ(j.size(), 2u);
  EXPECT_EQ(j[0]["check"], "a");
  EXPECT_EQ(j[1]["check"], "b");
  for (const char* key : {"check", "samples", "max_residual", "threshold", "pass", "worst_point"})
    EXPECT_TRUE(j[0].contains(key)) << key;
  EXPECT_EQ(j[0]["worst_point"].size(), 4u);
}

TEST(Sampling, NamedStreamsAreIndependentAndReproducible) {
  Rng a = check_rng(7, "alpha"), b = check_rng(7, "alpha"), c = check_rng(7, "beta"), d = check_rng(8, "alpha");
  const auto x = a();
  EXPECT_EQ(x, b());
  EXPECT_NE(x, c());
  EXPECT_NE(x, d());
}

TEST(Sampling, DrawsRespectInvariants) {
  Rng rng(81);
  const Box box{{0, -1, 2}, {1, 1, 3}};
  for (int n = 0; n < 1000; ++n) {
    EXPECT_TRUE(box.contains(random_point(rng, box)));
    EXPECT_NEAR(random_unit_quaternion(rng).value().norm(), 1.0, 1e-12);
    const TangentPoint p = random_tangent_point(rng);
    EXPECT_NEAR(dot(p.base().vec(), p.dir().vec()), 0.0, 1e-10);
    const double th = random_cone_point(rng, box).theta();
    EXPECT_GE(th, 0.0);
    EXPECT_LT(th, 2 * std::numbers::pi);
  }
}

TEST(RunSuite, DeterministicForFixedSeed) {
  VerifyOptions opts;
  opts.seed = 3;
  const auto a = run_suite("hopf", opts), b = run_suite("hopf", opts);
  EXPECT_EQ(reports_to_json(a), reports_to_json(b));
  for (const auto& r : a) EXPECT_TRUE(r.pass) << r.check;
}

TEST(RunSuite, SampleOverrideAndToleranceScale) {
  VerifyOptions opts;
  opts.samples = 10;
  for (const auto& r : run_suite("lens", opts)) EXPECT_EQ(r.samples > 0, true) << r.check;
  opts.tolerance_scale = 0.0;
  bool any_fail = false;
  for (const auto& r : run_suite("hopf", opts)) any_fail |= !r.pass;
  EXPECT_TRUE(any_fail);
}

TEST(RunSuite, MetricRestriction) {
  VerifyOptions opts;
  opts.metric = "s2s1:c=2";
  opts.samples = 20;
  const auto reports = run_suite("engel", opts);
  ASSERT_FALSE(reports.empty());
  for (const auto& r : reports) EXPECT_NE(r.check.find("s2s1:c=2"), std::string::npos) << r.check;
}

TEST(RunSuite, UnknownSuiteRejected) {
  EXPECT_THROW(run_suite("bogus"), Error);
  EXPECT_EQ(suite_names().front(), "all");
}

TEST(RunSuite, PrefixFilterSelectsChecks) {
  VerifyOptions opts;
  opts.only = {"phi_"};
  const auto reports = run_suite("all", opts);
  ASSERT_EQ(reports.size(), 2u);
  EXPECT_EQ(reports[0].check, "phi_antipodal");
  EXPECT_EQ(reports[1].check, "phi_two_to_one");
}
