#include <gtest/gtest.h>

#include <cstdlib>

#include "deckrecon/report.hpp"
#include "support.hpp"

using namespace deckrecon;

namespace {
std::string without_time(const VerificationReport& r) { return to_json(r, false).dump(); }
}  // namespace

TEST(VerifyInstance, Cycle) {
  const auto res = verify_instance(named::cycle(7), 0);
  EXPECT_TRUE(res.mismatches.empty());
  EXPECT_TRUE(res.two_candidates.empty());
  EXPECT_TRUE(res.degrees_ok);
  EXPECT_EQ(res.rows, 7);
  EXPECT_EQ(res.determined, 7);
}

TEST(VerifyInstance, Complete) {
  const auto res = verify_instance(named::complete(7), 3);
  EXPECT_TRUE(res.mismatches.empty());
  EXPECT_TRUE(res.all_determined);
}

TEST(VerifyInstance, CliquePlusIsolated) {
  const auto res =
      verify_instance(named::disjoint_union(named::complete(4), named::empty(3)), 0);
  EXPECT_TRUE(res.mismatches.empty());
  EXPECT_TRUE(res.all_determined);
}

TEST(VerifyInstance, MaxRLimitsRows) {
  const auto res = verify_instance(named::petersen(), 0, {.max_r = 4});
  EXPECT_EQ(res.rows, 4);
  EXPECT_TRUE(res.mismatches.empty());
}

TEST(VerifyInstance, ErrorsBecomeMismatches) {
  const auto res = verify_instance(named::cycle(6), 0);
  ASSERT_EQ(res.mismatches.size(), 1u);
  EXPECT_EQ(res.mismatches[0].kind, "error:UnsupportedOrder");
}

TEST(VerifyRandom, DeterministicAcrossThreadCounts) {
  const RandomSpec spec{9, 60, 0.45, 99};
  const auto one = verify_random(spec, {.threads = 1});
  const auto many = verify_random(spec, {.threads = 4});
  EXPECT_EQ(without_time(one), without_time(many));
  EXPECT_EQ(one.totals.instances, 60);
  EXPECT_TRUE(one.passed());
}

TEST(VerifyRandom, DegreeBoundRejectsDenseSamples) {
  const RandomSpec spec{12, 30, 0.3, 4, 2.0};
  const auto report = verify_random(spec);
  EXPECT_EQ(report.totals.instances, 30);
  EXPECT_TRUE(report.passed());
}

TEST(VerifyRandom, ArgumentChecks) {
  EXPECT_THROW(verify_random({6, 10, 0.5, 1}), ReconError);
  EXPECT_THROW(verify_random({9, 10, 1.5, 1}), ReconError);
}

TEST(Report, FieldOrderAndCsv) {
  const auto report = verify_graphs(7, {named::cycle(7), named::complete(7)});
  const auto j = to_json(report);
  std::vector<std::string> keys;
  for (auto it = j.begin(); it != j.end(); ++it) keys.push_back(it.key());
  EXPECT_EQ(keys, (std::vector<std::string>{"n", "totals", "resolver_histogram",
                                            "two_candidates", "mismatches", "seconds"}));
  EXPECT_EQ(j["totals"]["instances"], 14);
  EXPECT_EQ(j["totals"]["rows"], 98);
  EXPECT_EQ(j["totals"]["determined"], 98);
  const std::string csv = to_csv(report);
  EXPECT_TRUE(csv.starts_with("metric,value\nn,7\n"));
  EXPECT_NE(csv.find("mismatches,0\n"), std::string::npos);
  EXPECT_NE(csv.find("resolver.hole,"), std::string::npos);
}

TEST(Report, HistogramCountsEveryDeterminedRow) {
  const auto report = verify_exhaustive(7);
  long hits = 0;
  for (const auto& [resolver, count] : report.resolver_histogram) hits += count;
  EXPECT_EQ(hits, report.totals.determined);
  EXPECT_EQ(report.totals.determined + report.totals.two_candidates, report.totals.rows);
}
