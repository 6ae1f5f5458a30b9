#include <gtest/gtest.h>

#include <set>
#include <sstream>

#include "graphweight/graph6.hpp"
#include "graphweight/random_graph.hpp"
#include "graphweight/report_format.hpp"
#include "graphweight/verify.hpp"

namespace graphweight {
namespace {

std::vector<VerificationReport> collect(const RunConfig& cfg, std::istream& in, RunSummary* summary = nullptr) {
  std::vector<VerificationReport> out;
  auto source = make_source(cfg, in);
  const RunSummary s = run(cfg, *source, [&](const VerificationReport& r) { out.push_back(r); });
  if (summary != nullptr) *summary = s;
  return out;
}

TEST(LabelledEnumeration, Counts) {
  EXPECT_EQ(labeled_graph_count(0), 1U);
  EXPECT_EQ(labeled_graph_count(3), 8U);
  EXPECT_EQ(labeled_graph_count(5), 1024U);
  EXPECT_EQ(labeled_graph_count(8), std::uint64_t{1} << 28);
  EXPECT_THROW(labeled_graph_count(9), std::invalid_argument);
}

TEST(LabelledEnumeration, EachGraphOnce) {
  auto source = exhaustive_source(4);
  std::set<std::string> seen;
  std::uint64_t code = 0;
  while (auto g = source->next()) {
    EXPECT_EQ(*g, labeled_graph(4, code++));
    seen.insert(encode_graph6(*g));
  }
  EXPECT_EQ(seen.size(), 64U);
  EXPECT_EQ(labeled_graph(3, 0b111), Graph::complete(3));
  EXPECT_EQ(labeled_graph(3, 0b001), Graph(3, std::vector<Edge>{{0, 1}}));
}

TEST(Probability, Parse) {
  EXPECT_EQ(Probability::parse("1/2").to_string(), "1/2");
  EXPECT_EQ(Probability::parse("2/4").to_string(), "1/2");
  EXPECT_EQ(Probability::parse("0.25").to_string(), "1/4");
  EXPECT_EQ(Probability::parse("1").to_string(), "1/1");
  EXPECT_EQ(Probability::parse("0").to_string(), "0/1");
  EXPECT_EQ(Probability::parse("1.0").to_string(), "1/1");
  for (const char* bad : {"3/2", "1/0", "x", "-1/2", "1.5", ""})
    EXPECT_THROW(Probability::parse(bad), std::invalid_argument) << bad;
}

TEST(RandomGraph, Extremes) {
  for (std::uint64_t seed : {0ULL, 1ULL, 0xFFFFFFFFFFFFFFFFULL}) {
    EXPECT_EQ(random_graph(9, Probability{0, 1}, seed), Graph(9));
    EXPECT_EQ(random_graph(9, Probability{1, 1}, seed), Graph::complete(9));
  }
}

TEST(RandomGraph, Golden) {
  // Pinned with an independent Python implementation of the same generator.
  EXPECT_EQ(encode_graph6(random_graph(8, Probability{1, 2}, 42)), "GUfbLo");
  EXPECT_EQ(encode_graph6(random_graph(10, Probability{1, 2}, splitmix64_at(7, 0))), "IHZF?WWGo");
}

TEST(RandomGraph, EdgeDensityIsRoughlyP) {
  int edges = 0;
  for (std::uint64_t s = 0; s < 50; ++s) edges += random_graph(20, Probability{1, 4}, s).size();
  const double density = edges / (50.0 * 190.0);
  EXPECT_NEAR(density, 0.25, 0.03);
}

TEST(VerifyGraph, GoldenGraphs) {
  const RunConfig cfg;
  const std::vector<std::pair<Graph, DyadicRational>> cases{
      {Graph(1), DyadicRational(3, 3)},
      {Graph::complete(2), DyadicRational(-3, 6)},
      {Graph::complete(3), DyadicRational(15, 9)}};
  for (const auto& [g, value] : cases) {
    const auto r = verify_graph(g, cfg);
    EXPECT_TRUE(r.all_equal);
    EXPECT_EQ(r.computed_count(), 3);
    for (Formula f : kAllFormulas) EXPECT_EQ(r.outcome(f).value->value, value);
  }
}

TEST(VerifyGraph, BudgetSkipsAreReported) {
  RunConfig cfg;
  const auto r = verify_graph(Graph::complete(8), cfg);  // 28 edges > 24
  EXPECT_TRUE(r.outcome(Formula::definition).skipped_for_budget);
  EXPECT_FALSE(r.outcome(Formula::definition).value.has_value());
  EXPECT_NE(r.outcome(Formula::definition).skip_reason.find("28"), std::string::npos);
  EXPECT_EQ(r.computed_count(), 2);
  EXPECT_TRUE(r.all_equal);

  cfg.formulas = {true, false, false};
  EXPECT_THROW(verify_graph(Graph::complete(8), cfg), BudgetExceeded);
}

TEST(VerifyGraph, IdentitySampling) {
  RunConfig cfg;
  cfg.check_identities = true;
  const auto small = verify_graph(Graph::cycle(6), cfg);
  EXPECT_EQ(small.claim_checked, 64U);
  EXPECT_EQ(small.parity_checked, 64U);
  EXPECT_EQ(small.identity_violations, 0U);
  const auto large = verify_graph(Graph::cycle(9), cfg);
  EXPECT_EQ(large.claim_checked, 256U);
  EXPECT_EQ(large.identity_violations, 0U);
}

TEST(Run, ExhaustiveFour) {
  RunConfig cfg;
  cfg.mode = RunMode::exhaustive;
  cfg.n = 4;
  std::istringstream none;
  RunSummary s;
  const auto reports = collect(cfg, none, &s);
  EXPECT_EQ(reports.size(), 64U);
  EXPECT_EQ(s.graphs, 64U);
  EXPECT_EQ(s.mismatches, 0U);
  EXPECT_FALSE(s.failed());
  for (std::size_t i = 0; i < reports.size(); ++i) EXPECT_EQ(reports[i].index, i);
}

TEST(Run, RandomTenByHundred) {
  RunConfig cfg;
  cfg.mode = RunMode::random;
  cfg.n = 10;
  cfg.p = Probability{1, 2};
  cfg.count = 100;
  cfg.seed = 7;
  // the definition sum is exercised on a prefix only, it dominates the cost
  cfg.formulas = {false, true, true};
  std::istringstream none;
  RunSummary s;
  const auto reports = collect(cfg, none, &s);
  EXPECT_EQ(reports.size(), 100U);
  EXPECT_EQ(s.mismatches, 0U);
  EXPECT_EQ(reports.front().graph_id, "IHZF?WWGo");

  cfg.formulas = {true, true, true};
  cfg.count = 8;
  const auto prefix = collect(cfg, none, &s);
  ASSERT_EQ(prefix.size(), 8U);
  EXPECT_EQ(s.mismatches, 0U);
  for (std::size_t i = 0; i < prefix.size(); ++i) {
    EXPECT_EQ(prefix[i].graph_id, reports[i].graph_id);
    EXPECT_EQ(prefix[i].computed_count(), prefix[i].m <= 24 ? 3 : 2);
  }
}

TEST(Run, FileWithK3) {
  RunConfig cfg;
  std::istringstream in("Bw\n");
  const auto reports = collect(cfg, in);
  ASSERT_EQ(reports.size(), 1U);
  EXPECT_EQ(reports[0].graph_id, "Bw");
  EXPECT_EQ(reports[0].outcome(Formula::corank).value->value, DyadicRational(15, 9));
}

TEST(Run, EdgeListStream) {
  RunConfig cfg;
  cfg.format = InputFormat::edges;
  std::istringstream in("n 1\nn 3\n0 1\n1 2\n0 2\n\nn 2\n");
  const auto reports = collect(cfg, in);
  ASSERT_EQ(reports.size(), 3U);
  EXPECT_EQ(reports[0].graph_id, "@");
  EXPECT_EQ(reports[1].graph_id, "Bw");
  EXPECT_EQ(reports[2].graph_id, "A?");
}

TEST(Run, ParseErrorAfterGoodLines) {
  RunConfig cfg;
  std::istringstream in("Bw\nB\n");
  std::vector<VerificationReport> seen;
  auto source = make_source(cfg, in);
  EXPECT_THROW(run(cfg, *source, [&](const VerificationReport& r) { seen.push_back(r); }), Graph6Error);
  EXPECT_EQ(seen.size(), 1U);
}

TEST(Run, GraphWithNothingComputableIsSkipped) {
  RunConfig cfg;
  cfg.formulas = {true, false, false};
  std::istringstream in(encode_graph6(Graph::complete(8)) + "\nBw\n");
  RunSummary s;
  const auto reports = collect(cfg, in, &s);
  ASSERT_EQ(reports.size(), 2U);
  EXPECT_EQ(reports[0].computed_count(), 0);
  EXPECT_TRUE(reports[0].outcome(Formula::definition).skipped_for_budget);
  EXPECT_EQ(s.skipped_graphs, 1U);
  EXPECT_EQ(s.budget_skips, 1U);
}

TEST(Run, ThreadedOutputIsOrderedAndIdentical) {
  RunConfig cfg;
  cfg.mode = RunMode::random;
  cfg.n = 7;
  cfg.count = 120;
  cfg.seed = 11;
  cfg.check_identities = true;
  const FormatOptions fmt{OutputFormat::jsonl, false};
  auto render = [&](unsigned threads) {
    cfg.threads = threads;
    std::istringstream none;
    std::string out;
    for (const auto& r : collect(cfg, none)) out += format_report(r, fmt) + "\n";
    return out;
  };
  const std::string single = render(1);
  EXPECT_EQ(render(4), single);
  EXPECT_EQ(render(1), single);
}

TEST(RunConfig, Validation) {
  RunConfig cfg;
  cfg.mode = RunMode::random;
  cfg.count = 0;
  EXPECT_THROW(cfg.validate(), std::invalid_argument);
  cfg.count = 1;
  cfg.p = Probability{3, 2};
  EXPECT_THROW(cfg.validate(), std::invalid_argument);
  cfg.p = Probability{1, 2};
  cfg.formulas = {false, false, false};
  EXPECT_THROW(cfg.validate(), std::invalid_argument);
  cfg.formulas = {true, true, true};
  cfg.mode = RunMode::exhaustive;
  cfg.n = 9;
  EXPECT_THROW(cfg.validate(), std::invalid_argument);
}

}  // namespace
}  // namespace graphweight
