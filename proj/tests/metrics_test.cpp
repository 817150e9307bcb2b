#include <gtest/gtest.h>

#include "taskmine/metrics.hpp"
#include "taskmine/pipeline.hpp"
#include "test_support.hpp"

namespace taskmine {
namespace {

using nlohmann::json;
using testing::fixture_config;
using testing::fixture_model;
using testing::fixture_script;

TEST(Ratios, PublishedMatrix) {
  Confusion c{92, 9, 15, 28};
  auto r = ratios(c);
  EXPECT_NEAR(*r.precision, 0.757, 0.005);
  EXPECT_NEAR(*r.recall, 0.651, 0.005);
  EXPECT_NEAR(*r.f1, 0.700, 0.005);
  // Detection rate counts over truly mutable events (tp + fn), so it equals recall.
  EXPECT_DOUBLE_EQ(*r.mdr * 43, 28);
  EXPECT_DOUBLE_EQ(*r.mdr, *r.recall);
}

TEST(DetectionRate, TwentyEightOfThirtySeven) {
  EXPECT_NEAR(*detection_rate(28, 37), 0.7568, 0.00005);
  EXPECT_NEAR(*detection_rate(24, 33), 0.7273, 0.00005);
  EXPECT_FALSE(detection_rate(0, 0));
}

TEST(Ratios, UndefinedDenominators) {
  auto r = ratios(Confusion{5, 0, 0, 0});
  EXPECT_FALSE(r.mdr);
  EXPECT_FALSE(r.precision);
  EXPECT_FALSE(r.f1);
  EXPECT_EQ(summary_to_json(EvalSummary{}, false).at("precision"), nullptr);
}

TEST(Reduction, PublishedElimination) {
  Reduction r{5508, 404};
  EXPECT_NEAR(*r.percent(), 92.67, 0.01);
  EXPECT_DOUBLE_EQ(round_half_up(*r.percent(), 2), 92.67);
  EXPECT_FALSE(Reduction{}.percent());
}

TEST(RoundHalfUp, Ties) {
  EXPECT_DOUBLE_EQ(round_half_up(0.125, 2), 0.13);
  EXPECT_DOUBLE_EQ(round_half_up(2.675, 2), 2.68);
  EXPECT_DOUBLE_EQ(round_half_up(1.0049, 2), 1.0);
}

MutationReport synthetic(std::size_t events, const std::set<std::size_t>& mutable_idx) {
  MutationReport r;
  r.test_case = "synthetic";
  r.app = "demo";
  for (std::size_t i = 0; i < events; ++i) {
    EventRecord e;
    e.pool.total_on_screen = 4;
    if (mutable_idx.count(i)) {
      MutantCandidate c{ActionKind::click, FeatureKind::text, "x", {}};
      e.pool.candidates = {c};
      e.survivors = {{c, {}}};
    }
    r.events.push_back(std::move(e));
  }
  return r;
}

TEST(Summarize, AllCorrect) {
  GroundTruth truth{{"synthetic", {{1, 3}, {}}}};
  auto s = summarize({synthetic(5, {1, 3})}, truth);
  EXPECT_EQ(s.confusion, (Confusion{3, 0, 0, 2}));
  EXPECT_DOUBLE_EQ(*s.ratios.mdr, 1.0);
  EXPECT_EQ(s.reduction.before, 20u);
  EXPECT_EQ(s.reduction.after, 2u);
}

TEST(Summarize, CountsAddUp) {
  GroundTruth truth{{"synthetic", {{0, 1, 2}, {}}}};
  auto s = summarize({synthetic(6, {1, 4})}, truth);
  EXPECT_EQ(s.confusion.total(), 6u);
  EXPECT_EQ(s.confusion.tp + s.confusion.fn, 3u);
  EXPECT_EQ(s.confusion.tn + s.confusion.fp, 3u);
}

TEST(Summarize, MissingTruth) {
  EXPECT_THROW(summarize({synthetic(1, {})}, GroundTruth{}), MissingTruth);
}

TEST(Classify, FlawLabels) {
  auto tc = fixture_script("notes", "set_left_swipe_delete");
  auto report = detect(fixture_model("notes"), tc);
  auto m = generate(tc, report)[0];
  CaseTruth truth{{3}, {{3, {"Delete", "Archive", "None"}}}};
  EXPECT_EQ(classify_method(m, report, truth), FlawLabel::succeed);

  CaseTruth incomplete{{3}, {{3, {"Delete", "Archive", "None", "Pin"}}}};
  EXPECT_EQ(classify_method(m, report, incomplete), FlawLabel::type3);

  auto wrong = m;
  wrong.covered_events = {0, 3};
  EXPECT_EQ(classify_method(wrong, report, truth), FlawLabel::type2);

  CaseTruth missed{{2, 3}, {{3, {"Delete", "Archive", "None", "Pin"}}}};
  EXPECT_EQ(classify_method(wrong, report, missed), FlawLabel::type1);
}

TEST(SummaryJson, StableAndTimingsOptional) {
  auto tc = fixture_script("pizza", "order_pizza");
  auto report = detect(fixture_model("pizza"), tc, fixture_config("pizza"));
  auto truth = load_truth(testing::fixture_path("pizza/truth.json").string());
  auto s = summarize({report}, truth);
  auto j = summary_to_json(s, false);
  EXPECT_FALSE(j.contains("timing"));
  EXPECT_EQ(j.dump(), summary_to_json(s, false).dump());
  auto t = summary_to_json(s, true).at("timing");
  EXPECT_LE(t.at("event_seconds_sum").get<double>(), t.at("total_seconds").get<double>() + 1e-9);
  auto table = summary_table(s);
  EXPECT_NE(table.find("pizza"), std::string::npos);
  EXPECT_NE(table.find("Total"), std::string::npos);
}

TEST(TruthJson, Parses) {
  auto t = truth_from_json(json::parse(
      R"({"a": {"mutable_events": [3], "valid_options": {"3": ["x", "y"]}}, "b": {"mutable_events": []}})"));
  EXPECT_EQ(t.at("a").mutable_events, std::set<std::size_t>{3});
  EXPECT_EQ(t.at("a").valid_options.at(3), (std::vector<std::string>{"x", "y"}));
  EXPECT_TRUE(t.at("b").mutable_events.empty());
}

}  // namespace
}  // namespace taskmine
