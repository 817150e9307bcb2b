#include <gtest/gtest.h>

#include "taskmine/runtime.hpp"
#include "taskmine/task_method.hpp"
#include "test_support.hpp"

namespace taskmine {
namespace {

using testing::fixture_config;
using testing::fixture_model;
using testing::fixture_script;

std::vector<TaskMethod> generated(const std::string& app, const std::string& stem) {
  auto tc = fixture_script(app, stem);
  return generate(tc, detect(fixture_model(app), tc, fixture_config(app)));
}

MutantCandidate click_on(ElementSummary e, FeatureKind kind) {
  MutantCandidate c{ActionKind::click, kind, e.feature(kind), e};
  return c;
}

TEST(Generate, MotivationMethod) {
  auto methods = generated("notes", "set_left_swipe_delete");
  ASSERT_EQ(methods.size(), 1u);
  const auto& m = methods[0];
  EXPECT_EQ(m.params, std::vector<std::string>{"param"});
  ASSERT_EQ(m.body.size(), 4u);
  EXPECT_EQ(std::get<FixedClick>(m.body[0]), (FixedClick{FeatureKind::content_desc, "Open drawer"}));
  EXPECT_EQ(std::get<FixedClick>(m.body[1]), (FixedClick{FeatureKind::text, "Settings"}));
  EXPECT_EQ(std::get<FixedClick>(m.body[2]), (FixedClick{FeatureKind::text, "Swipe left action"}));
  EXPECT_EQ(std::get<BranchGroup>(m.body[3]),
            (BranchGroup{"param", FeatureKind::text, {"Delete", "Archive", "None"}}));
  EXPECT_EQ(m.covered_events, std::vector<std::size_t>{3});
  EXPECT_EQ(m.source_test, "setLeftSwipeToDelete");
}

TEST(Generate, MotivationRenderedText) {
  auto text = render(generated("notes", "set_left_swipe_delete")[0]);
  EXPECT_EQ(text,
            "// source: setLeftSwipeToDelete; parameterized events: 3\n"
            "public void setLeftSwipeToDelete__m3(String param) {\n"
            "    onEventClickingByCD(\"Open drawer\");\n"
            "    onEventClickingByText(\"Settings\");\n"
            "    onEventClickingByText(\"Swipe left action\");\n"
            "    if (param.equals(\"Delete\")) { onEventClickingByText(\"Delete\"); }\n"
            "    if (param.equals(\"Archive\")) { onEventClickingByText(\"Archive\"); }\n"
            "    if (param.equals(\"None\")) { onEventClickingByText(\"None\"); }\n"
            "}\n");
}

TEST(Generate, ZeroMutableEvents) {
  auto methods = generated("bible", "open_bookmarks");
  ASSERT_EQ(methods.size(), 1u);
  EXPECT_EQ(methods[0].name, "openBookmarks");
  EXPECT_TRUE(methods[0].params.empty());
  for (const auto& s : methods[0].body) EXPECT_TRUE(std::holds_alternative<FixedClick>(s));
  EXPECT_EQ(render(methods[0]).find("if ("), std::string::npos);
}

TEST(Generate, TwoMutableEvents) {
  auto methods = generated("expense", "add_expense");
  ASSERT_EQ(methods.size(), 3u);
  EXPECT_EQ(methods[0].name, "addExpense__m1");
  EXPECT_EQ(methods[1].name, "addExpense__m2");
  EXPECT_EQ(methods[2].name, "addExpense__all");
  EXPECT_EQ(methods[0].params, std::vector<std::string>{"param"});
  EXPECT_EQ(methods[2].params, (std::vector<std::string>{"param1", "param2"}));
  EXPECT_TRUE(std::holds_alternative<ParamInput>(methods[2].body[1]));
  EXPECT_TRUE(std::holds_alternative<BranchGroup>(methods[2].body[2]));
  EXPECT_TRUE(std::holds_alternative<FixedClick>(methods[0].body[2]));
  EXPECT_TRUE(std::holds_alternative<FixedInput>(methods[1].body[1]));
}

TEST(Generate, ParamAndBodyLaws) {
  for (const auto& [app, stem] : std::vector<std::pair<std::string, std::string>>{
           {"pizza", "order_pizza"}, {"notes", "create_note"}, {"settings", "choose_region"}}) {
    auto tc = fixture_script(app, stem);
    auto report = detect(fixture_model(app), tc, fixture_config(app));
    for (const auto& m : generate(tc, report)) {
      EXPECT_EQ(m.body.size(), tc.events.size());
      std::size_t parameterized = 0;
      for (const auto& s : m.body)
        parameterized += std::holds_alternative<BranchGroup>(s) || std::holds_alternative<ParamInput>(s);
      EXPECT_EQ(parameterized, m.params.size());
      for (const auto& s : m.body) {
        const auto* g = std::get_if<BranchGroup>(&s);
        if (!g) continue;
        std::set<std::string> unique(g->options.begin(), g->options.end());
        EXPECT_EQ(unique.size(), g->options.size());
      }
    }
  }
}

TEST(Generate, ReportMustBelongToTestCase) {
  auto tc = fixture_script("notes", "create_note");
  auto report = detect(fixture_model("notes"), fixture_script("notes", "set_left_swipe_delete"));
  EXPECT_ANY_THROW(generate(tc, report));
}

TEST(ChooseFeature, PriorityAndFallbacks) {
  ElementSummary del{"CheckedTextView", "Delete", "", "android:id/text1"};
  ElementSummary arc{"CheckedTextView", "Archive", "", "android:id/text1"};
  EXPECT_EQ(choose_feature(del, {click_on(arc, FeatureKind::text)}), FeatureKind::text);

  ElementSummary back{"ImageButton", "", "Back", ""};
  ElementSummary menu{"ImageButton", "", "Menu", ""};
  EXPECT_EQ(choose_feature(back, {click_on(menu, FeatureKind::content_desc)}),
            FeatureKind::content_desc);

  ElementSummary a{"Button", "Go", "", "app:id/go"};
  ElementSummary b{"Button", "", "", "app:id/stop"};
  EXPECT_EQ(choose_feature(a, {click_on(b, FeatureKind::resource_id)}), FeatureKind::resource_id);

  ElementSummary c{"Button", "", "Only cd", ""};
  EXPECT_THROW(choose_feature(a, {click_on(c, FeatureKind::content_desc)}), GenerationError);
}

TEST(Render, LoadInvertsRenderForCorpusMethods) {
  for (const auto& [app, stem] : std::vector<std::pair<std::string, std::string>>{
           {"notes", "set_left_swipe_delete"}, {"notes", "create_note"}, {"expense", "add_expense"},
           {"pizza", "order_pizza"}, {"bible", "open_bookmarks"}, {"search", "search_recipes"}}) {
    for (const auto& m : generated(app, stem)) {
      EXPECT_EQ(load(render(m)), m) << m.name;
      EXPECT_EQ(method_from_json(method_to_json(m)), m) << m.name;
    }
  }
}

TEST(Render, EscapesSurviveLoad) {
  TaskMethod m{"odd", {"param"}, {}, "src", {0}};
  m.body.push_back(BranchGroup{"param", FeatureKind::text, {"say \"x\"", "a\\b", "é"}});
  m.body.push_back(FixedInput{FeatureKind::resource_id, "app:id/f", "line\nbreak"});
  EXPECT_EQ(load(render(m)), m);
}

}  // namespace
}  // namespace taskmine
