#include <gtest/gtest.h>

#include "taskmine/app_model.hpp"
#include "test_support.hpp"

namespace taskmine {
namespace {

using nlohmann::json;
using testing::fixture_model;

json tiny() {
  return json::parse(R"({
    "name": "tiny",
    "initial_screen": "a",
    "screens": {"a": {"class": "FrameLayout", "children": [
                  {"class": "Button", "text": "Go", "clickable": true}]},
                "b": {"class": "FrameLayout"}},
    "transitions": [{"screen": "a", "selector": {"with_text": "Go"},
                     "effects": [{"goto": "b"}]}]
  })");
}

TEST(AppModelJson, DefaultsForOmittedBooleans) {
  auto e = element_from_json(json::parse(R"({"class": "View"})"));
  EXPECT_FALSE(e.clickable);
  EXPECT_FALSE(e.editable);
  EXPECT_TRUE(e.displayed);
  EXPECT_FALSE(e.text.has_value());
}

TEST(AppModelJson, UnknownNodeKeyRejected) {
  EXPECT_THROW(element_from_json(json::parse(R"({"class": "View", "colour": "red"})")), ModelError);
  EXPECT_THROW(element_from_json(json::parse(R"({"text": "x"})")), ModelError);
}

TEST(AppModelJson, TopLevelKeysAreExact) {
  auto j = tiny();
  j["version"] = 2;
  EXPECT_THROW(model_from_json(j), ModelError);
  j = tiny();
  j.erase("transitions");
  EXPECT_THROW(model_from_json(j), ModelError);
}

TEST(AppModelJson, DanglingGotoNamesTheScreen) {
  auto j = tiny();
  j["transitions"][0]["effects"][0]["goto"] = "nowhere";
  j["initial_screen"] = "missing";
  try {
    model_from_json(j);
    FAIL() << "expected ModelError";
  } catch (const ModelError& e) {
    ASSERT_EQ(e.problems().size(), 2u);
    EXPECT_NE(std::string(e.what()).find("nowhere"), std::string::npos);
    EXPECT_NE(std::string(e.what()).find("missing"), std::string::npos);
  }
}

TEST(AppModelJson, SelectorNotationForms) {
  auto notation = json::parse(R"({"search_type": "allOf", "criteria": [
      {"name": "withId", "args": [{"type": "string", "content": "android.R.id.text1"}]},
      {"name": "withText", "args": [{"type": "string", "content": "Delete"}]}]})");
  Selector s = selector_from_json(notation);
  EXPECT_EQ(s.search_type(), SearchType::all_of);
  EXPECT_EQ(s.criteria()[1].value, "Delete");
  EXPECT_EQ(selector_to_json(s), notation);
  EXPECT_EQ(selector_from_json(json::parse(R"({"with_text": "Go"})")),
            Selector::single(CriterionKind::with_text, "Go"));
  EXPECT_THROW(selector_from_json(json::parse(R"({"search_type": "allOf", "criteria": [
      {"name": "withText", "args": [{"type": "string", "content": "x"}]}]})")),
               ModelError);
}

TEST(AppModelJson, EveryFixtureRoundTrips) {
  for (const char* app : {"notes", "expense", "todo", "settings", "search", "pizza", "bible"}) {
    auto model = fixture_model(app);
    EXPECT_EQ(model_from_json(model_to_json(model)), model) << app;
    EXPECT_TRUE(model.validate().empty()) << app;
  }
}

TEST(AppModelJson, EffectsKeepTheirScreen) {
  auto model = fixture_model("notes");
  auto j = model_to_json(model);
  bool saw_screen = false;
  for (const auto& t : j["transitions"])
    for (const auto& e : t["effects"])
      if (e.contains("set_text") && e["set_text"].contains("screen")) saw_screen = true;
  EXPECT_TRUE(saw_screen);
}

}  // namespace
}  // namespace taskmine
