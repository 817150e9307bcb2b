#include <gtest/gtest.h>

#include "taskmine/pipeline.hpp"
#include "taskmine/script.hpp"
#include "test_support.hpp"

namespace taskmine {
namespace {

using testing::CaseGenerator;
using testing::fixture_script;

TestCase parse_body(const std::string& body) {
  return parse_script("@Test\npublic void t() {\n" + body + "\n}\n");
}

ParseError parse_error(const std::string& source) {
  try {
    parse_script(source);
  } catch (const ParseError& e) {
    return e;
  }
  ADD_FAILURE() << "expected a parse error";
  return ParseError(ParseErrorKind::syntax, 0, "");
}

TEST(ParseScript, AllOfClick) {
  auto tc = parse_body(
      R"(onView(allOf(withId(android.R.id.text1), withText("Delete"))).perform(click());)");
  ASSERT_EQ(tc.events.size(), 1u);
  const auto& e = tc.events[0];
  EXPECT_EQ(e.selector.search_type(), SearchType::all_of);
  EXPECT_EQ(e.selector.criteria(),
            (std::vector<Criterion>{{CriterionKind::with_id, "android.R.id.text1"},
                                    {CriterionKind::with_text, "Delete"}}));
  EXPECT_EQ(e.action, Action::click());
  EXPECT_EQ(e.origin.first_line, 3u);
}

TEST(ParseScript, EmptyMethod) {
  auto tc = parse_script("public void nothing() {\n}\n");
  EXPECT_EQ(tc.name, "nothing");
  EXPECT_TRUE(tc.events.empty());
  EXPECT_TRUE(tc.assertions.empty());
  EXPECT_TRUE(tc.lacks_assertions());
}

TEST(ParseScript, ReplaceTextIsInput) {
  auto tc = parse_body(R"(onView(withId(R.id.amount)).perform(replaceText("20"));)");
  ASSERT_EQ(tc.events.size(), 1u);
  EXPECT_EQ(tc.events[0].selector, Selector::single(CriterionKind::with_id, "amount"));
  EXPECT_EQ(tc.events[0].action, Action::input("20"));
  EXPECT_EQ(parse_script(print_script(tc)), tc);
}

TEST(ParseScript, TypeTextAndKeyboardNoOps) {
  auto tc = parse_body(R"(
    onView(withId(R.id.a)).perform(typeText("x"), closeSoftKeyboard());
    closeSoftKeyboard();
    Espresso.closeSoftKeyboard();
    onView(withContentDescription("Go")).perform(closeSoftKeyboard(), click());)");
  ASSERT_EQ(tc.events.size(), 2u);
  EXPECT_EQ(tc.events[0].action, Action::input("x"));
  EXPECT_EQ(tc.events[1].action, Action::click());
}

TEST(ParseScript, MotivationScript) {
  auto tc = fixture_script("notes", "set_left_swipe_delete");
  EXPECT_EQ(tc.name, "setLeftSwipeToDelete");
  ASSERT_EQ(tc.events.size(), 4u);
  EXPECT_EQ(tc.events[0].selector,
            Selector::single(CriterionKind::with_content_description, "Open drawer"));
  EXPECT_EQ(tc.events[1].selector, Selector::single(CriterionKind::with_text, "Settings"));
  EXPECT_EQ(tc.events[2].selector, Selector::single(CriterionKind::with_text, "Swipe left action"));
  EXPECT_EQ(tc.events[3].selector.search_type(), SearchType::all_of);
  ASSERT_EQ(tc.assertions.size(), 1u);
  EXPECT_EQ(tc.assertions[0].selector.criteria()[1].value, "Delete");

  auto printed = print_script(tc);
  EXPECT_EQ(std::count(printed.begin(), printed.end(), '\n'), 8);
  EXPECT_EQ(parse_script(printed), tc);
}

TEST(ParseScript, BindingsAcrossStatements) {
  auto tc = parse_body(R"(
    ViewInteraction button = onView(
        withText("Go"));
    button.perform(click());
    ViewInteraction fused = onView(withText("Now")).perform(click());
    ViewInteraction label = onView(withText("Done"));
    label.check(matches(isDisplayed()));)");
  ASSERT_EQ(tc.events.size(), 2u);
  EXPECT_EQ(tc.events[0].origin.first_line, 6u);
  EXPECT_EQ(tc.events[1].selector, Selector::single(CriterionKind::with_text, "Now"));
  ASSERT_EQ(tc.assertions.size(), 1u);
}

TEST(ParseScript, CommentsAndEscapes) {
  auto tc = parse_body(R"(
    // a comment with onView(
    /* block
       comment */
    onView(withText("say \"hi\"\né")).perform(click());)");
  ASSERT_EQ(tc.events.size(), 1u);
  EXPECT_EQ(tc.events[0].selector.criteria()[0].value, "say \"hi\"\n\xc3\xa9");
}

TEST(ParseScript, UnsupportedApis) {
  auto e = parse_error(read_file(testing::fixture_path("notes/scripts/swipe_note_away.java")));
  EXPECT_EQ(e.kind(), ParseErrorKind::unsupported_api);
  EXPECT_EQ(e.api(), "swipeLeft");
  EXPECT_EQ(e.line(), 3u);

  e = parse_error("public void t() {\n  onView(withHint(\"x\")).perform(click());\n}");
  EXPECT_EQ(e.api(), "withHint");
  EXPECT_EQ(e.line(), 2u);

  e = parse_error(
      "public void t() {\n  onView(allOf(withText(\"a\"), allOf(withText(\"b\"), withId(R.id.c))))"
      ".perform(click());\n}");
  EXPECT_EQ(e.kind(), ParseErrorKind::unsupported_api);

  e = parse_error("public void t() {\n  onView(withText(\"a\")).check(doesNotExist());\n}");
  EXPECT_EQ(e.api(), "doesNotExist");
}

TEST(ParseScript, SyntaxErrorsNameALine) {
  auto e = parse_error("public void t() {\n  onView(withText(\"a\")).perform(click())\n}");
  EXPECT_EQ(e.kind(), ParseErrorKind::syntax);
  EXPECT_GE(e.line(), 2u);

  e = parse_error("public void t() {\n  onView(withText(\"a).perform(click());\n}");
  EXPECT_EQ(e.kind(), ParseErrorKind::syntax);

  e = parse_error(
      "public void t() {\n  onView(withText(\"a\")).check(matches(isDisplayed()));\n"
      "  onView(withText(\"b\")).perform(click());\n}");
  EXPECT_EQ(e.kind(), ParseErrorKind::syntax);
  EXPECT_EQ(e.line(), 3u);
}

TEST(PrintScript, EmptyTestCaseIsAShell) {
  TestCase tc{"shell", {}, {}};
  auto text = print_script(tc);
  EXPECT_NE(text.find("public void shell() {"), std::string::npos);
  EXPECT_EQ(parse_script(text), tc);
}

TEST(PrintScript, RoundTripGenerated) {
  CaseGenerator gen(20261019);
  for (int i = 0; i < 200; ++i) {
    auto tc = gen.next();
    auto text = print_script(tc);
    TestCase back;
    ASSERT_NO_THROW(back = parse_script(text)) << text;
    ASSERT_EQ(back, tc) << text;
    EXPECT_EQ(print_script(back), text);
  }
}

TEST(PrintScript, SourceOrderIsKept) {
  CaseGenerator gen(7);
  for (int i = 0; i < 20; ++i) {
    auto tc = gen.next();
    auto back = parse_script(print_script(tc));
    for (std::size_t k = 1; k < back.events.size(); ++k)
      EXPECT_LT(back.events[k - 1].origin.first_line, back.events[k].origin.first_line);
  }
}

TEST(IdTokens, QualifiedAndShortForms) {
  EXPECT_EQ(id_token("amount"), "R.id.amount");
  EXPECT_EQ(id_token("android.R.id.text1"), "android.R.id.text1");
  EXPECT_EQ(id_value("R.id.amount"), "amount");
  EXPECT_EQ(id_value("android.R.id.text1"), "android.R.id.text1");
}

TEST(TestCaseJson, RoundTrip) {
  CaseGenerator gen(99);
  for (int i = 0; i < 50; ++i) {
    auto tc = gen.next();
    EXPECT_EQ(test_case_from_json(test_case_to_json(tc)), tc);
  }
}

}  // namespace
}  // namespace taskmine
