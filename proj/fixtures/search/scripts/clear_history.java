@Test
public void clearHistory() {
    onView(withContentDescription("History")).perform(click());
    onView(withText("Clear history")).perform(click());
    onView(allOf(withId(android.R.id.button1), withText("OK"))).perform(click());
    onView(allOf(withId(android.R.id.button1), withText("OK"))).perform(click());
    onView(withText("OK")).check(matches(isDisplayed()));
}
