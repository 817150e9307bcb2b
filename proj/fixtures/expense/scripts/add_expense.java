@Test
public void addExpense() {
    onView(withContentDescription("Add expense")).perform(click());
    onView(withId(R.id.amount)).perform(typeText("12.50"));
    closeSoftKeyboard();
    onView(withText("Food")).perform(click());
    onView(withText("Save")).perform(click());
    onView(withText("12.50")).check(matches(isDisplayed()));
    onView(allOf(withId(R.id.entry_category), withText("Food"))).check(matches(isDisplayed()));
}
