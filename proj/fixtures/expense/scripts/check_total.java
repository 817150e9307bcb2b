@Test
public void checkTotal() {
    onView(withContentDescription("Add expense")).perform(click());
    onView(withId(R.id.amount)).perform(typeText("12.00"));
    onView(withText("Rent")).perform(click());
    onView(withText("Save")).perform(click());
    // total captured when the test was recorded
    onView(withText("Total: 42.00")).check(matches(isDisplayed()));
}
