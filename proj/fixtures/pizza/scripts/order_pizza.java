@Test
public void orderPizza() {
    onView(withText("Order")).perform(click());
    onView(withText("Large")).perform(click());
    onView(withText("Thin")).perform(click());
    onView(withId(R.id.address)).perform(replaceText("12 Oak St"));
    onView(withText("Confirm")).perform(click());
    onView(allOf(withId(R.id.summary_size), withText("Large"))).check(matches(isDisplayed()));
    onView(allOf(withId(R.id.summary_crust), withText("Thin"))).check(matches(isDisplayed()));
    onView(withText("12 Oak St")).check(matches(isDisplayed()));
}
