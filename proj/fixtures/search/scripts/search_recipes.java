@Test
public void searchRecipes() {
    onView(withContentDescription("Search")).perform(click());
    onView(withId(R.id.search_box)).perform(typeText("pasta"), closeSoftKeyboard());
    onView(withText("Go")).perform(click());
    onView(withText("pasta")).check(matches(isDisplayed()));
}
