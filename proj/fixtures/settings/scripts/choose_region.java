@Test
public void chooseRegion() {
    onView(withText("Region")).perform(click());
    onView(withText("Europe")).perform(click());
    onView(allOf(withId(R.id.region_value), withText("Europe"))).check(matches(isDisplayed()));
}
