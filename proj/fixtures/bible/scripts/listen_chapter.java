@Test
public void listenChapter() {
    onView(withText("Library")).perform(click());
    onView(withText("Genesis 1")).perform(click());
    onView(withContentDescription("Play")).perform(click());
    onView(allOf(withId(R.id.now_playing), withText("Genesis 1"))).check(matches(isDisplayed()));
}
