@Test
public void openBookmarks() {
    onView(withContentDescription("Open menu")).perform(click());
    onView(withText("Bookmarks")).perform(click());
    onView(withText("No bookmarks yet")).check(matches(isDisplayed()));
}
