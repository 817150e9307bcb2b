@Test
public void openAbout() {
    onView(withText("About")).perform(click());
    onView(withText("Version 2.1")).check(matches(isDisplayed()));
}
