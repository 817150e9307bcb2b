@Test
public void createNote() {
    onView(withContentDescription("New note")).perform(click());
    onView(withId(R.id.note_title)).perform(replaceText("Groceries"), closeSoftKeyboard());
    onView(withContentDescription("Save")).perform(click());
    onView(withText("Groceries")).check(matches(isDisplayed()));
}
