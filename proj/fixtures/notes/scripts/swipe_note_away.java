@Test
public void swipeNoteAway() {
    onView(withText("Ideas")).perform(swipeLeft());
    onView(withText("Ideas")).check(doesNotExist());
}
