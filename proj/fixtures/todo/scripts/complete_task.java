@Test
public void completeTask() {
    onView(withText("Work")).perform(click());
    onView(withText("Write report")).perform(click());
    onView(withText("Completed: Write report")).check(matches(isDisplayed()));
}
