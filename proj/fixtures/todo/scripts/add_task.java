@Test
public void addTask() {
    onView(withText("Work")).perform(click());
    onView(withContentDescription("Add task")).perform(click());
    onView(withId(R.id.task_title)).perform(replaceText("Buy milk"));
    onView(withText("Add")).perform(click());
    onView(withText("Buy milk")).check(matches(isDisplayed()));
}
