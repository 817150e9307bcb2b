@Test
public void setLeftSwipeToDelete() {
    ViewInteraction appCompatImageButton = onView(withContentDescription("Open drawer"));
    appCompatImageButton.perform(click());
    ViewInteraction navigationMenuItemView = onView(withText("Settings"));
    navigationMenuItemView.perform(click());
    ViewInteraction recyclerView = onView(withText("Swipe left action"));
    recyclerView.perform(click());
    ViewInteraction appCompatCheckedTextView = onView(
            allOf(withId(android.R.id.text1), withText("Delete")));
    appCompatCheckedTextView.perform(click());

    ViewInteraction textView = onView(
            allOf(withId(android.R.id.summary), withText("Delete")));
    textView.check(matches(isDisplayed()));
}
