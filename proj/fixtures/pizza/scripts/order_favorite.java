@Test
public void orderFavorite() {
    onView(withText("Favorites")).perform(click());
    onView(withText("Margherita")).perform(click());
    onView(withText("Add to cart")).perform(click());
    onView(allOf(withId(R.id.cart_item), withText("Margherita"))).check(matches(isDisplayed()));
}
