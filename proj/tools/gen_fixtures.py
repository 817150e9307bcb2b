#!/usr/bin/env python3
"""Writes the app models, configs and ground truth under fixtures/.

Scripts are hand-written and live next to the generated files.
"""
import json
import pathlib
import sys

ROOT = pathlib.Path(sys.argv[1] if len(sys.argv) > 1 else "fixtures")


def n(cls, text=None, cd=None, rid=None, click=False, edit=False, shown=True, kids=()):
    node = {"class": cls}
    if text is not None:
        node["text"] = text
    if cd is not None:
        node["content_desc"] = cd
    if rid is not None:
        node["resource_id"] = rid
    if click:
        node["clickable"] = True
    if edit:
        node["editable"] = True
    if not shown:
        node["displayed"] = False
    if kids:
        node["children"] = list(kids)
    return node


def sel(**criteria):
    return dict(criteria)


def on(screen, selector, *effects, action="click"):
    return {"screen": screen, "selector": selector, "action": action, "effects": list(effects)}


def goto(screen):
    return {"goto": screen}


def set_text(selector, value, screen=None):
    body = {"selector": selector, "value": value}
    if screen:
        body["screen"] = screen
    return {"set_text": body}


def append(selector, node, screen=None):
    body = {"selector": selector, "node": node}
    if screen:
        body["screen"] = screen
    return {"append_child": body}


def write(app, model, config, truth):
    d = ROOT / app
    d.mkdir(parents=True, exist_ok=True)
    for name, data in (("model.json", model), ("config.json", config), ("truth.json", truth)):
        (d / name).write_text(json.dumps(data, indent=2) + "\n")


def notes():
    item = "com.notes:id/design_menu_item_text"
    main = n("FrameLayout", kids=[
        n("LinearLayout", rid="com.notes:id/toolbar", kids=[
            n("ImageButton", cd="Open drawer", click=True),
            n("TextView", text="Notes", rid="com.notes:id/toolbar_title"),
            n("ImageButton", cd="Search", click=True),
        ]),
        n("RecyclerView", rid="com.notes:id/note_list", kids=[
            n("TextView", text="Shopping list", rid="com.notes:id/note_text", click=True),
            n("TextView", text="Ideas", rid="com.notes:id/note_text", click=True),
        ]),
        n("FloatingActionButton", cd="New note", rid="com.notes:id/fab", click=True),
    ])
    drawer = n("FrameLayout", kids=[
        n("NavigationView", rid="com.notes:id/nav_view", kids=[
            n("CheckedTextView", text=t, rid=item, click=True)
            for t in ("Notes", "Reminders", "Settings", "Trash")
        ]),
    ])
    settings = n("FrameLayout", kids=[
        n("LinearLayout", kids=[
            n("TextView", text="Settings", rid="com.notes:id/settings_title"),
            n("RecyclerView", rid="com.notes:id/recycler_view", kids=[
                n("LinearLayout", kids=[
                    n("TextView", text="Swipe actions", rid="android:id/title"),
                    n("LinearLayout", rid="com.notes:id/swipe_left_row", kids=[
                        n("TextView", text="Swipe left action", rid="android:id/title", click=True),
                        n("TextView", text="None", rid="android:id/summary", click=True),
                        n("TextView", text="Reset", rid="com.notes:id/reset_left", click=True),
                    ]),
                    n("LinearLayout", rid="com.notes:id/swipe_right_row", kids=[
                        n("TextView", text="Swipe right action", rid="android:id/title", click=True),
                        n("TextView", text="Archive", rid="com.notes:id/swipe_right_value", click=True),
                    ]),
                ]),
                n("LinearLayout", kids=[
                    n("TextView", text="Behavior", rid="android:id/title", click=True),
                ]),
            ]),
        ]),
    ])

    def popup(options):
        return n("FrameLayout", kids=[
            n("ListView", rid="android:id/select_dialog_listview", kids=[
                n("CheckedTextView", text=o, rid="android:id/text1", click=True) for o in options
            ] + [n("Button", text="Cancel", rid="android:id/button2", click=True)]),
        ])

    editor = n("FrameLayout", kids=[
        n("LinearLayout", kids=[
            n("ImageButton", cd="Save", click=True),
            n("ImageButton", cd="Discard", click=True),
        ]),
        n("EditText", text="", rid="com.notes:id/note_title", click=True, edit=True),
    ])
    plain = lambda title: n("FrameLayout", kids=[n("TextView", text=title)])
    screens = {
        "main": main, "drawer": drawer, "settings": settings,
        "swipe_left_popup": popup(["Delete", "Archive", "None"]),
        "swipe_right_popup": popup(["Archive", "None", "Pin"]),
        "editor": editor, "search": plain("Search notes"), "reminders": plain("No reminders"),
        "trash": plain("Trash is empty"),
    }
    left = sel(with_id="android:id/summary")
    right = sel(with_id="com.notes:id/swipe_right_value")
    transitions = [
        on("main", sel(with_content_description="Open drawer"), goto("drawer")),
        on("main", sel(with_content_description="Search"), goto("search")),
        on("main", sel(with_content_description="New note"), goto("editor")),
        on("drawer", sel(with_text="Notes"), goto("main")),
        on("drawer", sel(with_text="Reminders"), goto("reminders")),
        on("drawer", sel(with_text="Settings"), goto("settings")),
        on("drawer", sel(with_text="Trash"), goto("trash")),
        on("settings", sel(with_text="Swipe left action"), goto("swipe_left_popup")),
        on("settings", sel(with_text="Swipe right action"), goto("swipe_right_popup")),
        on("settings", sel(with_text="Reset"), set_text(left, "None")),
    ]
    for o in ("Delete", "Archive", "None"):
        transitions.append(on("swipe_left_popup", sel(with_text=o),
                              set_text(left, o, "settings"), goto("settings")))
    transitions.append(on("swipe_left_popup", sel(with_text="Cancel"), goto("settings")))
    for o in ("Archive", "None", "Pin"):
        transitions.append(on("swipe_right_popup", sel(with_text=o),
                              set_text(right, o, "settings"), goto("settings")))
    transitions.append(on("swipe_right_popup", sel(with_text="Cancel"), goto("settings")))
    transitions += [
        on("editor", sel(with_content_description="Save"),
           append(sel(with_id="com.notes:id/note_list"),
                  n("TextView", text="${text:com.notes:id/note_title}",
                    rid="com.notes:id/note_text", click=True), "main"),
           goto("main")),
        on("editor", sel(with_content_description="Discard"), goto("main")),
    ]
    model = {"name": "notes", "initial_screen": "main", "screens": screens,
             "transitions": transitions}
    config = {"input_values": {"note_title": ["Meeting", "Travel"]}}
    truth = {
        "setLeftSwipeToDelete": {"mutable_events": [3],
                                 "valid_options": {"3": ["Delete", "Archive", "None"]}},
        "createNote": {"mutable_events": [1]},
    }
    write("notes", model, config, truth)


def expense():
    main = n("FrameLayout", kids=[
        n("TextView", text="Total: 30.00", rid="com.ledger:id/total"),
        n("RecyclerView", rid="com.ledger:id/entries", kids=[
            n("LinearLayout", kids=[
                n("TextView", text="Bills", rid="com.ledger:id/entry_category"),
                n("TextView", text="30.00", rid="com.ledger:id/entry_amount"),
            ]),
        ]),
        n("FloatingActionButton", cd="Add expense", click=True),
    ])
    add = n("FrameLayout", kids=[
        n("LinearLayout", kids=[
            n("EditText", text="", rid="com.ledger:id/amount", click=True, edit=True),
            n("LinearLayout", rid="com.ledger:id/chips", kids=[
                n("Chip", text=c, rid="com.ledger:id/chip", click=True)
                for c in ("Food", "Transport", "Rent")
            ]),
            n("TextView", text="", rid="com.ledger:id/category_value", shown=False),
            n("LinearLayout", kids=[
                n("Button", text="Save", click=True),
                n("Button", text="Cancel", click=True),
            ]),
        ]),
    ])
    category = sel(with_id="com.ledger:id/category_value")
    transitions = [on("main", sel(with_content_description="Add expense"), goto("add"))]
    for c in ("Food", "Transport", "Rent"):
        transitions.append(on("add", sel(with_text=c), set_text(category, c)))
    transitions += [
        on("add", sel(with_text="Save"),
           append(sel(with_id="com.ledger:id/entries"), n("LinearLayout", kids=[
               n("TextView", text="${text:com.ledger:id/category_value}",
                 rid="com.ledger:id/entry_category"),
               n("TextView", text="${text:com.ledger:id/amount}", rid="com.ledger:id/entry_amount"),
           ]), "main"),
           goto("main")),
        on("add", sel(with_text="Cancel"), goto("main")),
    ]
    model = {"name": "expense", "initial_screen": "main", "screens": {"main": main, "add": add},
             "transitions": transitions}
    config = {"input_values": {"amount": ["7.25", "40.00"]}}
    truth = {"addExpense": {"mutable_events": [1, 2],
                            "valid_options": {"2": ["Food", "Transport", "Rent"]}}}
    write("expense", model, config, truth)


def todo():
    lists = n("FrameLayout", kids=[
        n("ListView", rid="com.todo:id/lists", kids=[
            n("TextView", text="Work", rid="com.todo:id/list_name", click=True),
            n("TextView", text="Home", rid="com.todo:id/list_name", click=True),
        ]),
    ])
    work = n("FrameLayout", kids=[
        n("TextView", text="Work", rid="com.todo:id/header"),
        n("LinearLayout", rid="com.todo:id/tasks", kids=[
            n("CheckBox", text="Write report", rid="com.todo:id/task", click=True),
        ]),
        n("TextView", text="", rid="com.todo:id/status"),
        n("FloatingActionButton", cd="Add task", click=True),
    ])
    home = n("FrameLayout", kids=[n("TextView", text="Home", rid="com.todo:id/header")])
    new_task = n("FrameLayout", kids=[
        n("EditText", text="", rid="com.todo:id/task_title", click=True, edit=True),
        n("LinearLayout", kids=[
            n("Button", text="Add", click=True),
            n("Button", text="Cancel", click=True),
        ]),
    ])
    transitions = [
        on("lists", sel(with_text="Work"), goto("work")),
        on("lists", sel(with_text="Home"), goto("home")),
        on("work", sel(with_text="Write report"),
           set_text(sel(with_id="com.todo:id/status"), "Completed: Write report")),
        on("work", sel(with_content_description="Add task"), goto("new_task")),
        on("new_task", sel(with_text="Add"),
           append(sel(with_id="com.todo:id/tasks"),
                  n("CheckBox", text="${text:com.todo:id/task_title}", rid="com.todo:id/task",
                    click=True), "work"),
           goto("work")),
        on("new_task", sel(with_text="Cancel"), goto("work")),
    ]
    model = {"name": "todo", "initial_screen": "lists",
             "screens": {"lists": lists, "work": work, "home": home, "new_task": new_task},
             "transitions": transitions}
    config = {"input_values": {"task_title": ["Call mom", "Pay rent"]}}
    truth = {"completeTask": {"mutable_events": [1]},
             "addTask": {"mutable_events": [2]}}
    write("todo", model, config, truth)


def settings():
    def row(title, summary):
        return n("LinearLayout", kids=[
            n("TextView", text=title, rid="android:id/title", click=True),
            n("TextView", text=summary, rid="android:id/summary", click=True),
        ])

    main = n("FrameLayout", kids=[
        n("RecyclerView", rid="com.settings:id/list", kids=[
            row("Region", "Choose your region"),
            row("About", "Version and licenses"),
        ]),
        n("TextView", text="Not set", rid="com.settings:id/region_value"),
    ])
    picker = n("FrameLayout", kids=[
        n("ListView", kids=[
            n("CheckedTextView", text=r, rid="android:id/text1", click=True)
            for r in ("Europe", "Asia", "America")
        ]),
    ])
    about = n("FrameLayout", kids=[n("TextView", text="Version 2.1", rid="com.settings:id/version")])
    value = sel(with_id="com.settings:id/region_value")
    transitions = [
        on("main", sel(with_text="Region"), goto("picker")),
        on("main", sel(with_text="Choose your region"), goto("picker")),
        on("main", sel(with_text="About"), goto("about")),
        on("main", sel(with_text="Version and licenses"), goto("about")),
    ]
    for r in ("Europe", "Asia", "America"):
        transitions.append(on("picker", sel(with_text=r), set_text(value, r, "main"), goto("main")))
    model = {"name": "settings", "initial_screen": "main",
             "screens": {"main": main, "picker": picker, "about": about},
             "transitions": transitions}
    truth = {"chooseRegion": {"mutable_events": [1]},
             "openAbout": {"mutable_events": []}}
    write("settings", model, {}, truth)


def search():
    home = n("FrameLayout", kids=[
        n("LinearLayout", kids=[
            n("ImageButton", cd="Search", click=True),
            n("ImageButton", cd="History", click=True),
        ]),
    ])
    query = n("FrameLayout", kids=[
        n("EditText", text="", rid="com.search:id/search_box", click=True, edit=True),
        n("Button", text="Go", click=True),
    ])
    results = n("FrameLayout", kids=[
        n("TextView", text="", rid="com.search:id/query_echo"),
        n("ListView", rid="com.search:id/results"),
    ])
    history = n("FrameLayout", kids=[
        n("TextView", text="Recent searches", rid="com.search:id/history_title"),
        n("Button", text="Clear history", click=True),
    ])

    def dialog(message):
        return n("FrameLayout", kids=[
            n("TextView", text=message, rid="android:id/message"),
            n("LinearLayout", kids=[
                n("Button", text="OK", rid="android:id/button1", click=True),
                n("Button", text="Cancel", rid="android:id/button2", click=True),
            ]),
        ])

    cleared = n("FrameLayout", kids=[
        n("TextView", text="OK", rid="com.search:id/status"),
        n("TextView", text="History cleared"),
    ])
    transitions = [
        on("home", sel(with_content_description="Search"), goto("query")),
        on("home", sel(with_content_description="History"), goto("history")),
        on("query", sel(with_text="Go"),
           set_text(sel(with_id="com.search:id/query_echo"), "${text:com.search:id/search_box}",
                    "results"),
           goto("results")),
        on("history", sel(with_text="Clear history"), goto("confirm")),
        on("confirm", sel(with_text="OK"), goto("confirm_again")),
        on("confirm", sel(with_text="Cancel"), goto("history")),
        on("confirm_again", sel(with_text="OK"), goto("cleared")),
        on("confirm_again", sel(with_text="Cancel"), goto("history")),
    ]
    model = {"name": "search", "initial_screen": "home",
             "screens": {"home": home, "query": query, "results": results, "history": history,
                         "confirm": dialog("Clear all history?"),
                         "confirm_again": dialog("This cannot be undone."), "cleared": cleared},
             "transitions": transitions}
    config = {"input_values": {"search_box": ["soup", "salad"]}}
    truth = {"searchRecipes": {"mutable_events": [1]},
             "clearHistory": {"mutable_events": []}}
    write("search", model, config, truth)


def pizza():
    def chooser(title, options, rid):
        return n("FrameLayout", kids=[
            n("TextView", text=title),
            n("RadioGroup", kids=[n("RadioButton", text=o, rid=rid, click=True) for o in options]),
            n("Button", text="Back", click=True),
        ])

    start = n("FrameLayout", kids=[
        n("Button", text="Order", click=True),
        n("TextView", text="Favorites", rid="com.pizza:id/favorites", click=True),
    ])
    favorites = n("FrameLayout", kids=[
        n("ListView", kids=[
            n("TextView", text=p, rid="com.pizza:id/favorite", click=True)
            for p in ("Margherita", "Pepperoni", "Hawaiian")
        ]),
        n("TextView", text="", rid="com.pizza:id/picked", shown=False),
        n("Button", text="Add to cart", click=True),
    ])
    cart = n("FrameLayout", kids=[
        n("TextView", text="Cart"),
        n("TextView", text="", rid="com.pizza:id/cart_item"),
    ])
    address = n("FrameLayout", kids=[
        n("EditText", text="", rid="com.pizza:id/address", click=True, edit=True),
        n("LinearLayout", kids=[
            n("Button", text="Confirm", click=True),
            n("Button", text="Back", click=True),
        ]),
    ])
    summary = n("FrameLayout", kids=[
        n("TextView", text="Order placed"),
        n("TextView", text="", rid="com.pizza:id/summary_size"),
        n("TextView", text="", rid="com.pizza:id/summary_crust"),
        n("TextView", text="", rid="com.pizza:id/summary_address"),
    ])
    screens = {
        "start": start,
        "size": chooser("Choose a size", ["Small", "Medium", "Large"], "com.pizza:id/size"),
        "crust": chooser("Choose a crust", ["Thin", "Thick", "Stuffed"], "com.pizza:id/crust"),
        "address": address, "summary": summary, "favorites": favorites, "cart": cart,
    }
    transitions = [
        on("start", sel(with_text="Order"), goto("size")),
        on("start", sel(with_text="Favorites"), goto("favorites")),
        on("size", sel(with_text="Back"), goto("start")),
        on("crust", sel(with_text="Back"), goto("size")),
    ]
    for s in ("Small", "Medium", "Large"):
        transitions.append(on("size", sel(with_text=s),
                              set_text(sel(with_id="com.pizza:id/summary_size"), s, "summary"),
                              goto("crust")))
    for c in ("Thin", "Thick", "Stuffed"):
        transitions.append(on("crust", sel(with_text=c),
                              set_text(sel(with_id="com.pizza:id/summary_crust"), c, "summary"),
                              goto("address")))
    transitions += [
        on("address", sel(with_id="com.pizza:id/address"),
           set_text(sel(with_id="com.pizza:id/summary_address"), "${input}", "summary"),
           action="input"),
        on("address", sel(with_text="Confirm"), goto("summary")),
        on("address", sel(with_text="Back"), goto("crust")),
    ]
    for p in ("Margherita", "Pepperoni", "Hawaiian"):
        transitions.append(on("favorites", sel(with_text=p),
                              set_text(sel(with_id="com.pizza:id/picked"), p)))
    transitions.append(on("favorites", sel(with_text="Add to cart"),
                          set_text(sel(with_id="com.pizza:id/cart_item"),
                                   "${text:com.pizza:id/picked}", "cart"),
                          goto("cart")))
    model = {"name": "pizza", "initial_screen": "start", "screens": screens,
             "transitions": transitions}
    config = {"input_values": {"address": ["9 Elm Rd"]}, "max_candidates_per_event": 4}
    truth = {
        "orderPizza": {"mutable_events": [1, 2, 3],
                       "valid_options": {"1": ["Small", "Medium", "Large"],
                                         "2": ["Thin", "Thick", "Stuffed"]}},
        "orderFavorite": {"mutable_events": [1],
                          "valid_options": {"1": ["Margherita", "Pepperoni", "Hawaiian"]}},
    }
    write("pizza", model, config, truth)


def bible():
    home = n("FrameLayout", kids=[
        n("ImageButton", cd="Open menu", click=True),
        n("LinearLayout", rid="com.bible:id/bottom_nav", kids=[
            n("TextView", text=t, rid="com.bible:id/nav_item", click=True)
            for t in ("Library", "Plans", "Profile")
        ]),
    ])
    library = n("FrameLayout", kids=[
        n("TextView", text="Collected chapters"),
        n("ListView", kids=[
            n("TextView", text=c, rid="com.bible:id/chapter", click=True)
            for c in ("Genesis 1", "Psalm 23")
        ]),
        n("TextView", text="", rid="com.bible:id/selected", shown=False),
        n("ImageButton", cd="Play", click=True),
    ])
    player = n("FrameLayout", kids=[
        n("TextView", text="Now playing"),
        n("TextView", text="", rid="com.bible:id/now_playing"),
    ])
    menu = n("FrameLayout", kids=[
        n("ListView", kids=[
            n("TextView", text=t, rid="com.bible:id/menu_item", click=True)
            for t in ("Bookmarks", "History", "Downloads")
        ]),
    ])
    plain = lambda title: n("FrameLayout", kids=[n("TextView", text=title)])
    transitions = [
        on("home", sel(with_text="Library"), goto("library")),
        on("home", sel(with_text="Plans"), goto("plans")),
        on("home", sel(with_text="Profile"), goto("profile")),
        on("home", sel(with_content_description="Open menu"), goto("menu")),
        on("library", sel(with_content_description="Play"),
           set_text(sel(with_id="com.bible:id/now_playing"), "${text:com.bible:id/selected}",
                    "player"),
           goto("player")),
        on("menu", sel(with_text="Bookmarks"), goto("bookmarks")),
        on("menu", sel(with_text="History"), goto("history")),
        on("menu", sel(with_text="Downloads"), goto("downloads")),
    ]
    for c in ("Genesis 1", "Psalm 23"):
        transitions.append(on("library", sel(with_text=c),
                              set_text(sel(with_id="com.bible:id/selected"), c)))
    model = {"name": "bible", "initial_screen": "home",
             "screens": {"home": home, "library": library, "player": player, "menu": menu,
                         "plans": plain("Reading plans"), "profile": plain("Profile"),
                         "bookmarks": plain("No bookmarks yet"), "history": plain("No history"),
                         "downloads": plain("No downloads")},
             "transitions": transitions}
    truth = {"listenChapter": {"mutable_events": [1],
                               "valid_options": {"1": ["Genesis 1", "Psalm 23", "John 3"]}},
             "openBookmarks": {"mutable_events": []}}
    write("bible", model, {}, truth)


for build in (notes, expense, todo, settings, search, pizza, bible):
    build()
