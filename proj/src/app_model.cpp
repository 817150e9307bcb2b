#include "taskmine/app_model.hpp"

#include <fstream>
#include <set>
#include <sstream>

namespace taskmine {

using nlohmann::json;

namespace {

const std::set<std::string> kModelKeys = {"name", "initial_screen", "screens", "transitions"};
const std::set<std::string> kNodeKeys = {"class",     "text",     "content_desc", "resource_id",
                                         "clickable", "editable", "displayed",    "children"};

[[noreturn]] void malformed(const std::string& what) { throw ModelError({what}); }

std::string notation_name(CriterionKind kind) {
  switch (kind) {
    case CriterionKind::with_text:
      return "withText";
    case CriterionKind::with_content_description:
      return "withContentDescription";
    case CriterionKind::with_id:
      return "withId";
  }
  return "withText";
}

std::optional<std::string> optional_string(const json& j, const char* key) {
  auto it = j.find(key);
  if (it == j.end() || it->is_null()) return std::nullopt;
  if (!it->is_string()) malformed(std::string("node key '") + key + "' must be a string");
  return it->get<std::string>();
}

bool optional_bool(const json& j, const char* key, bool fallback) {
  auto it = j.find(key);
  if (it == j.end()) return fallback;
  if (!it->is_boolean()) malformed(std::string("node key '") + key + "' must be a boolean");
  return it->get<bool>();
}

std::string target_screen(const json& payload) {
  return payload.contains("screen") ? payload.at("screen").get<std::string>() : std::string{};
}

Effect effect_from_json(const json& j) {
  if (!j.is_object() || j.size() != 1) malformed("effect must be a single-key object");
  const auto& [key, payload] = *j.items().begin();
  if (key == "goto") {
    if (!payload.is_string()) malformed("goto effect takes a screen id");
    return GotoEffect{payload.get<std::string>()};
  }
  if (key == "set_text")
    return SetTextEffect{target_screen(payload), selector_from_json(payload.at("selector")),
                         payload.at("value").get<std::string>()};
  if (key == "append_child")
    return AppendChildEffect{target_screen(payload), selector_from_json(payload.at("selector")),
                             element_from_json(payload.at("node"))};
  if (key == "remove_node")
    return RemoveNodeEffect{target_screen(payload), selector_from_json(payload.at("selector"))};
  malformed("unknown effect '" + key + "'");
}

json effect_to_json(const Effect& effect) {
  auto with_screen = [](json payload, const std::string& screen) {
    if (!screen.empty()) payload["screen"] = screen;
    return payload;
  };
  return std::visit(
      [&](const auto& e) -> json {
        using T = std::decay_t<decltype(e)>;
        if constexpr (std::is_same_v<T, GotoEffect>) {
          return {{"goto", e.screen}};
        } else if constexpr (std::is_same_v<T, SetTextEffect>) {
          return {{"set_text",
                   with_screen({{"selector", selector_to_json(e.selector)}, {"value", e.value}},
                               e.screen)}};
        } else if constexpr (std::is_same_v<T, AppendChildEffect>) {
          return {{"append_child",
                   with_screen({{"selector", selector_to_json(e.selector)},
                                {"node", element_to_json(e.node)}},
                               e.screen)}};
        } else {
          return {{"remove_node",
                   with_screen({{"selector", selector_to_json(e.selector)}}, e.screen)}};
        }
      },
      effect);
}

}  // namespace

std::string_view to_string(ActionKind kind) { return kind == ActionKind::click ? "click" : "input"; }

ModelError::ModelError(std::vector<std::string> problems)
    : std::runtime_error([&] {
        std::string msg = "invalid app model";
        for (const auto& p : problems) msg += "\n  - " + p;
        return msg;
      }()),
      problems_(std::move(problems)) {}

std::vector<std::string> AppModel::validate() const {
  std::vector<std::string> problems;
  auto known = [&](const std::string& id) { return screens.count(id) > 0; };
  if (name.empty()) problems.push_back("model name is empty");
  if (!known(initial_screen))
    problems.push_back("initial_screen '" + initial_screen + "' is not a declared screen");
  for (std::size_t i = 0; i < transitions.size(); ++i) {
    const auto& t = transitions[i];
    const std::string where = "transition " + std::to_string(i);
    if (!known(t.screen))
      problems.push_back(where + ": source screen '" + t.screen + "' is not a declared screen");
    for (const auto& effect : t.effects) {
      std::visit(
          [&](const auto& e) {
            if (!e.screen.empty() && !known(e.screen))
              problems.push_back(where + ": target screen '" + e.screen +
                                 "' is not a declared screen");
          },
          effect);
    }
  }
  return problems;
}

json element_to_json(const GuiElement& element) {
  json j = {{"class", element.class_name}};
  if (element.text) j["text"] = *element.text;
  if (element.content_desc) j["content_desc"] = *element.content_desc;
  if (element.resource_id) j["resource_id"] = *element.resource_id;
  if (element.clickable) j["clickable"] = true;
  if (element.editable) j["editable"] = true;
  if (!element.displayed) j["displayed"] = false;
  if (!element.children.empty()) {
    json children = json::array();
    for (const auto& c : element.children) children.push_back(element_to_json(c));
    j["children"] = std::move(children);
  }
  return j;
}

GuiElement element_from_json(const json& j) {
  if (!j.is_object()) malformed("node must be an object");
  for (const auto& [key, value] : j.items())
    if (!kNodeKeys.count(key)) malformed("unknown node key '" + key + "'");
  if (!j.contains("class") || !j.at("class").is_string()) malformed("node needs a 'class' string");
  GuiElement e;
  e.class_name = j.at("class").get<std::string>();
  e.text = optional_string(j, "text");
  e.content_desc = optional_string(j, "content_desc");
  e.resource_id = optional_string(j, "resource_id");
  e.clickable = optional_bool(j, "clickable", false);
  e.editable = optional_bool(j, "editable", false);
  e.displayed = optional_bool(j, "displayed", true);
  if (auto it = j.find("children"); it != j.end()) {
    if (!it->is_array()) malformed("'children' must be an array");
    for (const auto& c : *it) e.children.push_back(element_from_json(c));
  }
  return e;
}

json selector_to_json(const Selector& selector) {
  json criteria = json::array();
  for (const auto& c : selector.criteria())
    criteria.push_back({{"name", notation_name(c.kind)},
                        {"args", json::array({{{"type", "string"}, {"content", c.value}}})}});
  return {{"search_type", selector.search_type() == SearchType::all_of ? "allOf" : "single"},
          {"criteria", std::move(criteria)}};
}

Selector selector_from_json(const json& j) {
  if (!j.is_object()) malformed("selector must be an object");
  try {
    if (j.contains("criteria")) {
      std::vector<Criterion> criteria;
      for (const auto& c : j.at("criteria")) {
        const auto& args = c.at("args");
        if (!args.is_array() || args.size() != 1) malformed("criterion takes exactly one argument");
        criteria.push_back({criterion_kind_from_string(c.at("name").get<std::string>()),
                            args.at(0).at("content").get<std::string>()});
      }
      auto type = j.value("search_type", "single");
      if (type != "single" && type != "allOf") malformed("unknown search_type '" + type + "'");
      return Selector(type == "allOf" ? SearchType::all_of : SearchType::single,
                      std::move(criteria));
    }
    std::vector<Criterion> criteria;
    for (const auto& [key, value] : j.items())
      criteria.push_back({criterion_kind_from_string(key), value.get<std::string>()});
    if (criteria.empty()) malformed("selector has no criteria");
    return Selector::of(std::move(criteria));
  } catch (const SelectorError& e) {
    malformed(e.what());
  } catch (const json::exception& e) {
    malformed(std::string("selector: ") + e.what());
  }
}

json model_to_json(const AppModel& model) {
  json screens = json::object();
  for (const auto& [id, tree] : model.screens) screens[id] = element_to_json(tree.root());
  json transitions = json::array();
  for (const auto& t : model.transitions) {
    json effects = json::array();
    for (const auto& e : t.effects) effects.push_back(effect_to_json(e));
    transitions.push_back({{"screen", t.screen},
                           {"selector", selector_to_json(t.selector)},
                           {"action", std::string(to_string(t.action))},
                           {"effects", std::move(effects)}});
  }
  return {{"name", model.name},
          {"initial_screen", model.initial_screen},
          {"screens", std::move(screens)},
          {"transitions", std::move(transitions)}};
}

AppModel model_from_json(const json& j) {
  if (!j.is_object()) malformed("app model must be a JSON object");
  std::vector<std::string> problems;
  for (const auto& key : kModelKeys)
    if (!j.contains(key)) problems.push_back("missing top-level key '" + key + "'");
  for (const auto& [key, value] : j.items())
    if (!kModelKeys.count(key)) problems.push_back("unknown top-level key '" + key + "'");
  if (!problems.empty()) throw ModelError(problems);

  AppModel model;
  try {
    model.name = j.at("name").get<std::string>();
    model.initial_screen = j.at("initial_screen").get<std::string>();
    for (const auto& [id, root] : j.at("screens").items())
      model.screens.emplace(id, HierarchyTree(element_from_json(root)));
    for (const auto& t : j.at("transitions")) {
      Transition tr;
      tr.screen = t.at("screen").get<std::string>();
      tr.selector = selector_from_json(t.at("selector"));
      auto action = t.value("action", "click");
      if (action != "click" && action != "input")
        malformed("unknown transition action '" + action + "'");
      tr.action = action == "click" ? ActionKind::click : ActionKind::input;
      for (const auto& e : t.value("effects", json::array()))
        tr.effects.push_back(effect_from_json(e));
      model.transitions.push_back(std::move(tr));
    }
  } catch (const json::exception& e) {
    malformed(std::string("app model: ") + e.what());
  }
  if (auto broken = model.validate(); !broken.empty()) throw ModelError(std::move(broken));
  return model;
}

AppModel load_model(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ModelError({"cannot open " + path});
  json j;
  try {
    j = json::parse(in);
  } catch (const json::parse_error& e) {
    throw ModelError({path + ": " + e.what()});
  }
  return model_from_json(j);
}

}  // namespace taskmine
