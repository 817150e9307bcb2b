#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "json.hpp"
#include "taskmine/gui_model.hpp"

namespace taskmine {

enum class ActionKind { click, input };

std::string_view to_string(ActionKind kind);

/// A GUI control applied to an element: a click, or text input with a value.
struct Action {
  ActionKind kind = ActionKind::click;
  std::string value;  // input only

  static Action click() { return {ActionKind::click, {}}; }
  static Action input(std::string value) { return {ActionKind::input, std::move(value)}; }

  friend bool operator==(const Action&, const Action&) = default;
};

// Effects. An empty `screen` targets the screen the transition fired on.
struct GotoEffect {
  std::string screen;
  friend bool operator==(const GotoEffect&, const GotoEffect&) = default;
};
struct SetTextEffect {
  std::string screen;
  Selector selector;
  std::string value;  // template
  friend bool operator==(const SetTextEffect&, const SetTextEffect&) = default;
};
struct AppendChildEffect {
  std::string screen;
  Selector selector;
  GuiElement node;  // template
  friend bool operator==(const AppendChildEffect&, const AppendChildEffect&) = default;
};
struct RemoveNodeEffect {
  std::string screen;
  Selector selector;
  friend bool operator==(const RemoveNodeEffect&, const RemoveNodeEffect&) = default;
};

using Effect = std::variant<GotoEffect, SetTextEffect, AppendChildEffect, RemoveNodeEffect>;

struct Transition {
  std::string screen;
  Selector selector;
  ActionKind action = ActionKind::click;
  std::vector<Effect> effects;
  friend bool operator==(const Transition&, const Transition&) = default;
};

/// Declarative simulated application: screens plus event-driven transitions.
struct AppModel {
  std::string name;
  std::string initial_screen;
  std::map<std::string, HierarchyTree> screens;
  std::vector<Transition> transitions;

  /// Every broken reference in the model; empty when valid.
  std::vector<std::string> validate() const;

  friend bool operator==(const AppModel&, const AppModel&) = default;
};

class ModelError : public std::runtime_error {
 public:
  explicit ModelError(std::vector<std::string> problems);
  const std::vector<std::string>& problems() const { return problems_; }

 private:
  std::vector<std::string> problems_;
};

// JSON (de)serialization. Readers throw ModelError on malformed input.
nlohmann::json element_to_json(const GuiElement& element);
GuiElement element_from_json(const nlohmann::json& j);

/// Writes the notation form {"search_type": ..., "criteria": [{"name", "args"}]}.
nlohmann::json selector_to_json(const Selector& selector);
/// Accepts the notation form or the compact {"with_text": "...", ...} form.
Selector selector_from_json(const nlohmann::json& j);

nlohmann::json model_to_json(const AppModel& model);
/// Parses and validates.
AppModel model_from_json(const nlohmann::json& j);
AppModel load_model(const std::string& path);

}  // namespace taskmine
