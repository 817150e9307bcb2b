#include "taskmine/driver.hpp"

#include <algorithm>

namespace taskmine {

namespace {

GuiElement expand_node(GuiElement node, std::string_view input, const HierarchyTree& tree) {
  auto expand = [&](std::optional<std::string>& field) {
    if (field) field = expand_template(*field, input, tree);
  };
  expand(node.text);
  expand(node.content_desc);
  expand(node.resource_id);
  for (auto& c : node.children) c = expand_node(std::move(c), input, tree);
  return node;
}

std::optional<ExecutionError> resolve_unique(const HierarchyTree& tree, const Selector& selector,
                                             bool displayed_only, NodePath& out,
                                             std::string_view what) {
  auto found = displayed_only ? tree.find_elements(selector) : tree.find_any(selector);
  if (found.empty())
    return ExecutionError{ExecutionErrorKind::element_not_found,
                          std::string(what) + ": no element matches " + selector.str()};
  if (found.size() > 1)
    return ExecutionError{ExecutionErrorKind::ambiguous_match,
                          std::string(what) + ": " + std::to_string(found.size()) +
                              " elements match " + selector.str()};
  out = found.front();
  return std::nullopt;
}

}  // namespace

std::string_view to_string(ExecutionErrorKind kind) {
  switch (kind) {
    case ExecutionErrorKind::element_not_found:
      return "ElementNotFound";
    case ExecutionErrorKind::ambiguous_match:
      return "AmbiguousMatch";
    case ExecutionErrorKind::not_clickable:
      return "NotClickable";
    case ExecutionErrorKind::not_editable:
      return "NotEditable";
  }
  return "ElementNotFound";
}

std::string expand_template(std::string_view templ, std::string_view input,
                            const HierarchyTree& tree) {
  std::string out;
  std::size_t pos = 0;
  while (pos < templ.size()) {
    auto open = templ.find("${", pos);
    if (open == std::string_view::npos) break;
    auto close = templ.find('}', open);
    if (close == std::string_view::npos) break;
    out += templ.substr(pos, open - pos);
    auto name = templ.substr(open + 2, close - open - 2);
    if (name == "input") {
      out += input;
    } else if (name.starts_with("text:")) {
      auto found = tree.find_any(Selector::single(CriterionKind::with_id, std::string(name.substr(5))));
      if (found.size() == 1) out += feature_value(tree.at(found.front()), FeatureKind::text);
    } else {
      out += templ.substr(open, close - open + 1);
    }
    pos = close + 1;
  }
  out += templ.substr(pos);
  return out;
}

DriverSession::DriverSession(std::shared_ptr<const AppModel> model) : model_(std::move(model)) {
  if (!model_) throw ModelError({"no app model"});
  if (auto problems = model_->validate(); !problems.empty()) throw ModelError(std::move(problems));
  reset();
}

void DriverSession::reset() {
  state_.screen = model_->initial_screen;
  state_.trees = model_->screens;
}

std::optional<ExecutionError> DriverSession::perform(const Selector& selector,
                                                     const Action& action) {
  const HierarchyTree& tree = state_.trees.at(state_.screen);
  NodePath target;
  if (auto err = resolve_unique(tree, selector, true, target, "event")) return err;
  const GuiElement& element = tree.at(target);
  if (action.kind == ActionKind::click && !element.clickable)
    return ExecutionError{ExecutionErrorKind::not_clickable,
                          "element " + selector.str() + " is not clickable"};
  if (action.kind == ActionKind::input && !element.editable)
    return ExecutionError{ExecutionErrorKind::not_editable,
                          "element " + selector.str() + " is not editable"};

  const Transition* fired = nullptr;
  for (const auto& t : model_->transitions) {
    if (t.screen != state_.screen || t.action != action.kind) continue;
    auto hits = tree.find_elements(t.selector);
    if (std::find(hits.begin(), hits.end(), target) != hits.end()) {
      fired = &t;
      break;
    }
  }

  SessionState next = state_;
  const std::string origin = state_.screen;
  if (action.kind == ActionKind::input) next.trees.at(origin).at(target).text = action.value;
  if (fired) {
    for (const auto& effect : fired->effects) {
      if (const auto* go = std::get_if<GotoEffect>(&effect)) {
        next.screen = go->screen;
        continue;
      }
      auto err = std::visit(
          [&](const auto& e) -> std::optional<ExecutionError> {
            using T = std::decay_t<decltype(e)>;
            if constexpr (std::is_same_v<T, GotoEffect>) {
              return std::nullopt;
            } else {
              auto& screen_tree = next.trees.at(e.screen.empty() ? origin : e.screen);
              NodePath at;
              if (auto err = resolve_unique(screen_tree, e.selector, false, at, "effect"))
                return err;
              const auto& source = next.trees.at(origin);
              if constexpr (std::is_same_v<T, SetTextEffect>) {
                screen_tree.at(at).text = expand_template(e.value, action.value, source);
              } else if constexpr (std::is_same_v<T, AppendChildEffect>) {
                auto node = expand_node(e.node, action.value, source);
                screen_tree.at(at).children.push_back(std::move(node));
              } else {
                if (at.is_root())
                  return ExecutionError{ExecutionErrorKind::element_not_found,
                                        "effect: cannot remove the root node"};
                auto& siblings = screen_tree.at(at.parent()).children;
                siblings.erase(siblings.begin() + static_cast<std::ptrdiff_t>(at.index()));
              }
              return std::nullopt;
            }
          },
          effect);
      if (err) return err;
    }
  }
  state_ = std::move(next);
  return std::nullopt;
}

DriverSession launch(std::shared_ptr<const AppModel> model) { return DriverSession(std::move(model)); }

DriverSession launch(const AppModel& model) {
  return DriverSession(std::make_shared<const AppModel>(model));
}

}  // namespace taskmine
