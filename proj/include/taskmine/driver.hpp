#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>

#include "taskmine/app_model.hpp"

namespace taskmine {

enum class ExecutionErrorKind { element_not_found, ambiguous_match, not_clickable, not_editable };

std::string_view to_string(ExecutionErrorKind kind);

struct ExecutionError {
  ExecutionErrorKind kind;
  std::string message;
};

/// Complete mutable state of a running simulated app.
struct SessionState {
  std::string screen;
  std::map<std::string, HierarchyTree> trees;

  friend bool operator==(const SessionState&, const SessionState&) = default;
};

/// Single-owner handle on a running simulated app. Sessions over the same
/// model share it read-only and may run on different threads.
class DriverSession {
 public:
  /// Throws ModelError listing every broken reference.
  explicit DriverSession(std::shared_ptr<const AppModel> model);

  /// Resolves the selector on the current screen and applies the action.
  /// Returns the error without touching state when the event cannot run.
  [[nodiscard]] std::optional<ExecutionError> perform(const Selector& selector,
                                                      const Action& action);

  /// Snapshot copy of the current screen's tree.
  HierarchyTree current_tree() const { return state_.trees.at(state_.screen); }
  const std::string& current_screen() const { return state_.screen; }
  const SessionState& state() const { return state_; }
  const AppModel& model() const { return *model_; }

  void reset();

 private:
  std::shared_ptr<const AppModel> model_;
  SessionState state_;
};

DriverSession launch(std::shared_ptr<const AppModel> model);
DriverSession launch(const AppModel& model);

/// Expands ${input} and ${text:<resource id>} placeholders. Text lookups
/// read the given tree; an unresolved reference expands to "".
std::string expand_template(std::string_view templ, std::string_view input,
                            const HierarchyTree& tree);

}  // namespace taskmine
