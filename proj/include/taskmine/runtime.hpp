#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"
#include "taskmine/driver.hpp"
#include "taskmine/task_method.hpp"

namespace taskmine {

struct Invocation {
  TaskMethod method;
  std::vector<std::string> args;  // one per method param, in order
};

class TaskSyntaxError : public std::runtime_error {
 public:
  TaskSyntaxError(std::size_t line, const std::string& detail)
      : std::runtime_error("task script line " + std::to_string(line) + ": " + detail), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

/// Parses rendered task-script text back into a method.
TaskMethod load(std::string_view text);
TaskMethod load_method_file(const std::string& path);

struct RuntimeFailure {
  enum class Kind { unsupported_option, execution };
  Kind kind = Kind::execution;
  std::size_t statement = 0;
  std::string param;  // unsupported_option
  std::string value;  // unsupported_option
  std::string message;
};

struct TraceStep {
  std::size_t statement = 0;
  std::string api;
  std::string target;
  std::string value;  // typed text for inputs
  std::string screen_after;
};

struct ExecutionTrace {
  std::string method;
  std::vector<std::string> args;
  std::vector<TraceStep> steps;  // successful steps only
  std::optional<RuntimeFailure> failure;
  SessionState final_state;

  bool ok() const { return !failure.has_value(); }
  HierarchyTree final_tree() const { return final_state.trees.at(final_state.screen); }
};

/// Executes the method from a fresh launch of the model. Throws
/// std::invalid_argument when the argument count does not match.
ExecutionTrace run(const AppModel& model, const Invocation& invocation);

nlohmann::json trace_to_json(const ExecutionTrace& trace);

}  // namespace taskmine
