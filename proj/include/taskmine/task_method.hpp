#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "json.hpp"
#include "taskmine/mutation.hpp"

namespace taskmine {

struct FixedClick {
  FeatureKind kind = FeatureKind::text;
  std::string value;
  friend bool operator==(const FixedClick&, const FixedClick&) = default;
};

struct FixedInput {
  FeatureKind kind = FeatureKind::resource_id;
  std::string locator;
  std::string value;
  friend bool operator==(const FixedInput&, const FixedInput&) = default;
};

/// Parameterized click: the argument selects which option to click, located
/// by the shared feature `kind`. The original option comes first.
struct BranchGroup {
  std::string param;
  FeatureKind kind = FeatureKind::text;
  std::vector<std::string> options;
  friend bool operator==(const BranchGroup&, const BranchGroup&) = default;
};

/// Parameterized input: the argument is typed into the located field.
struct ParamInput {
  FeatureKind kind = FeatureKind::resource_id;
  std::string locator;
  std::string param;
  friend bool operator==(const ParamInput&, const ParamInput&) = default;
};

using TaskStatement = std::variant<FixedClick, FixedInput, BranchGroup, ParamInput>;

struct TaskMethod {
  std::string name;
  std::vector<std::string> params;
  std::vector<TaskStatement> body;  // one statement per base event
  std::string source_test;
  std::vector<std::size_t> covered_events;  // parameterized event indices

  friend bool operator==(const TaskMethod&, const TaskMethod&) = default;
};

class GenerationError : public std::runtime_error {
 public:
  enum class Kind { unsupported_action, no_joint_feature };
  GenerationError(Kind kind, const std::string& msg) : std::runtime_error(msg), kind_(kind) {}
  Kind kind() const { return kind_; }

 private:
  Kind kind_;
};

/// One method when at most one event is mutable; otherwise one method per
/// mutable event plus a combined method.
std::vector<TaskMethod> generate(const TestCase& tc, const MutationReport& report);

/// Highest-priority feature that is non-empty on the original and every
/// survivor and tells all of them apart. Throws GenerationError otherwise.
FeatureKind choose_feature(const ElementSummary& original,
                           const std::vector<MutantCandidate>& survivors);

/// Task-script text; the va runtime's load() inverts it.
std::string render(const TaskMethod& method);

/// API name used for a click/input by the given feature.
std::string click_api(FeatureKind kind);
std::string input_api(FeatureKind kind);

nlohmann::json method_to_json(const TaskMethod& method);
TaskMethod method_from_json(const nlohmann::json& j);

}  // namespace taskmine
