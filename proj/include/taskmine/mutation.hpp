#pragma once

#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"
#include "taskmine/driver.hpp"
#include "taskmine/script.hpp"

namespace taskmine {

/// Textual identity of an element as seen on a screen snapshot.
struct ElementSummary {
  std::string class_name;
  std::string text;
  std::string content_desc;
  std::string resource_id;

  static ElementSummary of(const GuiElement& element);
  const std::string& feature(FeatureKind kind) const;

  friend bool operator==(const ElementSummary&, const ElementSummary&) = default;
};

/// Alternative for one event. A click mutant names a sibling element by one
/// textual feature (`kind`, `value`); an input mutant carries the alternate
/// value in `value`.
struct MutantCandidate {
  ActionKind action = ActionKind::click;
  FeatureKind kind = FeatureKind::text;
  std::string value;
  ElementSummary element;  // click only

  static MutantCandidate input(std::string value);

  /// The event that replaces the original one.
  ParsedEvent as_event(const ParsedEvent& original) const;

  friend bool operator==(const MutantCandidate&, const MutantCandidate&) = default;
};

struct MutantPool {
  std::size_t event_index = 0;
  std::vector<MutantCandidate> candidates;
  std::size_t total_on_screen = 0;

  std::size_t selected() const { return candidates.size(); }
};

struct DetectConfig {
  /// Alternate input values keyed by field resource id (exact or "/" suffix).
  std::map<std::string, std::vector<std::string>> input_values;
  std::vector<std::string> default_values{"alpha", "beta"};
  std::optional<std::size_t> max_candidates_per_event;
  /// Preamble run after every launch/reset, before the first event.
  std::function<void(DriverSession&)> setup;

  const std::vector<std::string>& values_for(std::string_view resource_id) const;
};

DetectConfig detect_config_from_json(const nlohmann::json& j);
DetectConfig load_detect_config(const std::string& path);

class BaseTaskFailure : public std::runtime_error {
 public:
  enum class Stage { event, assertion };
  BaseTaskFailure(Stage stage, std::size_t index, const std::string& reason);

  Stage stage() const { return stage_; }
  std::size_t index() const { return index_; }

 private:
  Stage stage_;
  std::size_t index_;
};

/// Outcome of replaying the unmodified test.
struct BaseTask {
  std::vector<ElementSummary> elements;            // resolved element per event
  std::vector<std::vector<FeatureKind>> locators;  // feature kinds unique on the snapshot
  std::vector<MutantPool> pools;
  SessionState final_state;
};

/// Mutant candidates for the event acting on `original` in `tree`.
std::vector<MutantCandidate> select_candidates(const HierarchyTree& tree, const NodePath& original,
                                               const Action& action,
                                               const DetectConfig& config = {});

/// Clickable displayed nodes on a snapshot; the pre-selection candidate count.
std::size_t count_clickable(const HierarchyTree& tree);

/// Feature kinds of the node whose single-criterion selector matches only it.
std::vector<FeatureKind> unique_locators(const HierarchyTree& tree, const NodePath& node);

/// Replays the test from a fresh session, building one pool per event.
/// Throws BaseTaskFailure when an event or assertion fails.
BaseTask exe_base_task(DriverSession& session, const TestCase& tc, const DetectConfig& config = {});

enum class CorrelationStatus { correlated, unmatched, tie, dissolved };

std::string_view to_string(CorrelationStatus status);

struct Correlation {
  CorrelationStatus status = CorrelationStatus::unmatched;
  std::optional<std::size_t> event;
  std::size_t criterion = 0;  // criterion whose value matched
  bool via_input = false;     // matched the typed value rather than an element feature

  friend bool operator==(const Correlation&, const Correlation&) = default;
};

/// One entry per assertion; one-to-one between assertions and events.
std::vector<Correlation> correlate_assertions(const TestCase& tc,
                                              const std::vector<ElementSummary>& elements);

/// Assertion selectors to check when `mutated_event` is replaced by `mutant`.
std::vector<Selector> modified_assertions(const TestCase& tc,
                                          const std::vector<Correlation>& correlations,
                                          std::size_t mutated_event,
                                          const MutantCandidate& mutant);

/// An assertion holds when exactly one displayed element matches it.
bool assertion_holds(const HierarchyTree& tree, const Selector& selector);

bool exe_assert(const DriverSession& session, const TestCase& tc, std::size_t mutated_event,
                const MutantCandidate& mutant, const std::vector<Correlation>& correlations);

struct Survivor {
  MutantCandidate candidate;
  std::vector<Selector> assertions;  // as checked, after modification

  friend bool operator==(const Survivor&, const Survivor&) = default;
};

struct EventRecord {
  ParsedEvent event;
  ElementSummary element;
  std::vector<FeatureKind> locators;
  MutantPool pool;
  std::vector<Survivor> survivors;
  std::size_t ambiguous_skips = 0;
  double seconds = 0.0;

  bool is_mutable() const { return !survivors.empty(); }
};

struct MutationReport {
  std::string test_case;
  std::string app;
  std::vector<ParsedAssertion> assertions;
  std::vector<EventRecord> events;
  std::vector<Correlation> correlations;
  double total_seconds = 0.0;

  std::vector<std::size_t> mutable_events() const;
  /// Base event sequence with `index` replaced by `survivor`.
  std::vector<ParsedEvent> survivor_sequence(std::size_t index, const Survivor& survivor) const;
};

/// Mutant detection: for each event, tries every pool candidate in a freshly
/// reset session, running the prefix, the mutant, then the suffix until the
/// first execution error, and keeps candidates whose assertions hold.
/// Throws BaseTaskFailure when the unmodified test does not replay.
MutationReport detect(const AppModel& model, const TestCase& tc, const DetectConfig& config = {});

/// Same result as detect(); candidate attempts run on OpenMP threads, one
/// session per attempt.
MutationReport detect_parallel(const AppModel& model, const TestCase& tc,
                               const DetectConfig& config = {});

/// Brute-force reference: builds each one-event-mutated sequence explicitly
/// and runs it from a fresh launch.
MutationReport detect_brute_force(const AppModel& model, const TestCase& tc,
                                  const DetectConfig& config = {});

nlohmann::json candidate_to_json(const MutantCandidate& c);
MutantCandidate candidate_from_json(const nlohmann::json& j);
/// Stable key order; timings are written only when requested.
nlohmann::json report_to_json(const MutationReport& report, bool with_timings = false);
MutationReport report_from_json(const nlohmann::json& j);
nlohmann::json timings_to_json(const MutationReport& report);
void apply_timings(MutationReport& report, const nlohmann::json& j);

}  // namespace taskmine
