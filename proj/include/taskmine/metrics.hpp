#pragma once

#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"
#include "taskmine/mutation.hpp"
#include "taskmine/task_method.hpp"

namespace taskmine {

/// Fixture-authored labels for one test case.
struct CaseTruth {
  std::set<std::size_t> mutable_events;
  /// Options a parameterized click must support to be general.
  std::map<std::size_t, std::vector<std::string>> valid_options;
};

using GroundTruth = std::map<std::string, CaseTruth>;

GroundTruth truth_from_json(const nlohmann::json& j);
GroundTruth load_truth(const std::string& path);

struct Confusion {
  std::size_t tn = 0;
  std::size_t fp = 0;
  std::size_t fn = 0;
  std::size_t tp = 0;

  std::size_t total() const { return tn + fp + fn + tp; }
  friend bool operator==(const Confusion&, const Confusion&) = default;
};

/// Ratios are empty when their denominator is zero.
struct Ratios {
  std::optional<double> mdr;
  std::optional<double> precision;
  std::optional<double> recall;
  std::optional<double> f1;
};

Ratios ratios(const Confusion& c);

/// Mutable detection rate: correctly detected mutable events over truly
/// mutable events. Empty when there are no mutable events.
std::optional<double> detection_rate(std::size_t detected, std::size_t mutable_events);

struct Reduction {
  std::size_t before = 0;
  std::size_t after = 0;
  /// Share of candidates eliminated, in percent; empty when before == 0.
  std::optional<double> percent() const;
};

/// Half-up rounding to `digits` decimals.
double round_half_up(double value, int digits);

enum class FlawLabel { type1, type2, type3, succeed };

std::string_view to_string(FlawLabel label);

/// Per-app row mirroring the detection results table.
struct AppRow {
  std::string app;
  std::size_t non_mutable = 0;
  std::size_t mutable_events = 0;
  std::size_t detected = 0;
  std::size_t candidates_before = 0;
  std::size_t candidates_after = 0;
  double seconds_total = 0.0;
  std::size_t event_count = 0;

  double seconds_per_event() const {
    return event_count ? seconds_total / static_cast<double>(event_count) : 0.0;
  }
};

struct TimingStats {
  double total_seconds = 0.0;        // sum of per-report totals
  double event_seconds_sum = 0.0;    // sum of per-event timings
  double mean_event_seconds = 0.0;
  double max_event_seconds = 0.0;
  std::size_t events = 0;
};

struct MethodLabel {
  std::string method;
  std::string test_case;
  FlawLabel label = FlawLabel::succeed;
};

/// Outcome of a test case that never reached a mutation report.
struct CaseFailure {
  std::string test_case;
  std::string app;
  std::string status;  // "parse_error" or "base_task_failure"
  std::string detail;
};

struct EvalSummary {
  Confusion confusion;
  Ratios ratios;
  Reduction reduction;
  TimingStats timing;
  std::vector<AppRow> apps;
  std::vector<MethodLabel> methods;
  std::vector<CaseFailure> failures;
  /// test case -> correlation status per assertion
  std::map<std::string, std::vector<std::string>> correlations;
};

class MissingTruth : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Aggregates detection quality over reports. Throws MissingTruth when a
/// report has no ground-truth entry.
EvalSummary summarize(const std::vector<MutationReport>& reports, const GroundTruth& truth);

/// Flaw label for a generated method; precedence Type1 > Type2 > Type3.
FlawLabel classify_method(const TaskMethod& method, const MutationReport& report,
                          const CaseTruth& truth);

nlohmann::json summary_to_json(const EvalSummary& summary, bool with_timings = true);
/// Fixed-width text table, one row per app plus a total row.
std::string summary_table(const EvalSummary& summary);

}  // namespace taskmine
