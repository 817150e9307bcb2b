#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "taskmine/metrics.hpp"
#include "taskmine/mutation.hpp"
#include "taskmine/task_method.hpp"

namespace taskmine {

enum class DetectorKind { serial, parallel, brute_force };

MutationReport run_detector(DetectorKind kind, const AppModel& model, const TestCase& tc,
                            const DetectConfig& config);

/// One fixture app: model, detection config, ground truth and test scripts.
struct FixtureApp {
  std::string name;
  std::filesystem::path model;
  std::filesystem::path config;
  std::filesystem::path truth;
  std::vector<std::filesystem::path> scripts;  // sorted
};

/// Every subdirectory of `root` holding a model.json, sorted by name.
std::vector<FixtureApp> discover_fixtures(const std::filesystem::path& root);

/// Result of pushing one script through parse, detect and generate.
struct CaseOutcome {
  std::string script;
  std::string app;
  std::optional<TestCase> test_case;
  std::optional<MutationReport> report;
  std::optional<CaseFailure> failure;
  std::vector<TaskMethod> methods;
};

CaseOutcome process_script(const AppModel& model, const DetectConfig& config,
                           const std::filesystem::path& script, DetectorKind detector);

/// Failure record written in place of a report when detection cannot run.
nlohmann::json failure_to_json(const CaseFailure& failure);
CaseFailure failure_from_json(const nlohmann::json& j);

/// Summary plus per-method flaw labels and recorded failures.
EvalSummary evaluate(const std::vector<CaseOutcome>& outcomes, const GroundTruth& truth);

/// Writes via a temporary file and rename.
void write_file_atomic(const std::filesystem::path& path, const std::string& content);
std::string read_file(const std::filesystem::path& path);

}  // namespace taskmine
