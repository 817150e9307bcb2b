#include "taskmine/pipeline.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace taskmine {

namespace fs = std::filesystem;
using nlohmann::json;

MutationReport run_detector(DetectorKind kind, const AppModel& model, const TestCase& tc,
                            const DetectConfig& config) {
  switch (kind) {
    case DetectorKind::parallel:
      return detect_parallel(model, tc, config);
    case DetectorKind::brute_force:
      return detect_brute_force(model, tc, config);
    case DetectorKind::serial:
      break;
  }
  return detect(model, tc, config);
}

std::vector<FixtureApp> discover_fixtures(const fs::path& root) {
  std::vector<FixtureApp> apps;
  for (const auto& entry : fs::directory_iterator(root)) {
    if (!entry.is_directory() || !fs::exists(entry.path() / "model.json")) continue;
    FixtureApp app;
    app.name = entry.path().filename().string();
    app.model = entry.path() / "model.json";
    app.config = entry.path() / "config.json";
    app.truth = entry.path() / "truth.json";
    for (const auto& s : fs::directory_iterator(entry.path() / "scripts"))
      if (s.path().extension() == ".java") app.scripts.push_back(s.path());
    std::sort(app.scripts.begin(), app.scripts.end());
    apps.push_back(std::move(app));
  }
  std::sort(apps.begin(), apps.end(),
            [](const FixtureApp& a, const FixtureApp& b) { return a.name < b.name; });
  return apps;
}

CaseOutcome process_script(const AppModel& model, const DetectConfig& config,
                           const fs::path& script, DetectorKind detector) {
  CaseOutcome out;
  out.script = script.string();
  out.app = model.name;
  try {
    out.test_case = parse_script(read_file(script));
  } catch (const ParseError& e) {
    out.failure = CaseFailure{script.stem().string(), model.name, "parse_error", e.what()};
    return out;
  }
  try {
    out.report = run_detector(detector, model, *out.test_case, config);
  } catch (const BaseTaskFailure& e) {
    out.failure = CaseFailure{out.test_case->name, model.name, "base_task_failure", e.what()};
    return out;
  }
  out.methods = generate(*out.test_case, *out.report);
  return out;
}

json failure_to_json(const CaseFailure& f) {
  return {{"status", f.status}, {"test_case", f.test_case}, {"app", f.app}, {"detail", f.detail}};
}

CaseFailure failure_from_json(const json& j) {
  return {j.at("test_case").get<std::string>(), j.at("app").get<std::string>(),
          j.at("status").get<std::string>(), j.value("detail", "")};
}

EvalSummary evaluate(const std::vector<CaseOutcome>& outcomes, const GroundTruth& truth) {
  std::vector<MutationReport> reports;
  for (const auto& o : outcomes)
    if (o.report) reports.push_back(*o.report);
  EvalSummary summary = summarize(reports, truth);
  for (const auto& o : outcomes) {
    if (o.failure) summary.failures.push_back(*o.failure);
    if (!o.report) continue;
    const auto& t = truth.at(o.report->test_case);
    for (const auto& m : o.methods)
      summary.methods.push_back({m.name, o.report->test_case, classify_method(m, *o.report, t)});
  }
  return summary;
}

void write_file_atomic(const fs::path& path, const std::string& content) {
  if (path.has_parent_path()) fs::create_directories(path.parent_path());
  fs::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write " + tmp.string());
    out << content;
  }
  fs::rename(tmp, path);
}

std::string read_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace taskmine
