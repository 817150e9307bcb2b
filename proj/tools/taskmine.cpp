// Command-line front end: parse, detect, generate, run, report, pipeline.
#include <algorithm>
#include <filesystem>
#include <iostream>
#include <map>

#include "CLI11.hpp"
#include "json.hpp"
#include "taskmine/pipeline.hpp"
#include "taskmine/runtime.hpp"

namespace fs = std::filesystem;
using nlohmann::json;
using namespace taskmine;

namespace {

constexpr int kOk = 0;
constexpr int kFailure = 1;
constexpr int kParseError = 2;
constexpr int kBaseFailure = 3;

std::string dump(const json& j) { return j.dump(2) + "\n"; }

void emit(const std::string& out, const std::string& text) {
  if (out.empty() || out == "-")
    std::cout << text;
  else
    write_file_atomic(out, text);
}

std::string describe(const ParseError& e) {
  return std::string(e.kind() == ParseErrorKind::syntax ? "SyntaxError" : "UnsupportedApi") +
         " at line " + std::to_string(e.line()) + ": " + e.detail();
}

std::string describe(const BaseTaskFailure& e) { return e.what(); }

DetectorKind detector_for(bool oracle, bool parallel) {
  if (oracle) return DetectorKind::brute_force;
  return parallel ? DetectorKind::parallel : DetectorKind::serial;
}

int cmd_parse(const std::string& script, const std::string& out) {
  TestCase tc;
  try {
    tc = parse_script(read_file(script));
  } catch (const ParseError& e) {
    std::cerr << script << ": " << describe(e) << "\n";
    emit(out, dump({{"status", "parse_error"},
                    {"kind", e.kind() == ParseErrorKind::syntax ? "syntax" : "unsupported_api"},
                    {"line", e.line()},
                    {"api", e.api()},
                    {"detail", e.detail()}}));
    return kParseError;
  }
  emit(out, dump(test_case_to_json(tc)));
  return kOk;
}

int cmd_detect(const std::string& model_path, const std::vector<std::string>& scripts,
               const std::string& config_path, const std::string& out_dir, DetectorKind kind) {
  AppModel model = load_model(model_path);
  DetectConfig config = config_path.empty() ? DetectConfig{} : load_detect_config(config_path);
  int status = kOk;
  for (const auto& script : scripts) {
    auto stem = fs::path(script).stem().string();
    auto target = fs::path(out_dir) / (stem + ".report.json");
    TestCase tc;
    try {
      tc = parse_script(read_file(script));
    } catch (const ParseError& e) {
      std::cerr << script << ": " << describe(e) << "\n";
      write_file_atomic(target, dump(failure_to_json({stem, model.name, "parse_error", describe(e)})));
      status = kParseError;
      continue;
    }
    try {
      auto report = run_detector(kind, model, tc, config);
      write_file_atomic(target, dump(report_to_json(report)));
      write_file_atomic(fs::path(out_dir) / (stem + ".timings.json"), dump(timings_to_json(report)));
      std::cout << tc.name << ": mutable events [";
      auto m = report.mutable_events();
      for (std::size_t i = 0; i < m.size(); ++i) std::cout << (i ? ", " : "") << m[i];
      std::cout << "]\n";
    } catch (const BaseTaskFailure& e) {
      std::cerr << script << ": " << describe(e) << "\n";
      json rec = failure_to_json({tc.name, model.name, "base_task_failure", describe(e)});
      rec["stage"] = e.stage() == BaseTaskFailure::Stage::event ? "event" : "assertion";
      rec["index"] = e.index();
      write_file_atomic(target, dump(rec));
      if (status == kOk) status = kBaseFailure;
    }
  }
  return status;
}

void write_methods(const std::vector<TaskMethod>& methods, const fs::path& dir) {
  for (const auto& m : methods) {
    write_file_atomic(dir / (m.name + ".task"), render(m));
    write_file_atomic(dir / (m.name + ".json"), dump(method_to_json(m)));
  }
}

int cmd_generate(const std::string& report_path, const std::string& script,
                 const std::string& out_dir) {
  auto j = json::parse(read_file(report_path));
  if (j.value("status", "ok") != "ok") {
    std::cerr << report_path << ": no mutation report (" << j.value("status", "") << ")\n";
    return kFailure;
  }
  auto report = report_from_json(j);
  TestCase tc;
  try {
    tc = parse_script(read_file(script));
  } catch (const ParseError& e) {
    std::cerr << script << ": " << describe(e) << "\n";
    return kParseError;
  }
  auto methods = generate(tc, report);
  write_methods(methods, out_dir);
  for (const auto& m : methods) std::cout << (fs::path(out_dir) / (m.name + ".task")).string() << "\n";
  return kOk;
}

int cmd_run(const std::string& model_path, const std::string& method_path,
            const std::vector<std::string>& args, const std::string& out) {
  AppModel model = load_model(model_path);
  Invocation inv{load_method_file(method_path), args};
  auto trace = run(model, inv);
  emit(out, dump(trace_to_json(trace)));
  if (!trace.ok()) {
    std::cerr << "run failed: " << trace.failure->message << "\n";
    return kFailure;
  }
  return kOk;
}

std::vector<fs::path> expand_reports(const std::vector<std::string>& inputs) {
  std::vector<fs::path> files;
  for (const auto& in : inputs) {
    if (!fs::is_directory(in)) {
      files.emplace_back(in);
      continue;
    }
    std::vector<fs::path> found;
    for (const auto& e : fs::directory_iterator(in))
      if (e.path().string().ends_with(".report.json")) found.push_back(e.path());
    std::sort(found.begin(), found.end());
    files.insert(files.end(), found.begin(), found.end());
  }
  return files;
}

GroundTruth merge_truth(const std::vector<std::string>& paths) {
  GroundTruth truth;
  for (const auto& p : paths)
    for (auto& [name, t] : load_truth(p)) truth[name] = std::move(t);
  return truth;
}

void write_summary(const EvalSummary& summary, const std::string& out_dir) {
  auto table = summary_table(summary);
  std::cout << table;
  if (out_dir.empty()) return;
  write_file_atomic(fs::path(out_dir) / "summary.json", dump(summary_to_json(summary, false)));
  write_file_atomic(fs::path(out_dir) / "summary.timings.json",
                    dump(summary_to_json(summary, true).at("timing")));
  write_file_atomic(fs::path(out_dir) / "summary.txt", table);
}

int cmd_report(const std::vector<std::string>& report_inputs,
               const std::vector<std::string>& truth_paths,
               const std::vector<std::string>& method_paths, const std::string& out_dir) {
  GroundTruth truth = merge_truth(truth_paths);
  std::vector<MutationReport> reports;
  std::vector<CaseFailure> failures;
  for (const auto& file : expand_reports(report_inputs)) {
    auto j = json::parse(read_file(file));
    if (j.value("status", "ok") != "ok") {
      failures.push_back(failure_from_json(j));
      continue;
    }
    auto report = report_from_json(j);
    auto name = file.string();
    if (name.ends_with(".report.json")) {
      fs::path timings = name.substr(0, name.size() - 12) + ".timings.json";
      if (fs::exists(timings)) apply_timings(report, json::parse(read_file(timings)));
    }
    reports.push_back(std::move(report));
  }
  EvalSummary summary = summarize(reports, truth);
  summary.failures = std::move(failures);
  for (const auto& path : method_paths) {
    auto m = load_method_file(path);
    auto it = std::find_if(reports.begin(), reports.end(),
                           [&](const MutationReport& r) { return r.test_case == m.source_test; });
    if (it == reports.end()) {
      std::cerr << path << ": no report for test case " << m.source_test << "\n";
      return kFailure;
    }
    summary.methods.push_back({m.name, m.source_test, classify_method(m, *it, truth.at(m.source_test))});
  }
  write_summary(summary, out_dir);
  return kOk;
}

int cmd_pipeline(const std::string& fixtures, const std::string& out_dir, DetectorKind kind) {
  std::vector<CaseOutcome> outcomes;
  GroundTruth truth;
  for (const auto& app : discover_fixtures(fixtures)) {
    AppModel model = load_model(app.model.string());
    DetectConfig config =
        fs::exists(app.config) ? load_detect_config(app.config.string()) : DetectConfig{};
    for (auto& [name, t] : load_truth(app.truth.string())) truth[name] = std::move(t);
    for (const auto& script : app.scripts) {
      auto outcome = process_script(model, config, script, kind);
      auto dir = fs::path(out_dir) / app.name;
      auto stem = script.stem().string();
      if (outcome.report) {
        write_file_atomic(dir / "reports" / (stem + ".report.json"),
                          dump(report_to_json(*outcome.report)));
        write_methods(outcome.methods, dir / "methods");
      } else {
        write_file_atomic(dir / "reports" / (stem + ".report.json"),
                          dump(failure_to_json(*outcome.failure)));
      }
      outcomes.push_back(std::move(outcome));
    }
  }
  write_summary(evaluate(outcomes, truth), out_dir);
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Mine parameterized task methods from GUI test scripts"};
  app.require_subcommand(1);

  std::string script, out, model, config, report_path, method;
  std::vector<std::string> scripts, reports, truths, methods, args;
  bool oracle = false, parallel = false;
  unsigned seed = 0;

  auto* parse = app.add_subcommand("parse", "Parse a test script into event notation");
  parse->add_option("--script", script, "Test script")->required()->check(CLI::ExistingFile);
  parse->add_option("--out", out, "Output file (default stdout)");

  auto* detect = app.add_subcommand("detect", "Detect mutable events by re-execution");
  detect->add_option("--model", model, "App model JSON")->required()->check(CLI::ExistingFile);
  detect->add_option("--script", scripts, "Test scripts")->required()->check(CLI::ExistingFile);
  detect->add_option("--config", config, "Detection config JSON")->check(CLI::ExistingFile);
  detect->add_option("--out", out, "Output directory")->required();
  detect->add_flag("--parallel", parallel, "Run candidate attempts on OpenMP threads");
  detect->add_flag("--oracle", oracle, "Brute-force reference detector")->group("");
  detect->add_option("--seed", seed, "Reserved; detection is deterministic");

  auto* gen = app.add_subcommand("generate", "Generate task methods from a report");
  gen->add_option("--report", report_path, "Mutation report JSON")->required()->check(CLI::ExistingFile);
  gen->add_option("--script", script, "Test script")->required()->check(CLI::ExistingFile);
  gen->add_option("--out", out, "Output directory")->required();

  auto* runc = app.add_subcommand("run", "Run a task method against an app model");
  runc->add_option("--model", model, "App model JSON")->required()->check(CLI::ExistingFile);
  runc->add_option("--method", method, "Task method (.task or .json)")->required()->check(CLI::ExistingFile);
  runc->add_option("--out", out, "Trace output file (default stdout)");
  runc->add_option("args", args, "Method arguments");

  auto* rep = app.add_subcommand("report", "Summarize reports against ground truth");
  rep->add_option("--report", reports, "Report files or directories")->required();
  rep->add_option("--truth", truths, "Ground truth JSON")->required()->check(CLI::ExistingFile);
  rep->add_option("--methods", methods, "Task method files to label")->check(CLI::ExistingFile);
  rep->add_option("--out", out, "Output directory");

  std::string fixtures;
  auto* pipe = app.add_subcommand("pipeline", "Run every step over a fixture corpus");
  pipe->add_option("--fixtures", fixtures, "Fixture root")->required()->check(CLI::ExistingDirectory);
  pipe->add_option("--out", out, "Output directory")->required();
  pipe->add_flag("--parallel", parallel, "Run candidate attempts on OpenMP threads");
  pipe->add_flag("--oracle", oracle, "Brute-force reference detector")->group("");
  pipe->add_option("--seed", seed, "Reserved; detection is deterministic");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*parse) return cmd_parse(script, out);
    if (*detect) return cmd_detect(model, scripts, config, out, detector_for(oracle, parallel));
    if (*gen) return cmd_generate(report_path, script, out);
    if (*runc) return cmd_run(model, method, args, out);
    if (*rep) return cmd_report(reports, truths, methods, out);
    if (*pipe) return cmd_pipeline(fixtures, out, detector_for(oracle, parallel));
  } catch (const TaskSyntaxError& e) {
    std::cerr << e.what() << "\n";
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
  }
  return kFailure;
}
