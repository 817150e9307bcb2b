// Serial detect() against detect_parallel() on the fixture corpus and on a
// synthetic screen with many sibling options.

#include <benchmark/benchmark.h>

#include <filesystem>

#include "taskmine/pipeline.hpp"

namespace fs = std::filesystem;
using namespace taskmine;
using nlohmann::json;

namespace {

struct Case {
  AppModel model;
  DetectConfig config;
  TestCase tc;
};

std::vector<Case> load_corpus() {
  std::vector<Case> out;
  for (const auto& app : discover_fixtures(TASKMINE_FIXTURES)) {
    AppModel model = load_model(app.model.string());
    DetectConfig config = fs::exists(app.config) ? load_detect_config(app.config.string()) : DetectConfig{};
    for (const auto& script : app.scripts) {
      try {
        TestCase tc = load_script(script.string());
        detect(model, tc, config);
        out.push_back({model, config, std::move(tc)});
      } catch (const std::exception&) {
        // parse errors and base-task failures are not timed
      }
    }
  }
  return out;
}

const std::vector<Case>& corpus() {
  static const std::vector<Case> cases = load_corpus();
  return cases;
}

// One screen with `width` radio options; picking one copies its label into a
// status field that the test asserts on.
Case wide_app(int width) {
  json options = json::array();
  json transitions = json::array();
  transitions.push_back({{"screen", "home"},
                         {"selector", {{"with_text", "Open"}}},
                         {"action", "click"},
                         {"effects", json::array({{{"goto", "menu"}}})}});
  for (int i = 0; i < width; ++i) {
    std::string label = "Option " + std::to_string(i);
    options.push_back({{"class", "RadioButton"}, {"text", label}, {"clickable", true}});
    transitions.push_back(
        {{"screen", "menu"},
         {"selector", {{"with_text", label}}},
         {"action", "click"},
         {"effects", json::array({{{"set_text", {{"selector", {{"with_id", "bench:id/status"}}}, {"value", label}}}}})}});
  }
  json model = {
      {"name", "wide"},
      {"initial_screen", "home"},
      {"screens",
       {{"home", {{"class", "FrameLayout"}, {"children", json::array({{{"class", "Button"}, {"text", "Open"}, {"clickable", true}}})}}},
        {"menu",
         {{"class", "FrameLayout"},
          {"children", json::array({{{"class", "RadioGroup"}, {"children", options}},
                                    {{"class", "TextView"}, {"text", ""}, {"resource_id", "bench:id/status"}}})}}}}},
      {"transitions", transitions}};
  auto tc = parse_script(
      "@Test\npublic void pickOption() {\n"
      "    onView(withText(\"Open\")).perform(click());\n"
      "    onView(withText(\"Option 0\")).perform(click());\n"
      "    onView(allOf(withId(R.id.status), withText(\"Option 0\"))).check(matches(isDisplayed()));\n"
      "}\n");
  return {model_from_json(model), {}, std::move(tc)};
}

template <MutationReport (*Detect)(const AppModel&, const TestCase&, const DetectConfig&)>
void BM_Corpus(benchmark::State& state) {
  const auto& cases = corpus();
  std::size_t events = 0;
  for (auto _ : state)
    for (const auto& c : cases) {
      auto r = Detect(c.model, c.tc, c.config);
      events += r.events.size();
      benchmark::DoNotOptimize(r);
    }
  state.counters["events"] = benchmark::Counter(static_cast<double>(events), benchmark::Counter::kIsRate);
}

template <MutationReport (*Detect)(const AppModel&, const TestCase&, const DetectConfig&)>
void BM_Wide(benchmark::State& state) {
  auto c = wide_app(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    auto r = Detect(c.model, c.tc, c.config);
    if (r.events.at(1).survivors.size() != static_cast<std::size_t>(state.range(0) - 1))
      state.SkipWithError("unexpected survivor count");
    benchmark::DoNotOptimize(r);
  }
}

}  // namespace

BENCHMARK(BM_Corpus<detect>)->Name("corpus/serial")->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Corpus<detect_parallel>)->Name("corpus/parallel")->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Wide<detect>)->Name("wide/serial")->Arg(16)->Arg(64)->Arg(256)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Wide<detect_parallel>)->Name("wide/parallel")->Arg(16)->Arg(64)->Arg(256)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
