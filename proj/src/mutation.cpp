#include "taskmine/mutation.hpp"

#include <algorithm>
#include <chrono>
#include <deque>
#include <fstream>

#include "mutation_detail.hpp"

namespace taskmine {

using nlohmann::json;

ElementSummary ElementSummary::of(const GuiElement& element) {
  return {element.class_name, feature_value(element, FeatureKind::text),
          feature_value(element, FeatureKind::content_desc),
          feature_value(element, FeatureKind::resource_id)};
}

const std::string& ElementSummary::feature(FeatureKind kind) const {
  switch (kind) {
    case FeatureKind::text:
      return text;
    case FeatureKind::content_desc:
      return content_desc;
    case FeatureKind::resource_id:
      return resource_id;
  }
  return text;
}

MutantCandidate MutantCandidate::input(std::string value) {
  MutantCandidate c;
  c.action = ActionKind::input;
  c.value = std::move(value);
  return c;
}

ParsedEvent MutantCandidate::as_event(const ParsedEvent& original) const {
  ParsedEvent e;
  e.origin = original.origin;
  if (action == ActionKind::input) {
    e.selector = original.selector;
    e.action = Action::input(value);
  } else {
    e.selector = Selector::single(criterion_for(kind), value);
    e.action = Action::click();
  }
  return e;
}

const std::vector<std::string>& DetectConfig::values_for(std::string_view resource_id) const {
  for (const auto& [key, values] : input_values)
    if (id_matches(resource_id, key)) return values;
  return default_values;
}

DetectConfig detect_config_from_json(const json& j) {
  DetectConfig config;
  if (auto it = j.find("input_values"); it != j.end()) {
    for (const auto& [key, values] : it->items()) {
      auto list = values.get<std::vector<std::string>>();
      if (key == "default")
        config.default_values = std::move(list);
      else
        config.input_values[key] = std::move(list);
    }
  }
  if (auto it = j.find("max_candidates_per_event"); it != j.end() && !it->is_null())
    config.max_candidates_per_event = it->get<std::size_t>();
  return config;
}

DetectConfig load_detect_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return detect_config_from_json(json::parse(in));
}

BaseTaskFailure::BaseTaskFailure(Stage stage, std::size_t index, const std::string& reason)
    : std::runtime_error(std::string("base task failed at ") +
                         (stage == Stage::event ? "event " : "assertion ") + std::to_string(index) +
                         ": " + reason),
      stage_(stage),
      index_(index) {}

std::size_t count_clickable(const HierarchyTree& tree) {
  std::size_t n = 0;
  for (const auto& p : tree.all_paths()) {
    const auto& e = tree.at(p);
    if (e.displayed && e.clickable) ++n;
  }
  return n;
}

std::vector<FeatureKind> unique_locators(const HierarchyTree& tree, const NodePath& node) {
  std::vector<FeatureKind> out;
  const auto& element = tree.at(node);
  for (auto kind : kFeaturePriority) {
    const auto& value = feature_value(element, kind);
    if (value.empty()) continue;
    auto hits = tree.find_elements(Selector::single(criterion_for(kind), value));
    if (hits.size() == 1 && hits.front() == node) out.push_back(kind);
  }
  return out;
}

std::vector<MutantCandidate> select_candidates(const HierarchyTree& tree, const NodePath& original,
                                               const Action& action, const DetectConfig& config) {
  std::vector<MutantCandidate> out;
  const GuiElement& source = tree.at(original);
  if (action.kind == ActionKind::input) {
    for (const auto& v : config.values_for(feature_value(source, FeatureKind::resource_id))) {
      if (v == action.value) continue;
      auto dup = std::find_if(out.begin(), out.end(), [&](const auto& c) { return c.value == v; });
      if (dup == out.end()) out.push_back(MutantCandidate::input(v));
    }
  } else {
    for (const auto& path : tree.all_paths()) {
      if (path == original) continue;
      const GuiElement& node = tree.at(path);
      if (!node.displayed || !node.clickable || node.class_name != source.class_name) continue;
      bool direct = !path.is_root() && !original.is_root() && path.parent() == original.parent();
      bool indirect = common_ancestor_depth(path, original) >= 1 &&
                      path.depth() == original.depth() && path.index() == original.index();
      if (!direct && !indirect) continue;
      auto unique = unique_locators(tree, path);
      std::optional<FeatureKind> kind;
      if (!unique.empty()) {
        kind = unique.front();
      } else {
        for (auto k : kFeaturePriority)
          if (!feature_value(node, k).empty()) {
            kind = k;
            break;
          }
      }
      if (!kind) continue;
      MutantCandidate c;
      c.action = ActionKind::click;
      c.kind = *kind;
      c.value = feature_value(node, *kind);
      c.element = ElementSummary::of(node);
      out.push_back(std::move(c));
    }
  }
  if (config.max_candidates_per_event && out.size() > *config.max_candidates_per_event)
    out.resize(*config.max_candidates_per_event);
  return out;
}

BaseTask exe_base_task(DriverSession& session, const TestCase& tc, const DetectConfig& config) {
  session.reset();
  if (config.setup) config.setup(session);
  BaseTask base;
  for (std::size_t i = 0; i < tc.events.size(); ++i) {
    const auto& event = tc.events[i];
    HierarchyTree tree = session.current_tree();
    auto hits = tree.find_elements(event.selector);
    if (hits.size() != 1)
      throw BaseTaskFailure(BaseTaskFailure::Stage::event, i,
                            std::to_string(hits.size()) + " elements match " +
                                event.selector.str() + " on screen '" + session.current_screen() +
                                "'");
    base.elements.push_back(ElementSummary::of(tree.at(hits.front())));
    base.locators.push_back(unique_locators(tree, hits.front()));
    MutantPool pool;
    pool.event_index = i;
    pool.candidates = select_candidates(tree, hits.front(), event.action, config);
    pool.total_on_screen =
        event.action.kind == ActionKind::click ? count_clickable(tree) : pool.candidates.size();
    base.pools.push_back(std::move(pool));
    if (auto err = session.perform(event.selector, event.action))
      throw BaseTaskFailure(BaseTaskFailure::Stage::event, i, err->message);
  }
  HierarchyTree final_tree = session.current_tree();
  for (std::size_t j = 0; j < tc.assertions.size(); ++j)
    if (!assertion_holds(final_tree, tc.assertions[j].selector))
      throw BaseTaskFailure(BaseTaskFailure::Stage::assertion, j,
                            "no unique displayed element matches " +
                                tc.assertions[j].selector.str());
  base.final_state = session.state();
  return base;
}

std::string_view to_string(CorrelationStatus status) {
  switch (status) {
    case CorrelationStatus::correlated:
      return "correlated";
    case CorrelationStatus::unmatched:
      return "unmatched";
    case CorrelationStatus::tie:
      return "tie";
    case CorrelationStatus::dissolved:
      return "dissolved";
  }
  return "unmatched";
}

namespace {

CorrelationStatus correlation_status_from_string(std::string_view s) {
  for (auto st : {CorrelationStatus::correlated, CorrelationStatus::unmatched,
                  CorrelationStatus::tie, CorrelationStatus::dissolved})
    if (to_string(st) == s) return st;
  throw std::invalid_argument("unknown correlation status '" + std::string(s) + "'");
}

bool criterion_hits_element(const Criterion& c, const ElementSummary& e) {
  if (c.kind == CriterionKind::with_id && id_matches(e.resource_id, c.value)) return true;
  return (!e.text.empty() && c.value == e.text) ||
         (!e.content_desc.empty() && c.value == e.content_desc) ||
         (!e.resource_id.empty() && c.value == e.resource_id);
}

}  // namespace

std::vector<Correlation> correlate_assertions(const TestCase& tc,
                                              const std::vector<ElementSummary>& elements) {
  std::vector<Correlation> out;
  for (const auto& assertion : tc.assertions) {
    Correlation best;
    std::size_t hits = 0;
    for (std::size_t i = 0; i < tc.events.size() && i < elements.size(); ++i) {
      const auto& event = tc.events[i];
      std::optional<std::size_t> matched;
      bool via_input = false;
      const auto& criteria = assertion.selector.criteria();
      for (std::size_t k = 0; k < criteria.size() && !matched; ++k) {
        if (event.action.kind == ActionKind::input && !event.action.value.empty() &&
            criteria[k].value == event.action.value) {
          matched = k;
          via_input = true;
        }
      }
      for (std::size_t k = 0; k < criteria.size() && !matched; ++k)
        if (criterion_hits_element(criteria[k], elements[i])) matched = k;
      if (!matched) continue;
      ++hits;
      best.event = i;
      best.criterion = *matched;
      best.via_input = via_input;
    }
    if (hits == 1) {
      best.status = CorrelationStatus::correlated;
      out.push_back(best);
    } else {
      out.push_back({hits == 0 ? CorrelationStatus::unmatched : CorrelationStatus::tie,
                     std::nullopt, 0, false});
    }
  }
  std::map<std::size_t, std::size_t> claims;
  for (const auto& c : out)
    if (c.status == CorrelationStatus::correlated) ++claims[*c.event];
  for (auto& c : out)
    if (c.status == CorrelationStatus::correlated && claims[*c.event] > 1)
      c = {CorrelationStatus::dissolved, std::nullopt, 0, false};
  return out;
}

std::vector<Selector> modified_assertions(const TestCase& tc,
                                          const std::vector<Correlation>& correlations,
                                          std::size_t mutated_event,
                                          const MutantCandidate& mutant) {
  std::vector<Selector> out;
  for (std::size_t j = 0; j < tc.assertions.size(); ++j) {
    const Selector& original = tc.assertions[j].selector;
    const Correlation* corr = j < correlations.size() ? &correlations[j] : nullptr;
    if (!corr || corr->status != CorrelationStatus::correlated || corr->event != mutated_event) {
      out.push_back(original);
      continue;
    }
    auto criteria = original.criteria();
    auto& target = criteria.at(corr->criterion);
    if (mutant.action == ActionKind::click) {
      const auto& same_kind = mutant.element.feature(feature_of(target.kind));
      target.value = same_kind.empty() ? mutant.value : same_kind;
    } else if (corr->via_input) {
      target.value = mutant.value;
    }
    out.emplace_back(original.search_type(), std::move(criteria));
  }
  return out;
}

bool assertion_holds(const HierarchyTree& tree, const Selector& selector) {
  return tree.find_elements(selector).size() == 1;
}

bool exe_assert(const DriverSession& session, const TestCase& tc, std::size_t mutated_event,
                const MutantCandidate& mutant, const std::vector<Correlation>& correlations) {
  HierarchyTree tree = session.current_tree();
  for (const auto& sel : modified_assertions(tc, correlations, mutated_event, mutant))
    if (!assertion_holds(tree, sel)) return false;
  return true;
}

std::vector<std::size_t> MutationReport::mutable_events() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < events.size(); ++i)
    if (events[i].is_mutable()) out.push_back(i);
  return out;
}

std::vector<ParsedEvent> MutationReport::survivor_sequence(std::size_t index,
                                                           const Survivor& survivor) const {
  std::vector<ParsedEvent> seq;
  for (std::size_t i = 0; i < events.size(); ++i)
    seq.push_back(i == index ? survivor.candidate.as_event(events[i].event) : events[i].event);
  return seq;
}

namespace detail {

MutationReport report_skeleton(const AppModel& model, const TestCase& tc, const BaseTask& base) {
  MutationReport report;
  report.test_case = tc.name;
  report.app = model.name;
  report.assertions = tc.assertions;
  report.correlations = correlate_assertions(tc, base.elements);
  for (std::size_t i = 0; i < tc.events.size(); ++i) {
    EventRecord rec;
    rec.event = tc.events[i];
    rec.element = base.elements[i];
    rec.locators = base.locators[i];
    rec.pool = base.pools[i];
    report.events.push_back(std::move(rec));
  }
  return report;
}

Attempt run_attempt(DriverSession& session, const TestCase& tc, std::size_t target,
                    const MutantCandidate& mutant, const std::vector<Correlation>& correlations) {
  for (std::size_t i = 0; i < tc.events.size(); ++i) {
    ParsedEvent event = i == target ? mutant.as_event(tc.events[i]) : tc.events[i];
    if (auto err = session.perform(event.selector, event.action)) {
      if (i == target && err->kind == ExecutionErrorKind::ambiguous_match)
        return {false, true, {}};
      break;
    }
  }
  auto selectors = modified_assertions(tc, correlations, target, mutant);
  HierarchyTree tree = session.current_tree();
  bool passed = std::all_of(selectors.begin(), selectors.end(),
                            [&](const Selector& s) { return assertion_holds(tree, s); });
  return {passed, false, std::move(selectors)};
}

}  // namespace detail

MutationReport detect(const AppModel& model, const TestCase& tc, const DetectConfig& config) {
  using clock = std::chrono::steady_clock;
  auto started = clock::now();
  DriverSession session(std::make_shared<const AppModel>(model));
  BaseTask base = exe_base_task(session, tc, config);
  MutationReport report = detail::report_skeleton(model, tc, base);

  for (std::size_t target = 0; target < tc.events.size(); ++target) {
    auto& record = report.events[target];
    auto event_started = clock::now();
    std::deque<MutantCandidate> pool(record.pool.candidates.begin(),
                                     record.pool.candidates.end());
    while (!pool.empty()) {
      session.reset();
      if (config.setup) config.setup(session);
      const MutantCandidate mutant = pool.front();
      auto attempt = detail::run_attempt(session, tc, target, mutant, report.correlations);
      pool.pop_front();
      if (attempt.ambiguous) ++record.ambiguous_skips;
      if (attempt.passed) record.survivors.push_back({mutant, std::move(attempt.assertions)});
    }
    record.seconds = std::chrono::duration<double>(clock::now() - event_started).count();
  }
  report.total_seconds = std::chrono::duration<double>(clock::now() - started).count();
  return report;
}

json candidate_to_json(const MutantCandidate& c) {
  if (c.action == ActionKind::input) return {{"action", "input"}, {"value", c.value}};
  return {{"action", "click"},
          {"kind", std::string(to_string(c.kind))},
          {"value", c.value},
          {"element",
           {{"class", c.element.class_name},
            {"text", c.element.text},
            {"content_desc", c.element.content_desc},
            {"resource_id", c.element.resource_id}}}};
}

namespace {

json summary_to_json(const ElementSummary& e) {
  return {{"class", e.class_name},
          {"text", e.text},
          {"content_desc", e.content_desc},
          {"resource_id", e.resource_id}};
}

ElementSummary summary_from_json(const json& j) {
  return {j.at("class").get<std::string>(), j.at("text").get<std::string>(),
          j.at("content_desc").get<std::string>(), j.at("resource_id").get<std::string>()};
}

json assertion_to_json(const Selector& s) {
  json j = selector_to_json(s);
  j["check"] = "is_displayed";
  return j;
}

Selector assertion_selector(const json& j) {
  return selector_from_json({{"search_type", j.at("search_type")}, {"criteria", j.at("criteria")}});
}

}  // namespace

MutantCandidate candidate_from_json(const json& j) {
  if (j.at("action").get<std::string>() == "input")
    return MutantCandidate::input(j.at("value").get<std::string>());
  MutantCandidate c;
  c.action = ActionKind::click;
  c.kind = feature_kind_from_string(j.at("kind").get<std::string>());
  c.value = j.at("value").get<std::string>();
  c.element = summary_from_json(j.at("element"));
  return c;
}

json report_to_json(const MutationReport& report, bool with_timings) {
  json events = json::array();
  for (std::size_t i = 0; i < report.events.size(); ++i) {
    const auto& r = report.events[i];
    json candidates = json::array();
    for (const auto& c : r.pool.candidates) candidates.push_back(candidate_to_json(c));
    json survivors = json::array();
    for (const auto& s : r.survivors) {
      json asserts = json::array();
      for (const auto& a : s.assertions) asserts.push_back(assertion_to_json(a));
      survivors.push_back({{"candidate", candidate_to_json(s.candidate)}, {"assertions", asserts}});
    }
    json locators = json::array();
    for (auto k : r.locators) locators.push_back(std::string(to_string(k)));
    events.push_back({{"index", i},
                      {"event", event_to_json(r.event)},
                      {"element", summary_to_json(r.element)},
                      {"locators", locators},
                      {"mutable", r.is_mutable()},
                      {"pool",
                       {{"total_on_screen", r.pool.total_on_screen},
                        {"selected", r.pool.selected()},
                        {"candidates", candidates}}},
                      {"survivors", survivors},
                      {"ambiguous_skips", r.ambiguous_skips}});
  }
  json assertions = json::array();
  for (const auto& a : report.assertions) {
    json j = assertion_to_json(a.selector);
    j["lines"] = {a.origin.first_line, a.origin.last_line};
    assertions.push_back(std::move(j));
  }
  json correlations = json::array();
  for (std::size_t j = 0; j < report.correlations.size(); ++j) {
    const auto& c = report.correlations[j];
    correlations.push_back({{"assertion", j},
                            {"status", std::string(to_string(c.status))},
                            {"event", c.event ? json(*c.event) : json(nullptr)},
                            {"criterion", c.criterion},
                            {"via_input", c.via_input}});
  }
  json out = {{"status", "ok"},
              {"test_case", report.test_case},
              {"app", report.app},
              {"assertions", assertions},
              {"correlations", correlations},
              {"events", events}};
  if (with_timings) out["timings"] = timings_to_json(report);
  return out;
}

MutationReport report_from_json(const json& j) {
  MutationReport report;
  report.test_case = j.at("test_case").get<std::string>();
  report.app = j.at("app").get<std::string>();
  for (const auto& a : j.at("assertions")) {
    ParsedAssertion pa;
    pa.selector = assertion_selector(a);
    if (a.contains("lines"))
      pa.origin = {a["lines"][0].get<std::size_t>(), a["lines"][1].get<std::size_t>()};
    report.assertions.push_back(std::move(pa));
  }
  for (const auto& c : j.at("correlations")) {
    Correlation corr;
    corr.status = correlation_status_from_string(c.at("status").get<std::string>());
    if (!c.at("event").is_null()) corr.event = c.at("event").get<std::size_t>();
    corr.criterion = c.at("criterion").get<std::size_t>();
    corr.via_input = c.at("via_input").get<bool>();
    report.correlations.push_back(corr);
  }
  for (const auto& e : j.at("events")) {
    EventRecord r;
    r.event = event_from_json(e.at("event"));
    r.element = summary_from_json(e.at("element"));
    for (const auto& k : e.at("locators")) r.locators.push_back(feature_kind_from_string(k.get<std::string>()));
    r.pool.event_index = e.at("index").get<std::size_t>();
    r.pool.total_on_screen = e.at("pool").at("total_on_screen").get<std::size_t>();
    for (const auto& c : e.at("pool").at("candidates")) r.pool.candidates.push_back(candidate_from_json(c));
    for (const auto& s : e.at("survivors")) {
      Survivor sv;
      sv.candidate = candidate_from_json(s.at("candidate"));
      for (const auto& a : s.at("assertions")) sv.assertions.push_back(assertion_selector(a));
      r.survivors.push_back(std::move(sv));
    }
    r.ambiguous_skips = e.value("ambiguous_skips", std::size_t{0});
    report.events.push_back(std::move(r));
  }
  if (j.contains("timings")) apply_timings(report, j.at("timings"));
  return report;
}

json timings_to_json(const MutationReport& report) {
  json per_event = json::array();
  for (const auto& e : report.events) per_event.push_back(e.seconds);
  return {{"test_case", report.test_case},
          {"total_seconds", report.total_seconds},
          {"event_seconds", per_event}};
}

void apply_timings(MutationReport& report, const json& j) {
  report.total_seconds = j.at("total_seconds").get<double>();
  const auto& per_event = j.at("event_seconds");
  for (std::size_t i = 0; i < report.events.size() && i < per_event.size(); ++i)
    report.events[i].seconds = per_event[i].get<double>();
}

}  // namespace taskmine
