// Brute-force reference for detect(): every one-event-mutated sequence is
// materialized up front and executed from its own fresh launch.

#include <chrono>

#include "taskmine/mutation.hpp"

namespace taskmine {

namespace {

struct Replay {
  std::optional<std::size_t> failed_at;
  std::optional<ExecutionErrorKind> failure;
  HierarchyTree final_tree;
};

Replay replay(const std::shared_ptr<const AppModel>& model, const DetectConfig& config,
              const std::vector<ParsedEvent>& sequence) {
  DriverSession session = launch(model);
  if (config.setup) config.setup(session);
  Replay out;
  for (std::size_t i = 0; i < sequence.size(); ++i) {
    if (auto err = session.perform(sequence[i].selector, sequence[i].action)) {
      out.failed_at = i;
      out.failure = err->kind;
      break;
    }
  }
  out.final_tree = session.current_tree();
  return out;
}

std::size_t displayed_matches(const HierarchyTree& tree, const Selector& selector) {
  std::size_t n = 0;
  for (const auto& p : tree.all_paths()) {
    const auto& e = tree.at(p);
    if (e.displayed && selector_matches(e, selector)) ++n;
  }
  return n;
}

Selector rewrite(const Selector& original, const Correlation& corr, const MutantCandidate& mutant) {
  std::vector<Criterion> criteria = original.criteria();
  Criterion& c = criteria[corr.criterion];
  if (mutant.action == ActionKind::input) {
    if (corr.via_input) c.value = mutant.value;
  } else {
    std::string replacement;
    switch (c.kind) {
      case CriterionKind::with_text:
        replacement = mutant.element.text;
        break;
      case CriterionKind::with_content_description:
        replacement = mutant.element.content_desc;
        break;
      case CriterionKind::with_id:
        replacement = mutant.element.resource_id;
        break;
    }
    c.value = replacement.empty() ? mutant.value : replacement;
  }
  return Selector(original.search_type(), criteria);
}

}  // namespace

MutationReport detect_brute_force(const AppModel& model, const TestCase& tc,
                                  const DetectConfig& config) {
  using clock = std::chrono::steady_clock;
  auto started = clock::now();
  auto shared = std::make_shared<const AppModel>(model);

  MutationReport report;
  report.test_case = tc.name;
  report.app = model.name;
  report.assertions = tc.assertions;

  // Base replay, one snapshot per event.
  std::vector<ElementSummary> elements;
  {
    DriverSession session = launch(shared);
    if (config.setup) config.setup(session);
    for (std::size_t i = 0; i < tc.events.size(); ++i) {
      const auto& event = tc.events[i];
      HierarchyTree snapshot = session.current_tree();
      auto hits = snapshot.find_elements(event.selector);
      if (hits.size() != 1)
        throw BaseTaskFailure(BaseTaskFailure::Stage::event, i,
                              std::to_string(hits.size()) + " elements match " +
                                  event.selector.str() + " on screen '" +
                                  session.current_screen() + "'");
      EventRecord record;
      record.event = event;
      record.element = ElementSummary::of(snapshot.at(hits[0]));
      record.locators = unique_locators(snapshot, hits[0]);
      record.pool.event_index = i;
      record.pool.candidates = select_candidates(snapshot, hits[0], event.action, config);
      record.pool.total_on_screen = event.action.kind == ActionKind::click
                                        ? count_clickable(snapshot)
                                        : record.pool.candidates.size();
      elements.push_back(record.element);
      report.events.push_back(std::move(record));
      if (auto err = session.perform(event.selector, event.action))
        throw BaseTaskFailure(BaseTaskFailure::Stage::event, i, err->message);
    }
    HierarchyTree final_tree = session.current_tree();
    for (std::size_t j = 0; j < tc.assertions.size(); ++j)
      if (displayed_matches(final_tree, tc.assertions[j].selector) != 1)
        throw BaseTaskFailure(BaseTaskFailure::Stage::assertion, j,
                              "no unique displayed element matches " +
                                  tc.assertions[j].selector.str());
  }
  report.correlations = correlate_assertions(tc, elements);

  for (std::size_t i = 0; i < report.events.size(); ++i) {
    auto& record = report.events[i];
    auto event_started = clock::now();
    for (const auto& mutant : record.pool.candidates) {
      std::vector<ParsedEvent> sequence = tc.events;
      sequence[i] = mutant.as_event(tc.events[i]);
      Replay run = replay(shared, config, sequence);
      if (run.failed_at == i && run.failure == ExecutionErrorKind::ambiguous_match) {
        ++record.ambiguous_skips;
        continue;
      }
      std::vector<Selector> checks;
      for (std::size_t j = 0; j < tc.assertions.size(); ++j) {
        const auto& corr = report.correlations[j];
        bool rewritten = corr.status == CorrelationStatus::correlated && corr.event == i;
        checks.push_back(rewritten ? rewrite(tc.assertions[j].selector, corr, mutant)
                                   : tc.assertions[j].selector);
      }
      bool passed = true;
      for (const auto& s : checks) passed = passed && displayed_matches(run.final_tree, s) == 1;
      if (passed) record.survivors.push_back({mutant, checks});
    }
    record.seconds = std::chrono::duration<double>(clock::now() - event_started).count();
  }
  report.total_seconds = std::chrono::duration<double>(clock::now() - started).count();
  return report;
}

}  // namespace taskmine
