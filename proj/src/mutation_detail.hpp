#pragma once

#include "taskmine/mutation.hpp"

namespace taskmine::detail {

struct Attempt {
  bool passed = false;
  bool ambiguous = false;  // mutant itself could not be resolved uniquely
  std::vector<Selector> assertions;
};

MutationReport report_skeleton(const AppModel& model, const TestCase& tc, const BaseTask& base);

/// Runs one mutated sequence on a session already reset and set up.
Attempt run_attempt(DriverSession& session, const TestCase& tc, std::size_t target,
                    const MutantCandidate& mutant, const std::vector<Correlation>& correlations);

}  // namespace taskmine::detail
