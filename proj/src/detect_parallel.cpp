#include <chrono>
#include <optional>

#include "mutation_detail.hpp"
#include "taskmine/mutation.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace taskmine {

MutationReport detect_parallel(const AppModel& model, const TestCase& tc,
                               const DetectConfig& config) {
  using clock = std::chrono::steady_clock;
  auto started = clock::now();
  auto shared = std::make_shared<const AppModel>(model);
  BaseTask base;
  {
    DriverSession session(shared);
    base = exe_base_task(session, tc, config);
  }
  MutationReport report = detail::report_skeleton(model, tc, base);

  for (std::size_t target = 0; target < tc.events.size(); ++target) {
    auto& record = report.events[target];
    auto event_started = clock::now();
    const auto& candidates = record.pool.candidates;
    const auto n = static_cast<std::ptrdiff_t>(candidates.size());
    std::vector<detail::Attempt> attempts(candidates.size());

#pragma omp parallel for schedule(dynamic)
    for (std::ptrdiff_t k = 0; k < n; ++k) {
      DriverSession session(shared);
      if (config.setup) config.setup(session);
      attempts[static_cast<std::size_t>(k)] = detail::run_attempt(
          session, tc, target, candidates[static_cast<std::size_t>(k)], report.correlations);
    }

    for (std::size_t k = 0; k < attempts.size(); ++k) {
      if (attempts[k].ambiguous) ++record.ambiguous_skips;
      if (attempts[k].passed)
        record.survivors.push_back({candidates[k], std::move(attempts[k].assertions)});
    }
    record.seconds = std::chrono::duration<double>(clock::now() - event_started).count();
  }
  report.total_seconds = std::chrono::duration<double>(clock::now() - started).count();
  return report;
}

}  // namespace taskmine
