#include "taskmine/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>

namespace taskmine {

using nlohmann::json;

GroundTruth truth_from_json(const json& j) {
  GroundTruth truth;
  for (const auto& [name, entry] : j.items()) {
    CaseTruth t;
    for (const auto& i : entry.at("mutable_events")) t.mutable_events.insert(i.get<std::size_t>());
    if (auto it = entry.find("valid_options"); it != entry.end())
      for (const auto& [idx, options] : it->items())
        t.valid_options[std::stoul(idx)] = options.get<std::vector<std::string>>();
    truth.emplace(name, std::move(t));
  }
  return truth;
}

GroundTruth load_truth(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return truth_from_json(json::parse(in));
}

Ratios ratios(const Confusion& c) {
  auto div = [](std::size_t num, std::size_t den) -> std::optional<double> {
    if (den == 0) return std::nullopt;
    return static_cast<double>(num) / static_cast<double>(den);
  };
  Ratios r;
  r.recall = div(c.tp, c.tp + c.fn);
  r.mdr = detection_rate(c.tp, c.tp + c.fn);
  r.precision = div(c.tp, c.tp + c.fp);
  if (r.precision && r.recall && *r.precision + *r.recall > 0)
    r.f1 = 2 * *r.precision * *r.recall / (*r.precision + *r.recall);
  return r;
}

std::optional<double> detection_rate(std::size_t detected, std::size_t mutable_events) {
  if (mutable_events == 0) return std::nullopt;
  return static_cast<double>(detected) / static_cast<double>(mutable_events);
}

std::optional<double> Reduction::percent() const {
  if (before == 0) return std::nullopt;
  return 100.0 * static_cast<double>(before - after) / static_cast<double>(before);
}

double round_half_up(double value, int digits) {
  double scale = std::pow(10.0, digits);
  // The epsilon absorbs binary representation error on exact ties.
  return std::floor(value * scale + 0.5 + 1e-9) / scale;
}

std::string_view to_string(FlawLabel label) {
  switch (label) {
    case FlawLabel::type1:
      return "Type1";
    case FlawLabel::type2:
      return "Type2";
    case FlawLabel::type3:
      return "Type3";
    case FlawLabel::succeed:
      return "Succeed";
  }
  return "Succeed";
}

EvalSummary summarize(const std::vector<MutationReport>& reports, const GroundTruth& truth) {
  EvalSummary s;
  std::map<std::string, AppRow> rows;
  for (const auto& report : reports) {
    auto it = truth.find(report.test_case);
    if (it == truth.end()) throw MissingTruth("no ground truth for test case " + report.test_case);
    const auto& t = it->second;
    AppRow& row = rows[report.app];
    row.app = report.app;
    for (std::size_t i = 0; i < report.events.size(); ++i) {
      const auto& e = report.events[i];
      bool truly = t.mutable_events.count(i) > 0;
      bool detected = e.is_mutable();
      if (truly && detected) ++s.confusion.tp;
      if (truly && !detected) ++s.confusion.fn;
      if (!truly && detected) ++s.confusion.fp;
      if (!truly && !detected) ++s.confusion.tn;
      row.mutable_events += truly;
      row.non_mutable += !truly;
      row.detected += truly && detected;
      row.candidates_before += e.pool.total_on_screen;
      row.candidates_after += e.pool.selected();
      s.reduction.before += e.pool.total_on_screen;
      s.reduction.after += e.pool.selected();
      s.timing.event_seconds_sum += e.seconds;
      s.timing.max_event_seconds = std::max(s.timing.max_event_seconds, e.seconds);
      ++s.timing.events;
    }
    row.seconds_total += report.total_seconds;
    row.event_count += report.events.size();
    s.timing.total_seconds += report.total_seconds;
    auto& labels = s.correlations[report.test_case];
    for (const auto& c : report.correlations) labels.emplace_back(to_string(c.status));
  }
  if (s.timing.events)
    s.timing.mean_event_seconds = s.timing.event_seconds_sum / static_cast<double>(s.timing.events);
  s.ratios = ratios(s.confusion);
  for (auto& [name, row] : rows) s.apps.push_back(row);
  return s;
}

FlawLabel classify_method(const TaskMethod& method, const MutationReport& report,
                          const CaseTruth& truth) {
  for (auto i : truth.mutable_events)
    if (i < report.events.size() && !report.events[i].is_mutable()) return FlawLabel::type1;
  for (auto i : method.covered_events)
    if (!truth.mutable_events.count(i)) return FlawLabel::type2;
  for (auto i : method.covered_events) {
    auto valid = truth.valid_options.find(i);
    if (valid == truth.valid_options.end() || i >= method.body.size()) continue;
    const auto* group = std::get_if<BranchGroup>(&method.body[i]);
    if (!group) continue;
    for (const auto& option : valid->second)
      if (std::find(group->options.begin(), group->options.end(), option) == group->options.end())
        return FlawLabel::type3;
  }
  return FlawLabel::succeed;
}

namespace {

json optional_ratio(const std::optional<double>& v) { return v ? json(*v) : json(nullptr); }

}  // namespace

json summary_to_json(const EvalSummary& s, bool with_timings) {
  json apps = json::array();
  for (const auto& r : s.apps) {
    json row = {{"app", r.app},
                {"non_mutable_events", r.non_mutable},
                {"mutable_events", r.mutable_events},
                {"correctly_detected", r.detected},
                {"candidates_before", r.candidates_before},
                {"candidates_after", r.candidates_after}};
    if (with_timings) {
      row["seconds_total"] = r.seconds_total;
      row["seconds_per_event"] = r.seconds_per_event();
    }
    apps.push_back(std::move(row));
  }
  json methods = json::array();
  for (const auto& m : s.methods)
    methods.push_back(
        {{"method", m.method}, {"test_case", m.test_case}, {"label", std::string(to_string(m.label))}});
  json failures = json::array();
  for (const auto& f : s.failures)
    failures.push_back(
        {{"test_case", f.test_case}, {"app", f.app}, {"status", f.status}, {"detail", f.detail}});
  auto pct = s.reduction.percent();
  json out = {
      {"confusion", {{"tn", s.confusion.tn}, {"fp", s.confusion.fp}, {"fn", s.confusion.fn}, {"tp", s.confusion.tp}}},
      {"mdr", optional_ratio(s.ratios.mdr)},
      {"precision", optional_ratio(s.ratios.precision)},
      {"recall", optional_ratio(s.ratios.recall)},
      {"f1", optional_ratio(s.ratios.f1)},
      {"reduction",
       {{"before", s.reduction.before},
        {"after", s.reduction.after},
        {"percent_eliminated", pct ? json(round_half_up(*pct, 2)) : json(nullptr)}}},
      {"apps", apps},
      {"methods", methods},
      {"failures", failures},
      {"correlations", s.correlations}};
  if (with_timings)
    out["timing"] = {{"total_seconds", s.timing.total_seconds},
                     {"event_seconds_sum", s.timing.event_seconds_sum},
                     {"mean_event_seconds", s.timing.mean_event_seconds},
                     {"max_event_seconds", s.timing.max_event_seconds},
                     {"events", s.timing.events}};
  return out;
}

std::string summary_table(const EvalSummary& s) {
  std::string out;
  char buf[256];
  std::snprintf(buf, sizeof buf, "%-22s %10s %8s %9s %10s %9s %12s %12s\n", "App Name",
                "NonMutable", "Mutable", "Detected", "CandBefore", "CandAfter", "Time total",
                "Time/event");
  out += buf;
  AppRow total;
  total.app = "Total";
  auto line = [&](const AppRow& r) {
    std::snprintf(buf, sizeof buf, "%-22s %10zu %8zu %9zu %10zu %9zu %12.4f %12.4f\n",
                  r.app.c_str(), r.non_mutable, r.mutable_events, r.detected, r.candidates_before,
                  r.candidates_after, r.seconds_total, r.seconds_per_event());
    out += buf;
  };
  for (const auto& r : s.apps) {
    line(r);
    total.non_mutable += r.non_mutable;
    total.mutable_events += r.mutable_events;
    total.detected += r.detected;
    total.candidates_before += r.candidates_before;
    total.candidates_after += r.candidates_after;
    total.seconds_total += r.seconds_total;
    total.event_count += r.event_count;
  }
  line(total);
  auto fmt = [](const std::optional<double>& v, int digits) {
    if (!v) return std::string("undefined");
    char b[32];
    std::snprintf(b, sizeof b, "%.*f", digits, *v);
    return std::string(b);
  };
  out += "MDR " + fmt(s.ratios.mdr ? std::optional<double>(*s.ratios.mdr * 100) : std::nullopt, 2) +
         "%  precision " + fmt(s.ratios.precision, 3) + "  recall " + fmt(s.ratios.recall, 3) +
         "  F1 " + fmt(s.ratios.f1, 3) + "\n";
  auto pct = s.reduction.percent();
  out += "Candidates eliminated " +
         fmt(pct ? std::optional<double>(round_half_up(*pct, 2)) : std::nullopt, 2) + "%\n";
  return out;
}

}  // namespace taskmine
