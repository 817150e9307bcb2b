#include <algorithm>
#include <set>

#include "taskmine/task_method.hpp"

namespace taskmine {

using nlohmann::json;

namespace {

bool contains(const std::vector<std::size_t>& v, std::size_t x) {
  return std::find(v.begin(), v.end(), x) != v.end();
}

FeatureKind click_locator(const EventRecord& rec) {
  if (!rec.locators.empty()) return rec.locators.front();
  for (auto kind : kFeaturePriority)
    if (!rec.element.feature(kind).empty()) return kind;
  throw GenerationError(GenerationError::Kind::no_joint_feature,
                        "event element has no textual feature to locate it by");
}

FeatureKind input_locator(const EventRecord& rec) {
  constexpr FeatureKind order[] = {FeatureKind::resource_id, FeatureKind::content_desc,
                                   FeatureKind::text};
  for (auto kind : order)
    if (std::find(rec.locators.begin(), rec.locators.end(), kind) != rec.locators.end())
      return kind;
  for (auto kind : order)
    if (!rec.element.feature(kind).empty()) return kind;
  throw GenerationError(GenerationError::Kind::no_joint_feature,
                        "input field has no textual feature to locate it by");
}

std::string quote(std::string_view s) {
  std::string out = "\"";
  for (char c : s) {
    switch (c) {
      case '"':
        out += "\\\"";
        break;
      case '\\':
        out += "\\\\";
        break;
      case '\n':
        out += "\\n";
        break;
      case '\t':
        out += "\\t";
        break;
      case '\r':
        out += "\\r";
        break;
      default:
        out += c;
    }
  }
  return out + "\"";
}

TaskStatement statement_for(const EventRecord& rec, bool parameterized, const std::string& param) {
  switch (rec.event.action.kind) {
    case ActionKind::click: {
      if (!parameterized) {
        auto kind = click_locator(rec);
        return FixedClick{kind, rec.element.feature(kind)};
      }
      std::vector<MutantCandidate> survivors;
      for (const auto& s : rec.survivors) survivors.push_back(s.candidate);
      auto kind = choose_feature(rec.element, survivors);
      BranchGroup group{param, kind, {rec.element.feature(kind)}};
      for (const auto& s : survivors) group.options.push_back(s.element.feature(kind));
      return group;
    }
    case ActionKind::input: {
      auto kind = input_locator(rec);
      if (parameterized) return ParamInput{kind, rec.element.feature(kind), param};
      return FixedInput{kind, rec.element.feature(kind), rec.event.action.value};
    }
  }
  throw GenerationError(GenerationError::Kind::unsupported_action,
                        "event is neither a click nor an input");
}

TaskMethod build(const TestCase& tc, const MutationReport& report,
                 const std::vector<std::size_t>& parameterized, std::string name) {
  TaskMethod m;
  m.name = std::move(name);
  m.source_test = tc.name;
  m.covered_events = parameterized;
  for (std::size_t i = 0; i < report.events.size(); ++i) {
    std::string param;
    if (contains(parameterized, i)) {
      param = parameterized.size() == 1 ? "param" : "param" + std::to_string(m.params.size() + 1);
      m.params.push_back(param);
    }
    m.body.push_back(statement_for(report.events[i], !param.empty(), param));
  }
  return m;
}

}  // namespace

std::string click_api(FeatureKind kind) {
  switch (kind) {
    case FeatureKind::text:
      return "onEventClickingByText";
    case FeatureKind::content_desc:
      return "onEventClickingByCD";
    case FeatureKind::resource_id:
      return "onEventClickingByResourceId";
  }
  return {};
}

std::string input_api(FeatureKind kind) {
  switch (kind) {
    case FeatureKind::text:
      return "onEventInputByText";
    case FeatureKind::content_desc:
      return "onEventInputByCD";
    case FeatureKind::resource_id:
      return "onEventInputByResourceId";
  }
  return {};
}

FeatureKind choose_feature(const ElementSummary& original,
                           const std::vector<MutantCandidate>& survivors) {
  for (auto kind : kFeaturePriority) {
    if (original.feature(kind).empty()) continue;
    std::set<std::string> seen{original.feature(kind)};
    bool usable = true;
    for (const auto& s : survivors) {
      const auto& v = s.element.feature(kind);
      if (v.empty() || !seen.insert(v).second) {
        usable = false;
        break;
      }
    }
    if (usable) return kind;
  }
  throw GenerationError(GenerationError::Kind::no_joint_feature,
                        "no textual feature is shared by the event and all its mutants");
}

std::vector<TaskMethod> generate(const TestCase& tc, const MutationReport& report) {
  if (report.test_case != tc.name || report.events.size() != tc.events.size())
    throw std::invalid_argument("mutation report '" + report.test_case +
                                "' does not belong to test case '" + tc.name + "'");
  for (std::size_t i = 0; i < tc.events.size(); ++i)
    if (!(report.events[i].event == tc.events[i]))
      throw std::invalid_argument("mutation report event " + std::to_string(i) +
                                  " differs from the test case");

  auto mutables = report.mutable_events();
  std::vector<TaskMethod> out;
  if (mutables.size() <= 1) {
    auto name = mutables.empty() ? tc.name : tc.name + "__m" + std::to_string(mutables.front());
    out.push_back(build(tc, report, mutables, std::move(name)));
    return out;
  }
  for (auto i : mutables) out.push_back(build(tc, report, {i}, tc.name + "__m" + std::to_string(i)));
  out.push_back(build(tc, report, mutables, tc.name + "__all"));
  return out;
}

std::string render(const TaskMethod& method) {
  std::string out = "// source: " + method.source_test + "; parameterized events:";
  for (auto i : method.covered_events) out += " " + std::to_string(i);
  out += "\npublic void " + method.name + "(";
  for (std::size_t i = 0; i < method.params.size(); ++i) {
    if (i) out += ", ";
    out += "String " + method.params[i];
  }
  out += ") {\n";
  for (const auto& stmt : method.body) {
    std::visit(
        [&](const auto& s) {
          using T = std::decay_t<decltype(s)>;
          if constexpr (std::is_same_v<T, FixedClick>) {
            out += "    " + click_api(s.kind) + "(" + quote(s.value) + ");\n";
          } else if constexpr (std::is_same_v<T, FixedInput>) {
            out += "    " + input_api(s.kind) + "(" + quote(s.locator) + ", " + quote(s.value) +
                   ");\n";
          } else if constexpr (std::is_same_v<T, BranchGroup>) {
            for (const auto& option : s.options)
              out += "    if (" + s.param + ".equals(" + quote(option) + ")) { " +
                     click_api(s.kind) + "(" + quote(option) + "); }\n";
          } else {
            out += "    " + input_api(s.kind) + "(" + quote(s.locator) + ", " + s.param + ");\n";
          }
        },
        stmt);
  }
  out += "}\n";
  return out;
}

json method_to_json(const TaskMethod& method) {
  json body = json::array();
  for (const auto& stmt : method.body) {
    body.push_back(std::visit(
        [](const auto& s) -> json {
          using T = std::decay_t<decltype(s)>;
          const std::string kind(to_string(s.kind));
          if constexpr (std::is_same_v<T, FixedClick>) {
            return {{"type", "fixed_click"}, {"kind", kind}, {"value", s.value}};
          } else if constexpr (std::is_same_v<T, FixedInput>) {
            return {{"type", "fixed_input"}, {"kind", kind}, {"locator", s.locator}, {"value", s.value}};
          } else if constexpr (std::is_same_v<T, BranchGroup>) {
            return {{"type", "branch_group"}, {"kind", kind}, {"param", s.param}, {"options", s.options}};
          } else {
            return {{"type", "param_input"}, {"kind", kind}, {"locator", s.locator}, {"param", s.param}};
          }
        },
        stmt));
  }
  return {{"name", method.name},
          {"params", method.params},
          {"body", body},
          {"source_test", method.source_test},
          {"covered_events", method.covered_events}};
}

TaskMethod method_from_json(const json& j) {
  TaskMethod m;
  m.name = j.at("name").get<std::string>();
  m.params = j.at("params").get<std::vector<std::string>>();
  m.source_test = j.at("source_test").get<std::string>();
  m.covered_events = j.at("covered_events").get<std::vector<std::size_t>>();
  for (const auto& s : j.at("body")) {
    auto type = s.at("type").get<std::string>();
    auto kind = feature_kind_from_string(s.at("kind").get<std::string>());
    if (type == "fixed_click")
      m.body.push_back(FixedClick{kind, s.at("value").get<std::string>()});
    else if (type == "fixed_input")
      m.body.push_back(FixedInput{kind, s.at("locator").get<std::string>(), s.at("value").get<std::string>()});
    else if (type == "branch_group")
      m.body.push_back(BranchGroup{s.at("param").get<std::string>(), kind,
                                   s.at("options").get<std::vector<std::string>>()});
    else if (type == "param_input")
      m.body.push_back(ParamInput{kind, s.at("locator").get<std::string>(), s.at("param").get<std::string>()});
    else
      throw std::invalid_argument("unknown statement type '" + type + "'");
  }
  return m;
}

}  // namespace taskmine
