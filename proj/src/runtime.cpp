#include "taskmine/runtime.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <map>
#include <sstream>

namespace taskmine {

using nlohmann::json;

namespace {

struct Tok {
  enum Type { ident, string, punct } type;
  std::string text;
};

std::vector<Tok> lex_line(std::string_view line, std::size_t line_no) {
  std::vector<Tok> out;
  std::size_t i = 0;
  while (i < line.size()) {
    char c = line[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
    } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = i;
      while (i < line.size() && (std::isalnum(static_cast<unsigned char>(line[i])) || line[i] == '_'))
        ++i;
      out.push_back({Tok::ident, std::string(line.substr(start, i - start))});
    } else if (c == '"') {
      std::string value;
      ++i;
      for (;;) {
        if (i >= line.size()) throw TaskSyntaxError(line_no, "unterminated string literal");
        char d = line[i++];
        if (d == '"') break;
        if (d != '\\') {
          value += d;
          continue;
        }
        if (i >= line.size()) throw TaskSyntaxError(line_no, "unterminated string literal");
        char e = line[i++];
        switch (e) {
          case 'n':
            value += '\n';
            break;
          case 't':
            value += '\t';
            break;
          case 'r':
            value += '\r';
            break;
          case '"':
          case '\\':
            value += e;
            break;
          default:
            throw TaskSyntaxError(line_no, std::string("unknown escape \\") + e);
        }
      }
      out.push_back({Tok::string, std::move(value)});
    } else if (std::string_view("(){},;.").find(c) != std::string_view::npos) {
      out.push_back({Tok::punct, std::string(1, c)});
      ++i;
    } else {
      throw TaskSyntaxError(line_no, std::string("unexpected character '") + c + "'");
    }
  }
  return out;
}

struct Api {
  ActionKind action;
  FeatureKind kind;
};

std::optional<Api> lookup_api(std::string_view name) {
  for (auto kind : kFeaturePriority) {
    if (name == click_api(kind)) return Api{ActionKind::click, kind};
    if (name == input_api(kind)) return Api{ActionKind::input, kind};
  }
  return std::nullopt;
}

class LineParser {
 public:
  LineParser(std::vector<Tok> toks, std::size_t line) : toks_(std::move(toks)), line_(line) {}

  bool done() const { return pos_ >= toks_.size(); }
  bool peek(std::string_view p) const {
    return !done() && toks_[pos_].type == Tok::punct && toks_[pos_].text == p;
  }
  bool peek_ident(std::string_view s) const {
    return !done() && toks_[pos_].type == Tok::ident && toks_[pos_].text == s;
  }
  void expect(std::string_view p) {
    if (!peek(p)) fail("expected '" + std::string(p) + "'");
    ++pos_;
  }
  std::string ident() {
    if (done() || toks_[pos_].type != Tok::ident) fail("expected identifier");
    return toks_[pos_++].text;
  }
  std::string string() {
    if (done() || toks_[pos_].type != Tok::string) fail("expected string literal");
    return toks_[pos_++].text;
  }
  bool next_is_string() const { return !done() && toks_[pos_].type == Tok::string; }
  void end() {
    if (!done()) fail("unexpected '" + toks_[pos_].text + "'");
  }
  [[noreturn]] void fail(const std::string& msg) const { throw TaskSyntaxError(line_, msg); }
  std::size_t line() const { return line_; }

 private:
  std::vector<Tok> toks_;
  std::size_t pos_ = 0;
  std::size_t line_;
};

Api api_call(LineParser& p, std::string& name) {
  name = p.ident();
  auto api = lookup_api(name);
  if (!api) p.fail("unknown API '" + name + "'");
  return *api;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

TaskMethod load(std::string_view text) {
  TaskMethod m;
  std::vector<std::pair<std::size_t, std::string>> lines;
  {
    std::istringstream in{std::string(text)};
    std::string line;
    std::size_t n = 0;
    while (std::getline(in, line)) {
      ++n;
      auto t = trim(line);
      if (t.empty()) continue;
      if (t.starts_with("//")) {
        constexpr std::string_view kSource = "// source: ";
        if (t.starts_with(kSource) && lines.empty()) {
          auto rest = t.substr(kSource.size());
          auto semi = rest.find(';');
          m.source_test = std::string(trim(rest.substr(0, semi)));
          if (semi != std::string_view::npos) {
            auto tail = rest.substr(semi + 1);
            auto colon = tail.find(':');
            if (colon == std::string_view::npos)
              throw TaskSyntaxError(n, "malformed provenance comment");
            std::istringstream idx{std::string(tail.substr(colon + 1))};
            std::size_t i;
            while (idx >> i) m.covered_events.push_back(i);
            if (!idx.eof()) throw TaskSyntaxError(n, "malformed event index list");
          }
        }
        continue;
      }
      lines.emplace_back(n, std::string(t));
    }
  }
  if (lines.empty()) throw TaskSyntaxError(1, "empty task script");

  {
    LineParser p(lex_line(lines.front().second, lines.front().first), lines.front().first);
    if (!p.peek_ident("public")) p.fail("expected 'public void <name>(...) {'");
    p.ident();
    if (!p.peek_ident("void")) p.fail("expected 'void'");
    p.ident();
    m.name = p.ident();
    p.expect("(");
    while (!p.peek(")")) {
      if (!m.params.empty()) p.expect(",");
      if (!p.peek_ident("String")) p.fail("parameters must be declared as 'String <name>'");
      p.ident();
      auto param = p.ident();
      if (std::find(m.params.begin(), m.params.end(), param) != m.params.end())
        p.fail("duplicate parameter '" + param + "'");
      m.params.push_back(param);
    }
    p.expect(")");
    p.expect("{");
    p.end();
  }

  std::map<std::string, bool> used;
  auto use_param = [&](LineParser& p, const std::string& name) {
    if (std::find(m.params.begin(), m.params.end(), name) == m.params.end())
      p.fail("unknown parameter '" + name + "'");
    if (used[name]) p.fail("parameter '" + name + "' is used by more than one statement");
    used[name] = true;
  };

  bool closed = false;
  for (std::size_t k = 1; k < lines.size(); ++k) {
    const auto& [line_no, line] = lines[k];
    if (closed) throw TaskSyntaxError(line_no, "content after the closing '}'");
    LineParser p(lex_line(line, line_no), line_no);
    if (p.peek("}")) {
      p.expect("}");
      p.end();
      closed = true;
      continue;
    }
    if (p.peek_ident("if")) {
      p.ident();
      p.expect("(");
      auto param = p.ident();
      p.expect(".");
      if (!p.peek_ident("equals")) p.fail("expected '.equals('");
      p.ident();
      p.expect("(");
      auto option = p.string();
      p.expect(")");
      p.expect(")");
      p.expect("{");
      std::string name;
      auto api = api_call(p, name);
      if (api.action != ActionKind::click) p.fail("branches may only click");
      p.expect("(");
      auto clicked = p.string();
      p.expect(")");
      p.expect(";");
      p.expect("}");
      p.end();
      if (clicked != option) p.fail("branch clicks \"" + clicked + "\" but tests \"" + option + "\"");
      auto* group = m.body.empty() ? nullptr : std::get_if<BranchGroup>(&m.body.back());
      if (group && group->param == param) {
        if (group->kind != api.kind) p.fail("branches of one parameter must use the same API");
        if (std::find(group->options.begin(), group->options.end(), option) != group->options.end())
          p.fail("duplicate option \"" + option + "\"");
        group->options.push_back(option);
      } else {
        use_param(p, param);
        m.body.push_back(BranchGroup{param, api.kind, {option}});
      }
      continue;
    }
    std::string name;
    auto api = api_call(p, name);
    p.expect("(");
    auto first = p.string();
    if (api.action == ActionKind::click) {
      p.expect(")");
      p.expect(";");
      p.end();
      m.body.push_back(FixedClick{api.kind, first});
      continue;
    }
    p.expect(",");
    if (p.next_is_string()) {
      auto value = p.string();
      p.expect(")");
      p.expect(";");
      p.end();
      m.body.push_back(FixedInput{api.kind, first, value});
    } else {
      auto param = p.ident();
      p.expect(")");
      p.expect(";");
      p.end();
      use_param(p, param);
      m.body.push_back(ParamInput{api.kind, first, param});
    }
  }
  if (!closed) throw TaskSyntaxError(lines.back().first, "missing closing '}'");
  for (const auto& param : m.params)
    if (!used[param])
      throw TaskSyntaxError(lines.front().first, "parameter '" + param + "' is never used");
  return m;
}

TaskMethod load_method_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  if (path.ends_with(".json")) return method_from_json(json::parse(buf.str()));
  return load(buf.str());
}

ExecutionTrace run(const AppModel& model, const Invocation& invocation) {
  const auto& method = invocation.method;
  if (invocation.args.size() != method.params.size())
    throw std::invalid_argument("method " + method.name + " takes " +
                                std::to_string(method.params.size()) + " argument(s), got " +
                                std::to_string(invocation.args.size()));
  std::map<std::string, std::string> bound;
  for (std::size_t i = 0; i < method.params.size(); ++i) bound[method.params[i]] = invocation.args[i];

  ExecutionTrace trace;
  trace.method = method.name;
  trace.args = invocation.args;
  DriverSession session = launch(model);

  for (std::size_t i = 0; i < method.body.size() && !trace.failure; ++i) {
    TraceStep step;
    step.statement = i;
    Selector target;
    Action action = Action::click();
    std::visit(
        [&](const auto& s) {
          using T = std::decay_t<decltype(s)>;
          if constexpr (std::is_same_v<T, FixedClick>) {
            step.api = click_api(s.kind);
            step.target = s.value;
          } else if constexpr (std::is_same_v<T, FixedInput>) {
            step.api = input_api(s.kind);
            step.target = s.locator;
            step.value = s.value;
            action = Action::input(s.value);
          } else if constexpr (std::is_same_v<T, BranchGroup>) {
            const auto& arg = bound.at(s.param);
            step.api = click_api(s.kind);
            step.target = arg;
            if (std::find(s.options.begin(), s.options.end(), arg) == s.options.end())
              trace.failure = RuntimeFailure{RuntimeFailure::Kind::unsupported_option, i, s.param,
                                             arg,
                                             "UnsupportedOption: " + s.param + " = \"" + arg +
                                                 "\" matches no branch"};
          } else {
            step.api = input_api(s.kind);
            step.target = s.locator;
            step.value = bound.at(s.param);
            action = Action::input(step.value);
          }
          FeatureKind kind = s.kind;
          target = Selector::single(criterion_for(kind), step.target);
        },
        method.body[i]);
    if (trace.failure) break;
    if (auto err = session.perform(target, action)) {
      trace.failure = RuntimeFailure{RuntimeFailure::Kind::execution, i, {}, {},
                                     std::string(to_string(err->kind)) + ": " + err->message};
      break;
    }
    step.screen_after = session.current_screen();
    trace.steps.push_back(std::move(step));
  }
  trace.final_state = session.state();
  return trace;
}

json trace_to_json(const ExecutionTrace& trace) {
  json steps = json::array();
  for (const auto& s : trace.steps)
    steps.push_back({{"statement", s.statement},
                     {"api", s.api},
                     {"target", s.target},
                     {"value", s.value},
                     {"screen_after", s.screen_after}});
  json failure = nullptr;
  if (trace.failure) {
    const auto& f = *trace.failure;
    failure = {{"kind", f.kind == RuntimeFailure::Kind::unsupported_option ? "UnsupportedOption"
                                                                            : "ExecutionError"},
               {"statement", f.statement},
               {"message", f.message}};
    if (f.kind == RuntimeFailure::Kind::unsupported_option) {
      failure["param"] = f.param;
      failure["value"] = f.value;
    }
  }
  return {{"method", trace.method},
          {"args", trace.args},
          {"ok", trace.ok()},
          {"steps", steps},
          {"failure", failure},
          {"final_screen", trace.final_state.screen},
          {"final_tree", element_to_json(trace.final_tree().root())}};
}

}  // namespace taskmine
