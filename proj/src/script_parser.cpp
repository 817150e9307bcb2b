#include <cctype>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>

#include "taskmine/script.hpp"

namespace taskmine {

namespace {

enum class Tok { ident, string, punct, end };

struct Token {
  Tok type = Tok::end;
  std::string text;
  std::size_t line = 0;
};

void append_utf8(std::string& out, unsigned cp) {
  if (cp < 0x80) {
    out += static_cast<char>(cp);
  } else if (cp < 0x800) {
    out += static_cast<char>(0xC0 | (cp >> 6));
    out += static_cast<char>(0x80 | (cp & 0x3F));
  } else {
    out += static_cast<char>(0xE0 | (cp >> 12));
    out += static_cast<char>(0x80 | ((cp >> 6) & 0x3F));
    out += static_cast<char>(0x80 | (cp & 0x3F));
  }
}

std::vector<Token> tokenize(std::string_view src) {
  std::vector<Token> out;
  std::size_t line = 1;
  std::size_t i = 0;
  auto syntax = [&](const std::string& msg) { throw ParseError(ParseErrorKind::syntax, line, msg); };
  while (i < src.size()) {
    char c = src[i];
    if (c == '\n') {
      ++line;
      ++i;
    } else if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
    } else if (src.substr(i, 2) == "//") {
      while (i < src.size() && src[i] != '\n') ++i;
    } else if (src.substr(i, 2) == "/*") {
      auto close = src.find("*/", i + 2);
      if (close == std::string_view::npos) syntax("unterminated comment");
      for (std::size_t k = i; k < close; ++k)
        if (src[k] == '\n') ++line;
      i = close + 2;
    } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_' || c == '$') {
      std::size_t start = i;
      while (i < src.size() && (std::isalnum(static_cast<unsigned char>(src[i])) || src[i] == '_' ||
                                src[i] == '$'))
        ++i;
      out.push_back({Tok::ident, std::string(src.substr(start, i - start)), line});
    } else if (c == '"') {
      std::size_t start_line = line;
      std::string value;
      ++i;
      for (;;) {
        if (i >= src.size() || src[i] == '\n') syntax("unterminated string literal");
        char d = src[i++];
        if (d == '"') break;
        if (d != '\\') {
          value += d;
          continue;
        }
        if (i >= src.size()) syntax("unterminated string literal");
        char e = src[i++];
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
          case '\'':
            value += e;
            break;
          case 'u': {
            if (i + 4 > src.size()) syntax("bad unicode escape");
            unsigned cp = 0;
            for (int k = 0; k < 4; ++k) {
              char h = src[i++];
              if (!std::isxdigit(static_cast<unsigned char>(h))) syntax("bad unicode escape");
              cp = cp * 16 + static_cast<unsigned>(std::isdigit(static_cast<unsigned char>(h))
                                                       ? h - '0'
                                                       : std::tolower(h) - 'a' + 10);
            }
            append_utf8(value, cp);
            break;
          }
          default:
            syntax(std::string("unknown escape \\") + e);
        }
      }
      out.push_back({Tok::string, std::move(value), start_line});
    } else if (std::string_view("(){},;.=@").find(c) != std::string_view::npos) {
      out.push_back({Tok::punct, std::string(1, c), line});
      ++i;
    } else {
      syntax(std::string("unexpected character '") + c + "'");
    }
  }
  out.push_back({Tok::end, {}, line});
  return out;
}

struct Interaction {
  Selector selector;
  std::size_t line = 0;
};

class Parser {
 public:
  explicit Parser(std::vector<Token> tokens) : toks_(std::move(tokens)) {}

  TestCase run() {
    TestCase tc;
    while (peek_punct("@")) {
      next();
      expect_ident();
      if (peek_punct("(")) skip_balanced();
    }
    if (peek_ident("public")) next();
    if (!peek_ident("void")) fail("expected 'public void <name>() {'");
    next();
    tc.name = expect_ident().text;
    expect("(");
    expect(")");
    if (peek_ident("throws")) {
      next();
      expect_ident();
      while (peek_punct(",")) {
        next();
        expect_ident();
      }
    }
    expect("{");
    while (!peek_punct("}")) {
      if (cur().type == Tok::end) fail("missing closing '}'");
      statement(tc);
    }
    next();
    if (cur().type != Tok::end) fail("unexpected content after the test method");
    return tc;
  }

 private:
  const Token& cur() const { return toks_[pos_]; }
  const Token& next() { return toks_[pos_ < toks_.size() - 1 ? pos_++ : pos_]; }
  bool peek_punct(std::string_view p) const { return cur().type == Tok::punct && cur().text == p; }
  bool peek_ident(std::string_view s) const { return cur().type == Tok::ident && cur().text == s; }

  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(ParseErrorKind::syntax, cur().line, msg);
  }
  [[noreturn]] void unsupported(const Token& t) const {
    throw ParseError(ParseErrorKind::unsupported_api, t.line, "unsupported API '" + t.text + "'",
                     t.text);
  }

  void expect(std::string_view p) {
    if (!peek_punct(p))
      fail("expected '" + std::string(p) + "'" +
           (cur().type == Tok::end ? std::string(" at end of input")
                                   : " before '" + cur().text + "'"));
    next();
  }
  const Token& expect_ident() {
    if (cur().type != Tok::ident) fail("expected identifier");
    return next();
  }
  std::string expect_string() {
    if (cur().type != Tok::string) fail("expected string literal");
    return next().text;
  }
  void skip_balanced() {
    int depth = 0;
    do {
      if (peek_punct("(")) ++depth;
      if (peek_punct(")")) --depth;
      if (cur().type == Tok::end) fail("unbalanced parentheses");
      next();
    } while (depth > 0);
  }

  // Reads a possibly qualified API name such as `ViewActions.click` and
  // returns its last segment.
  Token api_name() {
    Token t = expect_ident();
    while (is_namespace(t.text) && peek_punct(".")) {
      next();
      Token seg = expect_ident();
      t.text = seg.text;
      t.line = seg.line;
    }
    return t;
  }
  static bool is_namespace(std::string_view s) {
    return s == "Espresso" || s == "ViewActions" || s == "ViewMatchers" || s == "Matchers" ||
           s == "ViewAssertions";
  }

  Criterion criterion(const Token& name) {
    expect("(");
    Criterion c;
    if (name.text == "withText") {
      c = {CriterionKind::with_text, expect_string()};
    } else if (name.text == "withContentDescription") {
      c = {CriterionKind::with_content_description, expect_string()};
    } else if (name.text == "withId") {
      std::string ref = expect_ident().text;
      while (peek_punct(".")) {
        next();
        ref += "." + expect_ident().text;
      }
      c = {CriterionKind::with_id, id_value(ref)};
    } else {
      unsupported(name);
    }
    expect(")");
    return c;
  }

  Selector matcher() {
    Token name = api_name();
    if (name.text != "allOf") return Selector(SearchType::single, {criterion(name)});
    expect("(");
    std::vector<Criterion> criteria;
    do {
      if (!criteria.empty()) next();
      Token inner = api_name();
      if (inner.text == "allOf") unsupported(inner);
      criteria.push_back(criterion(inner));
    } while (peek_punct(","));
    expect(")");
    if (criteria.size() < 2) fail("allOf() needs at least two matchers");
    return Selector(SearchType::all_of, std::move(criteria));
  }

  Interaction interaction() {
    Token name = api_name();
    if (name.text != "onView") unsupported(name);
    expect("(");
    Selector sel = matcher();
    expect(")");
    return {sel, name.line};
  }

  // `.perform(...)` or `.check(...)` applied to an interaction.
  void chained_call(TestCase& tc, const Interaction& target, std::size_t first_line) {
    expect(".");
    Token method = expect_ident();
    expect("(");
    if (method.text == "perform") {
      bool first = true;
      while (!peek_punct(")")) {
        if (!first) expect(",");
        first = false;
        Token a = api_name();
        expect("(");
        if (a.text == "click") {
          expect(")");
          add_event(tc, {target.selector, Action::click(), {first_line, a.line}});
        } else if (a.text == "typeText" || a.text == "replaceText") {
          std::string value = expect_string();
          expect(")");
          add_event(tc, {target.selector, Action::input(std::move(value)), {first_line, a.line}});
        } else if (a.text == "closeSoftKeyboard") {
          expect(")");
        } else {
          unsupported(a);
        }
      }
      if (first) fail("perform() needs at least one action");
      expect(")");
    } else if (method.text == "check") {
      Token m = api_name();
      if (m.text != "matches") unsupported(m);
      expect("(");
      Token d = api_name();
      if (d.text != "isDisplayed") unsupported(d);
      expect("(");
      expect(")");
      expect(")");
      expect(")");
      tc.assertions.push_back({target.selector, {first_line, method.line}});
    } else {
      unsupported(method);
    }
  }

  void add_event(TestCase& tc, ParsedEvent e) {
    if (!tc.assertions.empty())
      throw ParseError(ParseErrorKind::syntax, e.origin.first_line,
                       "event after an assertion; assertions must follow all events");
    tc.events.push_back(std::move(e));
  }

  void statement(TestCase& tc) {
    std::size_t line = cur().line;
    if (cur().type != Tok::ident) fail("expected statement");
    if (peek_ident("ViewInteraction")) {
      next();
      std::string var = expect_ident().text;
      expect("=");
      Interaction target = interaction();
      bindings_[var] = target;
      while (peek_punct(".")) chained_call(tc, target, line);
      expect(";");
      return;
    }
    if (auto it = bindings_.find(cur().text);
        it != bindings_.end() && toks_[pos_ + 1].type == Tok::punct && toks_[pos_ + 1].text == ".") {
      next();
      Interaction target = it->second;
      while (peek_punct(".")) chained_call(tc, target, line);
      expect(";");
      return;
    }
    std::size_t save = pos_;
    Token name = api_name();
    if (name.text == "closeSoftKeyboard") {
      expect("(");
      expect(")");
      expect(";");
      return;
    }
    if (name.text != "onView") {
      if (peek_punct("(") || peek_punct(".")) unsupported(name);
      fail("unexpected '" + name.text + "'");
    }
    pos_ = save;
    Interaction target = interaction();
    if (!peek_punct(".")) fail("onView() must be followed by perform() or check()");
    while (peek_punct(".")) chained_call(tc, target, line);
    expect(";");
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  std::map<std::string, Interaction> bindings_;
};

std::string escape(std::string_view s) {
  std::string out;
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
  return out;
}

std::string print_criterion(const Criterion& c) {
  switch (c.kind) {
    case CriterionKind::with_text:
      return "withText(\"" + escape(c.value) + "\")";
    case CriterionKind::with_content_description:
      return "withContentDescription(\"" + escape(c.value) + "\")";
    case CriterionKind::with_id:
      return "withId(" + id_token(c.value) + ")";
  }
  return {};
}

std::string print_selector(const Selector& s) {
  if (s.search_type() == SearchType::single) return print_criterion(s.criteria().front());
  std::string out = "allOf(";
  for (std::size_t i = 0; i < s.criteria().size(); ++i) {
    if (i) out += ", ";
    out += print_criterion(s.criteria()[i]);
  }
  return out + ")";
}

}  // namespace

ParseError::ParseError(ParseErrorKind kind, std::size_t line, std::string detail, std::string api)
    : std::runtime_error((kind == ParseErrorKind::syntax ? "SyntaxError" : "UnsupportedApi") +
                         std::string(" at line ") + std::to_string(line) + ": " + detail),
      kind_(kind),
      line_(line),
      detail_(std::move(detail)),
      api_(std::move(api)) {}

std::string id_token(std::string_view value) {
  auto pos = value.find(".R.id.");
  if (pos != std::string_view::npos && pos > 0) return std::string(value);
  return "R.id." + std::string(value);
}

std::string id_value(std::string_view token) {
  if (token.starts_with("R.id.")) return std::string(token.substr(5));
  return std::string(token);
}

TestCase parse_script(std::string_view source) { return Parser(tokenize(source)).run(); }

TestCase load_script(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_script(buf.str());
}

std::string print_script(const TestCase& tc) {
  std::string out = "@Test\npublic void " + tc.name + "() {\n";
  for (const auto& e : tc.events) {
    out += "    onView(" + print_selector(e.selector) + ").perform(";
    out += e.action.kind == ActionKind::click ? "click()"
                                               : "replaceText(\"" + escape(e.action.value) + "\")";
    out += ");\n";
  }
  for (const auto& a : tc.assertions)
    out += "    onView(" + print_selector(a.selector) + ").check(matches(isDisplayed()));\n";
  out += "}\n";
  return out;
}

nlohmann::json event_to_json(const ParsedEvent& event) {
  nlohmann::json args = nlohmann::json::array();
  if (event.action.kind == ActionKind::input)
    args.push_back({{"type", "string"}, {"content", event.action.value}});
  nlohmann::json j = selector_to_json(event.selector);
  j["action"] = {{"name", std::string(to_string(event.action.kind))}, {"args", std::move(args)}};
  j["lines"] = {event.origin.first_line, event.origin.last_line};
  return j;
}

ParsedEvent event_from_json(const nlohmann::json& j) {
  ParsedEvent e;
  e.selector = selector_from_json({{"search_type", j.at("search_type")}, {"criteria", j.at("criteria")}});
  const auto& action = j.at("action");
  auto name = action.at("name").get<std::string>();
  if (name == "click") {
    e.action = Action::click();
  } else if (name == "input") {
    e.action = Action::input(action.at("args").at(0).at("content").get<std::string>());
  } else {
    throw std::invalid_argument("unknown action '" + name + "'");
  }
  if (j.contains("lines")) e.origin = {j["lines"][0].get<std::size_t>(), j["lines"][1].get<std::size_t>()};
  return e;
}

nlohmann::json test_case_to_json(const TestCase& tc) {
  nlohmann::json events = nlohmann::json::array();
  for (const auto& e : tc.events) events.push_back(event_to_json(e));
  nlohmann::json assertions = nlohmann::json::array();
  for (const auto& a : tc.assertions) {
    nlohmann::json j = selector_to_json(a.selector);
    j["check"] = "is_displayed";
    j["lines"] = {a.origin.first_line, a.origin.last_line};
    assertions.push_back(std::move(j));
  }
  return {{"name", tc.name}, {"events", std::move(events)}, {"assertions", std::move(assertions)}};
}

TestCase test_case_from_json(const nlohmann::json& j) {
  TestCase tc;
  tc.name = j.at("name").get<std::string>();
  for (const auto& e : j.at("events")) tc.events.push_back(event_from_json(e));
  for (const auto& a : j.at("assertions")) {
    ParsedAssertion pa;
    pa.selector =
        selector_from_json({{"search_type", a.at("search_type")}, {"criteria", a.at("criteria")}});
    if (a.contains("lines"))
      pa.origin = {a["lines"][0].get<std::size_t>(), a["lines"][1].get<std::size_t>()};
    tc.assertions.push_back(std::move(pa));
  }
  return tc;
}

}  // namespace taskmine
