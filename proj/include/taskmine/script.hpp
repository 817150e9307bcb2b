#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "taskmine/app_model.hpp"
#include "taskmine/gui_model.hpp"

namespace taskmine {

struct SourceSpan {
  std::size_t first_line = 0;
  std::size_t last_line = 0;
};

// Equality on the notation types compares content only; `origin` is
// positional metadata and does not take part.

struct ParsedEvent {
  Selector selector;
  Action action;
  SourceSpan origin;

  friend bool operator==(const ParsedEvent& a, const ParsedEvent& b) {
    return a.selector == b.selector && a.action == b.action;
  }
};

/// check(matches(isDisplayed())) on the selected element.
struct ParsedAssertion {
  Selector selector;
  SourceSpan origin;

  friend bool operator==(const ParsedAssertion& a, const ParsedAssertion& b) {
    return a.selector == b.selector;
  }
};

struct TestCase {
  std::string name;
  std::vector<ParsedEvent> events;
  std::vector<ParsedAssertion> assertions;

  /// A test without assertions accepts every outcome.
  bool lacks_assertions() const { return assertions.empty(); }

  friend bool operator==(const TestCase&, const TestCase&) = default;
};

enum class ParseErrorKind { syntax, unsupported_api };

class ParseError : public std::runtime_error {
 public:
  ParseError(ParseErrorKind kind, std::size_t line, std::string detail, std::string api = {});

  ParseErrorKind kind() const { return kind_; }
  std::size_t line() const { return line_; }
  /// Offending API name for unsupported_api errors.
  const std::string& api() const { return api_; }
  const std::string& detail() const { return detail_; }

 private:
  ParseErrorKind kind_;
  std::size_t line_;
  std::string detail_;
  std::string api_;
};

/// Parses one Espresso-dialect test method into event/assertion notation.
TestCase parse_script(std::string_view source);
TestCase load_script(const std::string& path);

/// Canonical source for a test case; parse_script(print_script(tc)) == tc.
std::string print_script(const TestCase& tc);

/// Source token for a withId() argument and its inverse.
std::string id_token(std::string_view value);
std::string id_value(std::string_view token);

nlohmann::json event_to_json(const ParsedEvent& event);
ParsedEvent event_from_json(const nlohmann::json& j);
nlohmann::json test_case_to_json(const TestCase& tc);
TestCase test_case_from_json(const nlohmann::json& j);

}  // namespace taskmine
