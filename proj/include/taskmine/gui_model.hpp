#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace taskmine {

/// One node of a screen's GUI hierarchy.
///
/// Textual features (text, content description, resource id) are optional;
/// an absent feature and an empty string are treated the same by every query.
struct GuiElement {
  std::string class_name;
  std::optional<std::string> text;
  std::optional<std::string> content_desc;
  std::optional<std::string> resource_id;
  bool clickable = false;
  bool editable = false;
  bool displayed = true;
  std::vector<GuiElement> children;

  friend bool operator==(const GuiElement&, const GuiElement&) = default;
};

enum class FeatureKind { text, content_desc, resource_id };

inline constexpr FeatureKind kFeaturePriority[] = {FeatureKind::text, FeatureKind::content_desc,
                                                   FeatureKind::resource_id};

std::string_view to_string(FeatureKind kind);
FeatureKind feature_kind_from_string(std::string_view name);

/// Value of a textual feature, or empty when the feature is absent.
const std::string& feature_value(const GuiElement& element, FeatureKind kind);

/// Sequence of child indices leading from the root to a node.
class NodePath {
 public:
  NodePath() = default;
  explicit NodePath(std::vector<std::size_t> steps) : steps_(std::move(steps)) {}

  std::size_t depth() const { return steps_.size(); }
  bool is_root() const { return steps_.empty(); }
  /// Position among siblings; 0 for the root.
  std::size_t index() const { return steps_.empty() ? 0 : steps_.back(); }
  NodePath parent() const;
  NodePath child(std::size_t i) const;
  /// Prefix of this path with the given length.
  NodePath prefix(std::size_t length) const;
  const std::vector<std::size_t>& steps() const { return steps_; }
  std::string str() const;

  friend bool operator==(const NodePath&, const NodePath&) = default;
  friend auto operator<=>(const NodePath&, const NodePath&) = default;

 private:
  std::vector<std::size_t> steps_;
};

/// Length of the longest common prefix, i.e. the depth of the lowest common ancestor.
std::size_t common_ancestor_depth(const NodePath& a, const NodePath& b);

class StructuralError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class CriterionKind { with_text, with_content_description, with_id };

std::string_view to_string(CriterionKind kind);
CriterionKind criterion_kind_from_string(std::string_view name);
FeatureKind feature_of(CriterionKind kind);
CriterionKind criterion_for(FeatureKind kind);

struct Criterion {
  CriterionKind kind = CriterionKind::with_text;
  std::string value;

  friend bool operator==(const Criterion&, const Criterion&) = default;
};

enum class SearchType { single, all_of };

class SelectorError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Element locator: one criterion, or a conjunction of two or more.
class Selector {
 public:
  Selector() = default;
  /// Throws SelectorError when the arity does not fit the search type.
  Selector(SearchType type, std::vector<Criterion> criteria);

  static Selector single(CriterionKind kind, std::string value);
  /// single when one criterion is given, all_of otherwise.
  static Selector of(std::vector<Criterion> criteria);

  SearchType search_type() const { return type_; }
  const std::vector<Criterion>& criteria() const { return criteria_; }
  std::string str() const;

  friend bool operator==(const Selector&, const Selector&) = default;

 private:
  SearchType type_ = SearchType::single;
  std::vector<Criterion> criteria_;
};

/// Resource id match: exact, "/" + value suffix, or a qualified
/// "<pkg>.R.id.<name>" token against "<pkg>:id/<name>".
bool id_matches(std::string_view resource_id, std::string_view value);
bool criterion_matches(const GuiElement& element, const Criterion& criterion);
/// Attribute test only; visibility is not considered.
bool selector_matches(const GuiElement& element, const Selector& selector);

struct StructuralInfo {
  std::size_t depth = 0;
  std::size_t index = 0;
  std::vector<NodePath> ancestors;  // root first
};

class HierarchyTree {
 public:
  HierarchyTree() = default;
  explicit HierarchyTree(GuiElement root) : root_(std::move(root)) {}

  const GuiElement& root() const { return root_; }
  GuiElement& mutable_root() { return root_; }

  bool contains(const NodePath& path) const;
  /// Throws StructuralError for a path that leaves the tree.
  const GuiElement& at(const NodePath& path) const;
  GuiElement& at(const NodePath& path);

  /// All node paths in document (pre-)order.
  std::vector<NodePath> all_paths() const;

  /// Displayed nodes matching the selector, in document order.
  std::vector<NodePath> find_elements(const Selector& selector) const;
  /// Same as find_elements but ignores visibility.
  std::vector<NodePath> find_any(const Selector& selector) const;

  StructuralInfo structural_info(const NodePath& path) const;

  std::size_t size() const;

  friend bool operator==(const HierarchyTree&, const HierarchyTree&) = default;

 private:
  GuiElement root_;
};

}  // namespace taskmine
