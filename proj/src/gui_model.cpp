#include "taskmine/gui_model.hpp"

#include <algorithm>
#include <functional>

namespace taskmine {

namespace {

const std::string kEmpty;

bool ends_with(std::string_view s, std::string_view suffix) {
  return s.size() >= suffix.size() && s.substr(s.size() - suffix.size()) == suffix;
}

template <typename Node, typename Fn>
void walk(Node& node, NodePath& path, Fn&& fn) {
  fn(node, path);
  for (std::size_t i = 0; i < node.children.size(); ++i) {
    NodePath child = path.child(i);
    walk(node.children[i], child, fn);
  }
}

}  // namespace

std::string_view to_string(FeatureKind kind) {
  switch (kind) {
    case FeatureKind::text:
      return "text";
    case FeatureKind::content_desc:
      return "content_desc";
    case FeatureKind::resource_id:
      return "resource_id";
  }
  return "text";
}

FeatureKind feature_kind_from_string(std::string_view name) {
  if (name == "text") return FeatureKind::text;
  if (name == "content_desc") return FeatureKind::content_desc;
  if (name == "resource_id") return FeatureKind::resource_id;
  throw std::invalid_argument("unknown feature kind: " + std::string(name));
}

const std::string& feature_value(const GuiElement& element, FeatureKind kind) {
  const std::optional<std::string>* field = nullptr;
  switch (kind) {
    case FeatureKind::text:
      field = &element.text;
      break;
    case FeatureKind::content_desc:
      field = &element.content_desc;
      break;
    case FeatureKind::resource_id:
      field = &element.resource_id;
      break;
  }
  return field && field->has_value() ? **field : kEmpty;
}

NodePath NodePath::parent() const {
  if (steps_.empty()) throw StructuralError("root has no parent");
  return NodePath({steps_.begin(), steps_.end() - 1});
}

NodePath NodePath::child(std::size_t i) const {
  auto steps = steps_;
  steps.push_back(i);
  return NodePath(std::move(steps));
}

NodePath NodePath::prefix(std::size_t length) const {
  length = std::min(length, steps_.size());
  return NodePath({steps_.begin(), steps_.begin() + static_cast<std::ptrdiff_t>(length)});
}

std::string NodePath::str() const {
  std::string out = "/";
  for (std::size_t i = 0; i < steps_.size(); ++i) {
    if (i) out += '/';
    out += std::to_string(steps_[i]);
  }
  return out;
}

std::size_t common_ancestor_depth(const NodePath& a, const NodePath& b) {
  const auto& x = a.steps();
  const auto& y = b.steps();
  auto mismatch = std::mismatch(x.begin(), x.end(), y.begin(), y.end());
  return static_cast<std::size_t>(mismatch.first - x.begin());
}

std::string_view to_string(CriterionKind kind) {
  switch (kind) {
    case CriterionKind::with_text:
      return "with_text";
    case CriterionKind::with_content_description:
      return "with_content_description";
    case CriterionKind::with_id:
      return "with_id";
  }
  return "with_text";
}

CriterionKind criterion_kind_from_string(std::string_view name) {
  if (name == "with_text" || name == "withText") return CriterionKind::with_text;
  if (name == "with_content_description" || name == "withContentDescription")
    return CriterionKind::with_content_description;
  if (name == "with_id" || name == "withId") return CriterionKind::with_id;
  throw SelectorError("unknown criterion: " + std::string(name));
}

FeatureKind feature_of(CriterionKind kind) {
  switch (kind) {
    case CriterionKind::with_text:
      return FeatureKind::text;
    case CriterionKind::with_content_description:
      return FeatureKind::content_desc;
    case CriterionKind::with_id:
      return FeatureKind::resource_id;
  }
  return FeatureKind::text;
}

CriterionKind criterion_for(FeatureKind kind) {
  switch (kind) {
    case FeatureKind::text:
      return CriterionKind::with_text;
    case FeatureKind::content_desc:
      return CriterionKind::with_content_description;
    case FeatureKind::resource_id:
      return CriterionKind::with_id;
  }
  return CriterionKind::with_text;
}

Selector::Selector(SearchType type, std::vector<Criterion> criteria)
    : type_(type), criteria_(std::move(criteria)) {
  if (type_ == SearchType::single && criteria_.size() != 1)
    throw SelectorError("single selector needs exactly one criterion");
  if (type_ == SearchType::all_of && criteria_.size() < 2)
    throw SelectorError("all_of selector needs at least two criteria");
}

Selector Selector::single(CriterionKind kind, std::string value) {
  return Selector(SearchType::single, {Criterion{kind, std::move(value)}});
}

Selector Selector::of(std::vector<Criterion> criteria) {
  auto type = criteria.size() == 1 ? SearchType::single : SearchType::all_of;
  return Selector(type, std::move(criteria));
}

std::string Selector::str() const {
  std::string out = type_ == SearchType::all_of ? "all_of[" : "single[";
  for (std::size_t i = 0; i < criteria_.size(); ++i) {
    if (i) out += ", ";
    out += to_string(criteria_[i].kind);
    out += "=\"" + criteria_[i].value + "\"";
  }
  return out + "]";
}

bool id_matches(std::string_view resource_id, std::string_view value) {
  if (resource_id.empty() || value.empty()) return false;
  if (resource_id == value) return true;
  if (resource_id.size() > value.size() && ends_with(resource_id, value) &&
      resource_id[resource_id.size() - value.size() - 1] == '/')
    return true;
  constexpr std::string_view kQualified = ".R.id.";
  auto pos = value.find(kQualified);
  if (pos == std::string_view::npos || pos == 0) return false;
  std::string expanded(value.substr(0, pos));
  expanded += ":id/";
  expanded += value.substr(pos + kQualified.size());
  return resource_id == expanded;
}

bool criterion_matches(const GuiElement& element, const Criterion& criterion) {
  switch (criterion.kind) {
    case CriterionKind::with_text:
      return element.text.has_value() && *element.text == criterion.value;
    case CriterionKind::with_content_description:
      return element.content_desc.has_value() && *element.content_desc == criterion.value;
    case CriterionKind::with_id:
      return id_matches(feature_value(element, FeatureKind::resource_id), criterion.value);
  }
  return false;
}

bool selector_matches(const GuiElement& element, const Selector& selector) {
  const auto& criteria = selector.criteria();
  if (criteria.empty()) return false;
  return std::all_of(criteria.begin(), criteria.end(),
                     [&](const Criterion& c) { return criterion_matches(element, c); });
}

bool HierarchyTree::contains(const NodePath& path) const {
  const GuiElement* node = &root_;
  for (auto step : path.steps()) {
    if (step >= node->children.size()) return false;
    node = &node->children[step];
  }
  return true;
}

const GuiElement& HierarchyTree::at(const NodePath& path) const {
  const GuiElement* node = &root_;
  for (auto step : path.steps()) {
    if (step >= node->children.size())
      throw StructuralError("node " + path.str() + " is not in the tree");
    node = &node->children[step];
  }
  return *node;
}

GuiElement& HierarchyTree::at(const NodePath& path) {
  return const_cast<GuiElement&>(std::as_const(*this).at(path));
}

std::vector<NodePath> HierarchyTree::all_paths() const {
  std::vector<NodePath> out;
  NodePath start;
  walk(root_, start, [&](const GuiElement&, const NodePath& p) { out.push_back(p); });
  return out;
}

std::vector<NodePath> HierarchyTree::find_elements(const Selector& selector) const {
  std::vector<NodePath> out;
  NodePath start;
  walk(root_, start, [&](const GuiElement& e, const NodePath& p) {
    if (e.displayed && selector_matches(e, selector)) out.push_back(p);
  });
  return out;
}

std::vector<NodePath> HierarchyTree::find_any(const Selector& selector) const {
  std::vector<NodePath> out;
  NodePath start;
  walk(root_, start, [&](const GuiElement& e, const NodePath& p) {
    if (selector_matches(e, selector)) out.push_back(p);
  });
  return out;
}

StructuralInfo HierarchyTree::structural_info(const NodePath& path) const {
  if (!contains(path)) throw StructuralError("node " + path.str() + " is not in the tree");
  StructuralInfo info;
  info.depth = path.depth();
  info.index = path.index();
  for (std::size_t d = 0; d < path.depth(); ++d) info.ancestors.push_back(path.prefix(d));
  return info;
}

std::size_t HierarchyTree::size() const {
  std::size_t n = 0;
  NodePath start;
  walk(root_, start, [&](const GuiElement&, const NodePath&) { ++n; });
  return n;
}

}  // namespace taskmine
