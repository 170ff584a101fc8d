#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "fca/index_set.hpp"

namespace fca {

using Incidence = std::pair<std::size_t, std::size_t>;  // (object id, attribute id)

/// A formal context (G, M, I). Objects and attributes are identified by their
/// position in the name lists; the relation is stored both row-wise and
/// column-wise. Immutable once built.
class FormalContext {
 public:
  /// The 0x0 context.
  FormalContext() = default;

  /// Throws ContextError on duplicate names or out-of-range incidences.
  /// Repeated pairs are accepted and mark the same cell.
  static FormalContext build(std::vector<std::string> object_names,
                             std::vector<std::string> attribute_names,
                             std::span<const Incidence> incidences);

  std::size_t object_count() const noexcept { return object_names_.size(); }
  std::size_t attribute_count() const noexcept { return attribute_names_.size(); }

  const std::vector<std::string>& object_names() const noexcept { return object_names_; }
  const std::vector<std::string>& attribute_names() const noexcept { return attribute_names_; }
  const std::string& object_name(std::size_t g) const { return object_names_.at(g); }
  const std::string& attribute_name(std::size_t m) const { return attribute_names_.at(m); }

  std::optional<std::size_t> find_object(std::string_view name) const;
  std::optional<std::size_t> find_attribute(std::string_view name) const;

  bool incident(std::size_t g, std::size_t m) const { return rows_.at(g).contains(m); }

  /// Attributes of object g.
  const AttributeSet& row(std::size_t g) const { return rows_.at(g); }
  /// Objects having attribute m.
  const ObjectSet& column(std::size_t m) const { return columns_.at(m); }

  ObjectSet no_objects() const { return ObjectSet(object_count()); }
  ObjectSet all_objects() const { return ObjectSet::full(object_count()); }
  AttributeSet no_attributes() const { return AttributeSet(attribute_count()); }
  AttributeSet all_attributes() const { return AttributeSet::full(attribute_count()); }

  /// A' : the attributes shared by every object of A. The empty set maps to M.
  AttributeSet common_attributes(const ObjectSet& objects) const;
  /// B' : the objects having every attribute of B. The empty set maps to G.
  ObjectSet common_objects(const AttributeSet& attributes) const;

  /// B'' (the closure system whose closed sets are the concept intents).
  AttributeSet closure(const AttributeSet& attributes) const;
  /// A''
  ObjectSet closure(const ObjectSet& objects) const;

  std::size_t incidence_count() const;
  /// All pairs, sorted by (object, attribute).
  std::vector<Incidence> incidences() const;

  friend bool operator==(const FormalContext& a, const FormalContext& b) {
    return a.object_names_ == b.object_names_ && a.attribute_names_ == b.attribute_names_ &&
           a.rows_ == b.rows_;
  }

 private:
  void check(const ObjectSet& s) const;
  void check(const AttributeSet& s) const;

  std::vector<std::string> object_names_;
  std::vector<std::string> attribute_names_;
  std::vector<AttributeSet> rows_;
  std::vector<ObjectSet> columns_;
};

/// Resolves labels to ids; throws ContextError on an unknown label.
ObjectSet object_set(const FormalContext& ctx, std::span<const std::string> labels);
AttributeSet attribute_set(const FormalContext& ctx, std::span<const std::string> labels);

/// "{A, D}" style rendering of a set by its labels, in id order.
std::string format_objects(const FormalContext& ctx, const ObjectSet& objects);
std::string format_attributes(const FormalContext& ctx, const AttributeSet& attributes);

/// Comma-joined labels without braces.
std::string join_labels(const std::vector<std::string>& names, std::span<const std::size_t> ids,
                        std::string_view separator = ", ");

}  // namespace fca
