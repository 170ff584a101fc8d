#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "fca/context.hpp"

namespace fca {

/// A pair (extent, intent) with extent' = intent and intent' = extent.
struct FormalConcept {
  ObjectSet extent;
  AttributeSet intent;

  friend bool operator==(const FormalConcept&, const FormalConcept&) = default;
};

/// All concepts of `ctx`, intents in strictly increasing lectic order
/// (attribute id 0 most significant). A context with no objects or no
/// attributes has exactly one concept.
std::vector<FormalConcept> enumerate_concepts(const FormalContext& ctx);

/// a <= b iff extent(a) is a subset of extent(b). Throws ContextError when the
/// two concepts come from contexts of different shape.
bool concept_leq(const FormalConcept& a, const FormalConcept& b);

/// Greatest common subconcept: (A1 & A2, (A1 & A2)').
FormalConcept meet(const FormalContext& ctx, const FormalConcept& a, const FormalConcept& b);
/// Least common superconcept: ((B1 & B2)', B1 & B2).
FormalConcept join(const FormalContext& ctx, const FormalConcept& a, const FormalConcept& b);

/// Infimum of an arbitrary family; the empty family yields the top concept.
FormalConcept meet(const FormalContext& ctx, std::span<const FormalConcept> concepts);
/// Supremum of an arbitrary family; the empty family yields the bottom concept.
FormalConcept join(const FormalContext& ctx, std::span<const FormalConcept> concepts);

/// (lower concept index, upper concept index)
using Cover = std::pair<std::size_t, std::size_t>;

class ConceptLattice {
 public:
  const FormalContext& context() const noexcept { return context_; }
  const std::vector<FormalConcept>& concepts() const noexcept { return concepts_; }
  const FormalConcept& concept_at(std::size_t i) const { return concepts_.at(i); }
  std::size_t size() const noexcept { return concepts_.size(); }

  /// Hasse edges, sorted by (lower, upper).
  const std::vector<Cover>& covers() const noexcept { return covers_; }
  const std::vector<std::size_t>& upper_covers(std::size_t i) const { return upper_.at(i); }
  const std::vector<std::size_t>& lower_covers(std::size_t i) const { return lower_.at(i); }

  std::size_t top_index() const noexcept { return top_; }
  std::size_t bottom_index() const noexcept { return bottom_; }

  bool leq(std::size_t a, std::size_t b) const;

  /// Index of the concept with this intent, if the intent is closed.
  std::optional<std::size_t> find(const AttributeSet& intent) const;

  /// ({g}'', {g}') -- the least concept whose extent contains g.
  std::size_t object_concept(std::size_t g) const;
  /// ({m}', {m}'') -- the greatest concept whose intent contains m.
  std::size_t attribute_concept(std::size_t m) const;

 private:
  friend ConceptLattice build_lattice(const FormalContext& ctx);

  FormalContext context_;
  std::vector<FormalConcept> concepts_;
  std::vector<Cover> covers_;
  std::vector<std::vector<std::size_t>> upper_;
  std::vector<std::vector<std::size_t>> lower_;
  std::size_t top_ = 0;
  std::size_t bottom_ = 0;
};

/// Concepts in lectic order of intents plus the covering relation, obtained as
/// the transitive reduction of the full order.
ConceptLattice build_lattice(const FormalContext& ctx);

}  // namespace fca
