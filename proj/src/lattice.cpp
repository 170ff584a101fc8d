#include "fca/lattice.hpp"

#include <algorithm>

#include "fca/error.hpp"
#include "fca/next_closure.hpp"

namespace fca {

namespace {

struct ConceptTag {};
using ConceptSet = IndexSet<ConceptTag>;

void check_shape(const FormalContext& ctx, const FormalConcept& c) {
  if (c.extent.universe() != ctx.object_count() || c.intent.universe() != ctx.attribute_count()) {
    throw ContextError("concept does not belong to this context");
  }
}

}  // namespace

std::vector<FormalConcept> enumerate_concepts(const FormalContext& ctx) {
  std::vector<FormalConcept> out;
  const auto close = [&ctx](const AttributeSet& s) { return ctx.closure(s); };

  std::optional<AttributeSet> intent = ctx.closure(ctx.no_attributes());
  while (intent) {
    ObjectSet extent = ctx.common_objects(*intent);
    out.push_back({std::move(extent), *intent});
    intent = next_closure(*intent, close);
  }
  return out;
}

bool concept_leq(const FormalConcept& a, const FormalConcept& b) {
  if (a.extent.universe() != b.extent.universe() || a.intent.universe() != b.intent.universe()) {
    throw ContextError("concepts come from different contexts");
  }
  return a.extent.is_subset_of(b.extent);
}

FormalConcept meet(const FormalContext& ctx, const FormalConcept& a, const FormalConcept& b) {
  check_shape(ctx, a);
  check_shape(ctx, b);
  ObjectSet extent = a.extent & b.extent;
  AttributeSet intent = ctx.common_attributes(extent);
  return {std::move(extent), std::move(intent)};
}

FormalConcept join(const FormalContext& ctx, const FormalConcept& a, const FormalConcept& b) {
  check_shape(ctx, a);
  check_shape(ctx, b);
  AttributeSet intent = a.intent & b.intent;
  ObjectSet extent = ctx.common_objects(intent);
  return {std::move(extent), std::move(intent)};
}

FormalConcept meet(const FormalContext& ctx, std::span<const FormalConcept> concepts) {
  ObjectSet extent = ctx.all_objects();
  for (const auto& c : concepts) {
    check_shape(ctx, c);
    extent &= c.extent;
  }
  AttributeSet intent = ctx.common_attributes(extent);
  // The empty family meets to the top concept, whose extent is G'' = G.
  return {ctx.common_objects(intent), std::move(intent)};
}

FormalConcept join(const FormalContext& ctx, std::span<const FormalConcept> concepts) {
  AttributeSet intent = ctx.all_attributes();
  for (const auto& c : concepts) {
    check_shape(ctx, c);
    intent &= c.intent;
  }
  ObjectSet extent = ctx.common_objects(intent);
  AttributeSet closed = ctx.common_attributes(extent);
  return {std::move(extent), std::move(closed)};
}

bool ConceptLattice::leq(std::size_t a, std::size_t b) const {
  return concepts_.at(a).extent.is_subset_of(concepts_.at(b).extent);
}

std::optional<std::size_t> ConceptLattice::find(const AttributeSet& intent) const {
  if (intent.universe() != context_.attribute_count()) return std::nullopt;
  const auto it = std::lower_bound(
      concepts_.begin(), concepts_.end(), intent,
      [](const FormalConcept& c, const AttributeSet& key) { return lectic_less(c.intent, key); });
  if (it == concepts_.end() || it->intent != intent) return std::nullopt;
  return static_cast<std::size_t>(it - concepts_.begin());
}

std::size_t ConceptLattice::object_concept(std::size_t g) const {
  return *find(context_.row(g));
}

std::size_t ConceptLattice::attribute_concept(std::size_t m) const {
  AttributeSet single = context_.no_attributes();
  single.insert(m);
  return *find(context_.closure(single));
}

ConceptLattice build_lattice(const FormalContext& ctx) {
  ConceptLattice lat;
  lat.context_ = ctx;
  lat.concepts_ = enumerate_concepts(ctx);
  const std::size_t n = lat.concepts_.size();

  std::vector<ConceptSet> above(n, ConceptSet(n));
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      if (a != b && lat.concepts_[a].extent.is_subset_of(lat.concepts_[b].extent)) above[a].insert(b);
    }
  }

  lat.upper_.assign(n, {});
  lat.lower_.assign(n, {});
  for (std::size_t a = 0; a < n; ++a) {
    // b covers a iff b > a and no c with a < c < b.
    ConceptSet direct = above[a];
    above[a].for_each([&](std::size_t c) { direct -= above[c]; });
    direct.for_each([&](std::size_t b) {
      lat.covers_.emplace_back(a, b);
      lat.upper_[a].push_back(b);
      lat.lower_[b].push_back(a);
    });
  }

  for (std::size_t i = 0; i < n; ++i) {
    if (lat.concepts_[i].extent.is_full()) lat.top_ = i;
    if (lat.concepts_[i].intent.is_full()) lat.bottom_ = i;
  }
  return lat;
}

}  // namespace fca
