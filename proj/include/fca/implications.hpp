#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "fca/context.hpp"

namespace fca {

/// premise -> conclusion over one context's attributes. The conclusion may
/// overlap the premise.
struct Implication {
  AttributeSet premise;
  AttributeSet conclusion;

  friend bool operator==(const Implication&, const Implication&) = default;
};

/// Every object having all of the premise also has all of the conclusion,
/// i.e. conclusion is a subset of premise''.
bool implication_holds(const FormalContext& ctx, const Implication& imp);

/// True iff no attribute m of X follows from a nonempty remainder X \ {m}:
/// m is not in (X \ {m})''. Sets of size <= 1 are always independent.
bool attributes_independent(const FormalContext& ctx, const AttributeSet& attributes);

/// Stem base (Duquenne-Guigues basis): one implication P -> P'' per
/// pseudo-intent P, premises in lectic order. Conclusions are full closures.
std::vector<Implication> implication_basis(const FormalContext& ctx);

/// Least superset of X closed under every implication of `basis`.
AttributeSet syntactic_closure(std::span<const Implication> basis, AttributeSet attributes);

/// Parses "P1, P2 -> P6". Labels are comma-separated and trimmed; either side
/// may be empty. Throws ContextError on a missing arrow or an unknown label.
Implication parse_implication(const FormalContext& ctx, std::string_view text);

/// "P1, P2 -> P6", showing only the part of the conclusion outside the premise.
std::string format_implication(const FormalContext& ctx, const Implication& imp);

}  // namespace fca
