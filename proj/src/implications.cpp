#include "fca/implications.hpp"

#include "fca/error.hpp"
#include "fca/next_closure.hpp"

namespace fca {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

AttributeSet parse_side(const FormalContext& ctx, std::string_view side) {
  AttributeSet out = ctx.no_attributes();
  side = trim(side);
  if (side.empty()) return out;
  while (true) {
    const auto comma = side.find(',');
    const std::string label(trim(side.substr(0, comma)));
    if (label.empty()) throw ContextError("empty attribute label in implication");
    const auto id = ctx.find_attribute(label);
    if (!id) throw ContextError("unknown attribute '" + label + "'");
    out.insert(*id);
    if (comma == std::string_view::npos) break;
    side.remove_prefix(comma + 1);
  }
  return out;
}

// Closure under implications whose premise is a proper subset of the set:
// its closed sets are exactly the intents and pseudo-intents.
AttributeSet pseudo_closure(std::span<const Implication> basis, AttributeSet x) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (const auto& imp : basis) {
      if (imp.premise.is_proper_subset_of(x) && !imp.conclusion.is_subset_of(x)) {
        x |= imp.conclusion;
        changed = true;
      }
    }
  }
  return x;
}

}  // namespace

bool implication_holds(const FormalContext& ctx, const Implication& imp) {
  return imp.conclusion.is_subset_of(ctx.closure(imp.premise));
}

bool attributes_independent(const FormalContext& ctx, const AttributeSet& attributes) {
  if (attributes.size() <= 1) {
    // Validate membership in this context even when there is nothing to test.
    (void)ctx.closure(attributes);
    return true;
  }
  bool independent = true;
  attributes.for_each([&](std::size_t m) {
    if (!independent) return;
    AttributeSet rest = attributes;
    rest.erase(m);
    if (ctx.closure(rest).contains(m)) independent = false;
  });
  return independent;
}

std::vector<Implication> implication_basis(const FormalContext& ctx) {
  std::vector<Implication> basis;
  const auto close = [&basis](const AttributeSet& s) { return pseudo_closure(basis, s); };

  std::optional<AttributeSet> current = ctx.no_attributes();
  while (current) {
    AttributeSet closed = ctx.closure(*current);
    if (closed != *current) basis.push_back({*current, std::move(closed)});
    if (current->is_full()) break;
    current = next_closure(*current, close);
  }
  return basis;
}

AttributeSet syntactic_closure(std::span<const Implication> basis, AttributeSet attributes) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (const auto& imp : basis) {
      if (imp.premise.is_subset_of(attributes) && !imp.conclusion.is_subset_of(attributes)) {
        attributes |= imp.conclusion;
        changed = true;
      }
    }
  }
  return attributes;
}

Implication parse_implication(const FormalContext& ctx, std::string_view text) {
  const auto arrow = text.find("->");
  if (arrow == std::string_view::npos) {
    throw ContextError("implication '" + std::string(text) + "' has no '->'");
  }
  if (text.find("->", arrow + 2) != std::string_view::npos) {
    throw ContextError("implication '" + std::string(text) + "' has more than one '->'");
  }
  return {parse_side(ctx, text.substr(0, arrow)), parse_side(ctx, text.substr(arrow + 2))};
}

std::string format_implication(const FormalContext& ctx, const Implication& imp) {
  const auto premise = imp.premise.elements();
  const auto added = (imp.conclusion - imp.premise).elements();
  std::string out = join_labels(ctx.attribute_names(), premise);
  if (!premise.empty()) out += ' ';
  out += "->";
  if (!added.empty()) out += ' ' + join_labels(ctx.attribute_names(), added);
  return out;
}

}  // namespace fca
