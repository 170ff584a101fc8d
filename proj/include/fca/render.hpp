#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "fca/lattice.hpp"

namespace fca {

enum class LabelMode { full, reduced };
enum class RankDir { top_bottom, bottom_top };

struct DotOptions {
  LabelMode labels = LabelMode::reduced;
  RankDir rankdir = RankDir::top_bottom;
};

/// Per-concept ids for reduced labeling: each attribute sits on its attribute
/// concept, each object on its object concept.
struct ReducedLabels {
  std::vector<std::vector<std::size_t>> attributes;
  std::vector<std::vector<std::size_t>> objects;
};

ReducedLabels reduced_labels(const ConceptLattice& lat);

/// Hasse diagram in Graphviz DOT. Node `c<i>` is concept i; with top_bottom
/// edges run upper -> lower, with bottom_top lower -> upper, so the top
/// concept is drawn at the top either way. Throws ContextError when `ctx` is
/// not the context the lattice was built from.
std::string lattice_to_dot(const ConceptLattice& lat, const FormalContext& ctx, const DotOptions& options = {});

/// One tab-separated line per concept in lattice order: index, extent,
/// intent, extent size; preceded by a header line.
std::string pattern_report(const ConceptLattice& lat, const FormalContext& ctx);

}  // namespace fca
