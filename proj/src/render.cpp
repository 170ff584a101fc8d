#include "fca/render.hpp"

#include "fca/error.hpp"

namespace fca {

namespace {

void check_context(const ConceptLattice& lat, const FormalContext& ctx) {
  if (!(lat.context() == ctx)) throw ContextError("lattice was not built from this context");
}

std::string dot_escape(std::string_view s) {
  std::string out;
  out.reserve(s.size());
  for (char c : s) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\r': break;
      default: out += c;
    }
  }
  return out;
}

std::string escaped_join(const std::vector<std::string>& names, const std::vector<std::size_t>& ids) {
  std::string out;
  for (std::size_t i = 0; i < ids.size(); ++i) {
    if (i) out += ", ";
    out += dot_escape(names[ids[i]]);
  }
  return out;
}

std::string node_label(const ConceptLattice& lat, const ReducedLabels* reduced, std::size_t i) {
  const FormalContext& ctx = lat.context();
  if (!reduced) {
    const FormalConcept& c = lat.concept_at(i);
    return "{" + escaped_join(ctx.object_names(), c.extent.elements()) + "}\\n{" +
           escaped_join(ctx.attribute_names(), c.intent.elements()) + "}";
  }
  // Attribute labels above object labels, as in the usual diagram reading.
  std::string attrs = escaped_join(ctx.attribute_names(), reduced->attributes[i]);
  std::string objs = escaped_join(ctx.object_names(), reduced->objects[i]);
  if (attrs.empty()) return objs;
  if (objs.empty()) return attrs;
  return attrs + "\\n" + objs;
}

}  // namespace

ReducedLabels reduced_labels(const ConceptLattice& lat) {
  ReducedLabels out;
  out.attributes.assign(lat.size(), {});
  out.objects.assign(lat.size(), {});
  const FormalContext& ctx = lat.context();
  for (std::size_t m = 0; m < ctx.attribute_count(); ++m) out.attributes[lat.attribute_concept(m)].push_back(m);
  for (std::size_t g = 0; g < ctx.object_count(); ++g) out.objects[lat.object_concept(g)].push_back(g);
  return out;
}

std::string lattice_to_dot(const ConceptLattice& lat, const FormalContext& ctx, const DotOptions& options) {
  check_context(lat, ctx);
  const bool down = options.rankdir == RankDir::top_bottom;
  ReducedLabels reduced;
  if (options.labels == LabelMode::reduced) reduced = reduced_labels(lat);

  std::string out = "digraph lattice {\n";
  out += down ? "  rankdir=TB;\n" : "  rankdir=BT;\n";
  out += "  node [shape=box];\n";
  for (std::size_t i = 0; i < lat.size(); ++i) {
    out += "  c" + std::to_string(i) + " [label=\"" +
           node_label(lat, options.labels == LabelMode::reduced ? &reduced : nullptr, i) + "\"];\n";
  }
  for (const auto& [lower, upper] : lat.covers()) {
    const auto [from, to] = down ? std::pair{upper, lower} : std::pair{lower, upper};
    out += "  c" + std::to_string(from) + " -> c" + std::to_string(to) + ";\n";
  }
  out += "}\n";
  return out;
}

std::string pattern_report(const ConceptLattice& lat, const FormalContext& ctx) {
  check_context(lat, ctx);
  std::string out = "concept\textent\tintent\tsize\n";
  for (std::size_t i = 0; i < lat.size(); ++i) {
    const FormalConcept& c = lat.concept_at(i);
    out += std::to_string(i) + "\t" + format_objects(ctx, c.extent) + "\t" + format_attributes(ctx, c.intent) +
           "\t" + std::to_string(c.extent.size()) + "\n";
  }
  return out;
}

}  // namespace fca
