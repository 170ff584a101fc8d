#include "fca/context.hpp"

#include <unordered_set>

#include "fca/error.hpp"

namespace fca {

namespace {

void reject_duplicates(const std::vector<std::string>& names, const char* kind) {
  std::unordered_set<std::string_view> seen;
  for (const auto& name : names) {
    if (!seen.insert(name).second) {
      throw ContextError(std::string("duplicate ") + kind + " name '" + name + "'");
    }
  }
}

std::optional<std::size_t> find_name(const std::vector<std::string>& names, std::string_view name) {
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (names[i] == name) return i;
  }
  return std::nullopt;
}

template <typename Set>
std::string format_set(const std::vector<std::string>& names, const Set& s) {
  const auto ids = s.elements();
  return "{" + join_labels(names, ids) + "}";
}

}  // namespace

FormalContext FormalContext::build(std::vector<std::string> object_names,
                                   std::vector<std::string> attribute_names,
                                   std::span<const Incidence> incidences) {
  reject_duplicates(object_names, "object");
  reject_duplicates(attribute_names, "attribute");

  FormalContext ctx;
  ctx.object_names_ = std::move(object_names);
  ctx.attribute_names_ = std::move(attribute_names);
  ctx.rows_.assign(ctx.object_count(), AttributeSet(ctx.attribute_count()));
  ctx.columns_.assign(ctx.attribute_count(), ObjectSet(ctx.object_count()));
  for (const auto& [g, m] : incidences) {
    if (g >= ctx.object_count() || m >= ctx.attribute_count()) {
      throw ContextError("incidence (" + std::to_string(g) + ", " + std::to_string(m) +
                         ") out of range for a " + std::to_string(ctx.object_count()) + "x" +
                         std::to_string(ctx.attribute_count()) + " context");
    }
    ctx.rows_[g].insert(m);
    ctx.columns_[m].insert(g);
  }
  return ctx;
}

std::optional<std::size_t> FormalContext::find_object(std::string_view name) const {
  return find_name(object_names_, name);
}

std::optional<std::size_t> FormalContext::find_attribute(std::string_view name) const {
  return find_name(attribute_names_, name);
}

void FormalContext::check(const ObjectSet& s) const {
  if (s.universe() != object_count()) throw ContextError("object set does not belong to this context");
}

void FormalContext::check(const AttributeSet& s) const {
  if (s.universe() != attribute_count()) {
    throw ContextError("attribute set does not belong to this context");
  }
}

AttributeSet FormalContext::common_attributes(const ObjectSet& objects) const {
  check(objects);
  AttributeSet out = all_attributes();
  objects.for_each([&](std::size_t g) { out &= rows_[g]; });
  return out;
}

ObjectSet FormalContext::common_objects(const AttributeSet& attributes) const {
  check(attributes);
  ObjectSet out = all_objects();
  attributes.for_each([&](std::size_t m) { out &= columns_[m]; });
  return out;
}

AttributeSet FormalContext::closure(const AttributeSet& attributes) const {
  return common_attributes(common_objects(attributes));
}

ObjectSet FormalContext::closure(const ObjectSet& objects) const {
  return common_objects(common_attributes(objects));
}

std::size_t FormalContext::incidence_count() const {
  std::size_t n = 0;
  for (const auto& row : rows_) n += row.size();
  return n;
}

std::vector<Incidence> FormalContext::incidences() const {
  std::vector<Incidence> out;
  out.reserve(incidence_count());
  for (std::size_t g = 0; g < rows_.size(); ++g) {
    rows_[g].for_each([&](std::size_t m) { out.emplace_back(g, m); });
  }
  return out;
}

ObjectSet object_set(const FormalContext& ctx, std::span<const std::string> labels) {
  ObjectSet out = ctx.no_objects();
  for (const auto& label : labels) {
    const auto id = ctx.find_object(label);
    if (!id) throw ContextError("unknown object '" + label + "'");
    out.insert(*id);
  }
  return out;
}

AttributeSet attribute_set(const FormalContext& ctx, std::span<const std::string> labels) {
  AttributeSet out = ctx.no_attributes();
  for (const auto& label : labels) {
    const auto id = ctx.find_attribute(label);
    if (!id) throw ContextError("unknown attribute '" + label + "'");
    out.insert(*id);
  }
  return out;
}

std::string format_objects(const FormalContext& ctx, const ObjectSet& objects) {
  return format_set(ctx.object_names(), objects);
}

std::string format_attributes(const FormalContext& ctx, const AttributeSet& attributes) {
  return format_set(ctx.attribute_names(), attributes);
}

std::string join_labels(const std::vector<std::string>& names, std::span<const std::size_t> ids,
                        std::string_view separator) {
  std::string out;
  for (std::size_t i = 0; i < ids.size(); ++i) {
    if (i) out += separator;
    out += names.at(ids[i]);
  }
  return out;
}

}  // namespace fca
