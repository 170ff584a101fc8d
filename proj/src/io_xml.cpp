#include <expat.h>

#include <algorithm>
#include <charconv>
#include <memory>
#include <optional>
#include <set>

#include "fca/error.hpp"
#include "fca/io_formats.hpp"

namespace fca {

namespace {

struct Element {
  std::string name;
  std::vector<std::pair<std::string, std::string>> attributes;
  std::string text;
  std::vector<Element> children;
  unsigned long line = 0;

  const std::string* attribute(std::string_view key) const {
    for (const auto& [k, v] : attributes) {
      if (k == key) return &v;
    }
    return nullptr;
  }
};

// Builds the element tree with expat; the tree is small (one node per
// object, attribute and incidence).
class TreeBuilder {
 public:
  TreeBuilder() : parser_(XML_ParserCreate(nullptr), &XML_ParserFree) {
    if (!parser_) throw std::bad_alloc();
    XML_SetUserData(parser_.get(), this);
    XML_SetElementHandler(parser_.get(), &TreeBuilder::on_start, &TreeBuilder::on_end);
    XML_SetCharacterDataHandler(parser_.get(), &TreeBuilder::on_text);
  }

  Element parse(std::string_view bytes) {
    if (XML_Parse(parser_.get(), bytes.data(), static_cast<int>(bytes.size()), XML_TRUE) ==
        XML_STATUS_ERROR) {
      throw FormatError("XML line " + std::to_string(XML_GetCurrentLineNumber(parser_.get())) + ": " +
                        XML_ErrorString(XML_GetErrorCode(parser_.get())));
    }
    if (!root_) throw FormatError("XML: no root element");
    return std::move(*root_);
  }

 private:
  static void on_start(void* self_ptr, const XML_Char* name, const XML_Char** attrs) {
    auto* self = static_cast<TreeBuilder*>(self_ptr);
    Element e;
    e.name = name;
    e.line = XML_GetCurrentLineNumber(self->parser_.get());
    for (std::size_t i = 0; attrs[i]; i += 2) e.attributes.emplace_back(attrs[i], attrs[i + 1]);
    if (self->open_.empty()) {
      self->root_ = std::move(e);
      self->open_.push_back(&*self->root_);
    } else {
      auto& siblings = self->open_.back()->children;
      siblings.push_back(std::move(e));
      self->open_.push_back(&siblings.back());
    }
  }

  static void on_end(void* self_ptr, const XML_Char*) { static_cast<TreeBuilder*>(self_ptr)->open_.pop_back(); }

  static void on_text(void* self_ptr, const XML_Char* s, int len) {
    auto* self = static_cast<TreeBuilder*>(self_ptr);
    if (!self->open_.empty()) self->open_.back()->text.append(s, static_cast<std::size_t>(len));
  }

  std::unique_ptr<XML_ParserStruct, decltype(&XML_ParserFree)> parser_;
  std::optional<Element> root_;
  // Parent pointers stay valid: a parent's children vector only grows while
  // that child is the last one open.
  std::vector<Element*> open_;
};

[[noreturn]] void fail(const Element& e, const std::string& what) {
  throw FormatError("XML line " + std::to_string(e.line) + ": <" + e.name + "> " + what);
}

bool blank(std::string_view s) { return s.find_first_not_of(" \t\r\n") == std::string_view::npos; }

void expect_attributes(const Element& e, std::initializer_list<std::string_view> allowed) {
  for (const auto& [k, v] : e.attributes) {
    if (std::find(allowed.begin(), allowed.end(), k) == allowed.end()) fail(e, "unexpected attribute '" + k + "'");
  }
  for (auto key : allowed) {
    if (!e.attribute(key)) fail(e, "missing attribute '" + std::string(key) + "'");
  }
}

std::size_t parse_count(const Element& e, std::string_view key) {
  const std::string& value = *e.attribute(key);
  std::size_t out = 0;
  const auto* end = value.data() + value.size();
  const auto [ptr, ec] = std::from_chars(value.data(), end, out);
  if (value.empty() || ec != std::errc() || ptr != end) {
    fail(e, "attribute " + std::string(key) + "=\"" + value + "\" is not a non-negative integer");
  }
  return out;
}

const Element& single_child(const Element& root, std::string_view name) {
  const Element* found = nullptr;
  for (const auto& c : root.children) {
    if (c.name == name) {
      if (found) fail(c, "appears more than once");
      found = &c;
    }
  }
  if (!found) fail(root, "has no <" + std::string(name) + "> child");
  return *found;
}

// OBJS/ATTS: one labelled child per id, ids exactly 0..n-1.
std::vector<std::string> read_labels(const Element& list, std::string_view item, std::size_t declared,
                                     std::string_view count_name) {
  if (!blank(list.text)) fail(list, "contains stray text");
  if (list.children.size() != declared) {
    fail(list, "has " + std::to_string(list.children.size()) + " <" + std::string(item) + "> elements but " +
                   std::string(count_name) + "=" + std::to_string(declared));
  }
  std::vector<std::optional<std::string>> by_id(declared);
  for (const auto& c : list.children) {
    if (c.name != item) fail(c, "unexpected inside <" + list.name + ">");
    if (!c.children.empty()) fail(c, "must contain only text");
    expect_attributes(c, {"id"});
    const std::size_t id = parse_count(c, "id");
    if (id >= declared) fail(c, "id " + std::to_string(id) + " out of range 0.." + std::to_string(declared - 1));
    if (by_id[id]) fail(c, "duplicate id " + std::to_string(id));
    by_id[id] = c.text;
  }
  std::vector<std::string> out;
  out.reserve(declared);
  for (auto& label : by_id) out.push_back(std::move(*label));
  return out;
}

std::string escape(std::string_view s, bool attribute) {
  std::string out;
  out.reserve(s.size());
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '\r': out += "&#13;"; break;
      case '"': out += attribute ? "&quot;" : "\""; break;
      case '\n': out += attribute ? "&#10;" : "\n"; break;
      case '\t': out += attribute ? "&#9;" : "\t"; break;
      default: out += c;
    }
  }
  return out;
}

}  // namespace

ContextDocument parse_xml_context(std::string_view bytes) {
  const Element root = TreeBuilder().parse(bytes);
  if (root.name != "BIN") fail(root, "root element must be <BIN>");
  expect_attributes(root, {"name", "nbObj", "nbAtt", "type"});
  if (*root.attribute("type") != "BinaryRelation") {
    fail(root, "type=\"" + *root.attribute("type") + "\" is not \"BinaryRelation\"");
  }
  if (root.attribute("name")->empty()) fail(root, "has an empty name");
  if (!blank(root.text)) fail(root, "contains stray text");
  for (const auto& c : root.children) {
    if (c.name != "OBJS" && c.name != "ATTS" && c.name != "RELS") fail(c, "unexpected inside <BIN>");
  }

  const std::size_t nb_obj = parse_count(root, "nbObj");
  const std::size_t nb_att = parse_count(root, "nbAtt");
  auto objects = read_labels(single_child(root, "OBJS"), "OBJ", nb_obj, "nbObj");
  auto attributes = read_labels(single_child(root, "ATTS"), "ATT", nb_att, "nbAtt");

  const Element& rels = single_child(root, "RELS");
  if (!blank(rels.text)) fail(rels, "contains stray text");
  std::vector<Incidence> pairs;
  std::set<Incidence> seen;
  for (const auto& rel : rels.children) {
    if (rel.name != "REL") fail(rel, "unexpected inside <RELS>");
    if (!rel.children.empty() || !blank(rel.text)) fail(rel, "must be empty");
    expect_attributes(rel, {"idObj", "idAtt"});
    const Incidence pair{parse_count(rel, "idObj"), parse_count(rel, "idAtt")};
    const std::string where = "idObj=\"" + std::to_string(pair.first) + "\" idAtt=\"" + std::to_string(pair.second) + "\"";
    if (pair.first >= nb_obj) fail(rel, where + " references an unknown object");
    if (pair.second >= nb_att) fail(rel, where + " references an unknown attribute");
    if (!seen.insert(pair).second) fail(rel, where + " is repeated");
    pairs.push_back(pair);
  }

  try {
    return {*root.attribute("name"), FormalContext::build(std::move(objects), std::move(attributes), pairs),
            ContextFormat::xml};
  } catch (const ContextError& e) {
    throw FormatError(std::string("XML: ") + e.what());
  }
}

std::string serialize_xml_context(const ContextDocument& doc) {
  const FormalContext& ctx = doc.context;
  std::string out = "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out += "<BIN name=\"" + escape(doc.name, true) + "\" nbObj=\"" + std::to_string(ctx.object_count()) +
         "\" nbAtt=\"" + std::to_string(ctx.attribute_count()) + "\" type=\"BinaryRelation\">\n";
  out += "<OBJS>\n";
  for (std::size_t g = 0; g < ctx.object_count(); ++g) {
    out += "<OBJ id=\"" + std::to_string(g) + "\">" + escape(ctx.object_name(g), false) + "</OBJ>\n";
  }
  out += "</OBJS>\n<ATTS>\n";
  for (std::size_t m = 0; m < ctx.attribute_count(); ++m) {
    out += "<ATT id=\"" + std::to_string(m) + "\">" + escape(ctx.attribute_name(m), false) + "</ATT>\n";
  }
  out += "</ATTS>\n<RELS>\n";
  for (const auto& [g, m] : ctx.incidences()) {
    out += "<REL idObj=\"" + std::to_string(g) + "\" idAtt=\"" + std::to_string(m) + "\" />\n";
  }
  out += "</RELS>\n</BIN>\n";
  return out;
}

}  // namespace fca
