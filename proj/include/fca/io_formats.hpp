#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "fca/context.hpp"

namespace fca {

enum class ContextFormat { xml, csv, burmeister };

/// Name used when a format carries no document name (CSV, or a blank
/// Burmeister name line).
inline constexpr std::string_view kDefaultDocumentName = "context";

struct ContextDocument {
  std::string name;
  FormalContext context;
  ContextFormat source_format = ContextFormat::xml;
};

// Galicia-style XML: <BIN name=.. nbObj=.. nbAtt=.. type="BinaryRelation">
// with OBJS/OBJ, ATTS/ATT and RELS/REL children. Ids must be exactly 0..n-1.
ContextDocument parse_xml_context(std::string_view bytes);
std::string serialize_xml_context(const ContextDocument& doc);

// Cross-table CSV: header is an empty cell then the attribute names; each row
// is an object name then "x" or "" per attribute.
ContextDocument parse_csv_context(std::string_view bytes);
std::string serialize_csv_context(const ContextDocument& doc);

// Burmeister .cxt: "B", name, object count, attribute count, blank line,
// object names, attribute names, then one row of X/. per object.
ContextDocument parse_burmeister(std::string_view bytes);
std::string serialize_burmeister(const ContextDocument& doc);

ContextDocument parse_context(std::string_view bytes, ContextFormat format);
std::string serialize_context(const ContextDocument& doc, ContextFormat format);

/// ".xml", ".csv", ".cxt" (case-insensitive); nullopt for anything else.
std::optional<ContextFormat> format_from_extension(std::string_view path);
/// "xml", "csv", "cxt" or "burmeister"; throws FormatError otherwise.
ContextFormat parse_format_name(std::string_view name);
std::string_view format_name(ContextFormat format);

}  // namespace fca
