#include "fca/io_formats.hpp"

#include <algorithm>
#include <cctype>

#include "fca/error.hpp"

namespace fca {

ContextDocument parse_context(std::string_view bytes, ContextFormat format) {
  switch (format) {
    case ContextFormat::xml: return parse_xml_context(bytes);
    case ContextFormat::csv: return parse_csv_context(bytes);
    case ContextFormat::burmeister: return parse_burmeister(bytes);
  }
  throw FormatError("unknown context format");
}

std::string serialize_context(const ContextDocument& doc, ContextFormat format) {
  switch (format) {
    case ContextFormat::xml: return serialize_xml_context(doc);
    case ContextFormat::csv: return serialize_csv_context(doc);
    case ContextFormat::burmeister: return serialize_burmeister(doc);
  }
  throw FormatError("unknown context format");
}

std::optional<ContextFormat> format_from_extension(std::string_view path) {
  const auto dot = path.rfind('.');
  const auto slash = path.find_last_of("/\\");
  if (dot == std::string_view::npos || (slash != std::string_view::npos && dot < slash)) return std::nullopt;
  std::string ext(path.substr(dot + 1));
  std::transform(ext.begin(), ext.end(), ext.begin(), [](unsigned char c) { return std::tolower(c); });
  if (ext == "xml") return ContextFormat::xml;
  if (ext == "csv") return ContextFormat::csv;
  if (ext == "cxt") return ContextFormat::burmeister;
  return std::nullopt;
}

ContextFormat parse_format_name(std::string_view name) {
  if (name == "xml") return ContextFormat::xml;
  if (name == "csv") return ContextFormat::csv;
  if (name == "cxt" || name == "burmeister") return ContextFormat::burmeister;
  throw FormatError("unknown format '" + std::string(name) + "' (expected xml, csv or cxt)");
}

std::string_view format_name(ContextFormat format) {
  switch (format) {
    case ContextFormat::xml: return "xml";
    case ContextFormat::csv: return "csv";
    case ContextFormat::burmeister: return "cxt";
  }
  return "?";
}

}  // namespace fca
