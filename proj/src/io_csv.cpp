#include "fca/csv.hpp"
#include "fca/error.hpp"
#include "fca/io_formats.hpp"

namespace fca {

ContextDocument parse_csv_context(std::string_view bytes) {
  const auto records = csv::read(bytes);
  if (records.empty()) throw FormatError("CSV: missing header row");

  const auto& header = records.front().fields;
  if (!header.front().empty()) {
    throw FormatError("CSV line 1: first header cell must be empty, got '" + header.front() + "'");
  }
  std::vector<std::string> attributes(header.begin() + 1, header.end());
  std::vector<std::string> objects;
  std::vector<Incidence> pairs;

  for (std::size_t r = 1; r < records.size(); ++r) {
    const auto& rec = records[r];
    if (rec.fields.size() != header.size()) {
      throw FormatError("CSV line " + std::to_string(rec.line) + ": row has " + std::to_string(rec.fields.size()) +
                        " cells, header has " + std::to_string(header.size()));
    }
    const std::size_t g = objects.size();
    objects.push_back(rec.fields.front());
    for (std::size_t m = 0; m < attributes.size(); ++m) {
      const std::string& cell = rec.fields[m + 1];
      if (cell == "x") {
        pairs.emplace_back(g, m);
      } else if (!cell.empty()) {
        throw FormatError("CSV line " + std::to_string(rec.line) + ": cell '" + cell + "' under " +
                          attributes[m] + " is neither \"x\" nor empty");
      }
    }
  }

  try {
    return {std::string(kDefaultDocumentName),
            FormalContext::build(std::move(objects), std::move(attributes), pairs), ContextFormat::csv};
  } catch (const ContextError& e) {
    throw FormatError(std::string("CSV: ") + e.what());
  }
}

std::string serialize_csv_context(const ContextDocument& doc) {
  const FormalContext& ctx = doc.context;
  std::string out;
  std::vector<std::string> fields;
  fields.reserve(ctx.attribute_count() + 1);

  fields.emplace_back();
  fields.insert(fields.end(), ctx.attribute_names().begin(), ctx.attribute_names().end());
  csv::write_record(out, fields);

  for (std::size_t g = 0; g < ctx.object_count(); ++g) {
    fields.clear();
    fields.push_back(ctx.object_name(g));
    for (std::size_t m = 0; m < ctx.attribute_count(); ++m) fields.emplace_back(ctx.incident(g, m) ? "x" : "");
    csv::write_record(out, fields);
  }
  return out;
}

}  // namespace fca
