#include "fca/ingest.hpp"

#include <unordered_map>

#include "fca/csv.hpp"
#include "fca/error.hpp"

namespace fca {

namespace {

std::string trimmed(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return std::string(s.substr(first, last - first + 1));
}

class LabelIndex {
 public:
  LabelIndex(const char* kind, const std::optional<std::vector<std::string>>& fixed) : kind_(kind) {
    if (fixed) {
      fixed_ = true;
      for (const auto& label : *fixed) add(trimmed(label));
    }
  }

  std::size_t lookup(const std::string& label) {
    if (const auto it = ids_.find(label); it != ids_.end()) return it->second;
    if (fixed_) throw IngestError(std::string(kind_) + " '" + label + "' is not in the explicit order");
    return add(label);
  }

  std::vector<std::string> take_names() { return std::move(names_); }

 private:
  std::size_t add(const std::string& label) {
    // Duplicates in an explicit order are left for FormalContext::build to reject.
    ids_.emplace(label, names_.size());
    names_.push_back(label);
    return names_.size() - 1;
  }

  const char* kind_;
  bool fixed_ = false;
  std::unordered_map<std::string, std::size_t> ids_;
  std::vector<std::string> names_;
};

}  // namespace

FormalContext incidents_to_context(std::span<const IncidentRecord> records,
                                   const std::optional<std::vector<std::string>>& object_order,
                                   const std::optional<std::vector<std::string>>& attribute_order) {
  if (records.empty() && !(object_order && attribute_order)) {
    throw IngestError("no incident records and no explicit object and attribute orders");
  }

  LabelIndex objects("location", object_order);
  LabelIndex attributes("crime type", attribute_order);
  std::vector<Incidence> marks;
  marks.reserve(records.size());
  for (std::size_t i = 0; i < records.size(); ++i) {
    const std::string location = trimmed(records[i].location);
    const std::string crime_type = trimmed(records[i].crime_type);
    if (location.empty()) throw IngestError("record " + std::to_string(i) + ": empty location");
    if (crime_type.empty()) throw IngestError("record " + std::to_string(i) + ": empty crime type");
    marks.emplace_back(objects.lookup(location), attributes.lookup(crime_type));
  }
  try {
    return FormalContext::build(objects.take_names(), attributes.take_names(), marks);
  } catch (const ContextError& e) {
    throw IngestError(e.what());
  }
}

std::vector<IncidentRecord> parse_incident_csv(std::string_view text) {
  const auto rows = csv::read(text);
  if (rows.empty()) throw FormatError("incident CSV: missing header row");

  const auto& header = rows.front().fields;
  const bool shape_ok = (header.size() == 2 || header.size() == 3) && trimmed(header[0]) == "location" &&
                        trimmed(header[1]) == "crime_type" &&
                        (header.size() == 2 || trimmed(header[2]) == "timestamp");
  if (!shape_ok) {
    throw FormatError("incident CSV line 1: header must be location,crime_type[,timestamp]");
  }

  std::vector<IncidentRecord> out;
  out.reserve(rows.size() - 1);
  for (std::size_t r = 1; r < rows.size(); ++r) {
    const auto& fields = rows[r].fields;
    if (fields.size() != header.size()) {
      throw FormatError("incident CSV line " + std::to_string(rows[r].line) + ": expected " +
                        std::to_string(header.size()) + " fields, got " + std::to_string(fields.size()));
    }
    IncidentRecord rec{fields[0], fields[1], std::nullopt};
    if (fields.size() == 3 && !fields[2].empty()) rec.timestamp = fields[2];
    out.push_back(std::move(rec));
  }
  return out;
}

}  // namespace fca
