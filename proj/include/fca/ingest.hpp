#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "fca/context.hpp"

namespace fca {

/// One observed incident: a crime type at a location. The timestamp is kept
/// verbatim and plays no part in context construction.
struct IncidentRecord {
  std::string location;
  std::string crime_type;
  std::optional<std::string> timestamp;
};

/// Locations become objects, crime types become attributes, and a cell is
/// marked when at least one record pairs them. Without an explicit order,
/// labels are numbered by first appearance. Labels are trimmed of surrounding
/// whitespace and compared case-sensitively.
///
/// Throws IngestError on an empty label (naming the 0-based record index), on
/// a label missing from an explicit order, or when there are no records and
/// not both orders are given.
FormalContext incidents_to_context(std::span<const IncidentRecord> records,
                                   const std::optional<std::vector<std::string>>& object_order = {},
                                   const std::optional<std::vector<std::string>>& attribute_order = {});

/// Reads the incident CSV: header `location,crime_type[,timestamp]`, one
/// incident per row. Throws FormatError on a wrong header or ragged rows.
std::vector<IncidentRecord> parse_incident_csv(std::string_view text);

}  // namespace fca
