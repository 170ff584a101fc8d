#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace fca::csv {

struct Record {
  std::size_t line = 0;  // 1-based line on which the record starts
  std::vector<std::string> fields;
};

/// RFC 4180 reader: comma separator, double-quoted fields with "" escapes,
/// LF or CRLF record terminators. A final terminator is optional. Throws
/// FormatError on an unterminated quote or a quote inside an unquoted field.
std::vector<Record> read(std::string_view text);

/// Appends one field, quoted only when it needs to be.
void write_field(std::string& out, std::string_view field);

/// Appends a record followed by LF. A record consisting of one empty field
/// is written as "" so it does not read back as a blank line.
void write_record(std::string& out, const std::vector<std::string>& fields);

}  // namespace fca::csv
