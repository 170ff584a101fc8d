#include "fca/csv.hpp"

#include "fca/error.hpp"

namespace fca::csv {

std::vector<Record> read(std::string_view text) {
  std::vector<Record> records;
  std::size_t line = 1;
  std::size_t i = 0;
  const std::size_t n = text.size();

  while (i < n) {
    Record rec;
    rec.line = line;
    while (true) {
      std::string field;
      if (i < n && text[i] == '"') {
        const std::size_t open_line = line;
        ++i;
        while (true) {
          if (i >= n) {
            throw FormatError("line " + std::to_string(open_line) + ": unterminated quoted field");
          }
          if (text[i] == '"') {
            if (i + 1 < n && text[i + 1] == '"') {
              field += '"';
              i += 2;
              continue;
            }
            ++i;
            break;
          }
          if (text[i] == '\n') ++line;
          field += text[i++];
        }
        if (i < n && text[i] != ',' && text[i] != '\n' && text[i] != '\r') {
          throw FormatError("line " + std::to_string(line) + ": unexpected character after quoted field");
        }
      } else {
        while (i < n && text[i] != ',' && text[i] != '\n' && text[i] != '\r') {
          if (text[i] == '"') {
            throw FormatError("line " + std::to_string(line) + ": quote inside unquoted field");
          }
          field += text[i++];
        }
      }
      rec.fields.push_back(std::move(field));

      if (i >= n) break;
      if (text[i] == ',') {
        ++i;
        continue;
      }
      if (text[i] == '\r') {
        if (i + 1 < n && text[i + 1] == '\n') {
          ++i;
        } else {
          throw FormatError("line " + std::to_string(line) + ": bare carriage return");
        }
      }
      ++i;  // '\n'
      ++line;
      break;
    }
    records.push_back(std::move(rec));
  }
  return records;
}

void write_field(std::string& out, std::string_view field) {
  const bool quote = field.find_first_of(",\"\r\n") != std::string_view::npos;
  if (!quote) {
    out += field;
    return;
  }
  out += '"';
  for (char c : field) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
}

void write_record(std::string& out, const std::vector<std::string>& fields) {
  if (fields.size() == 1 && fields.front().empty()) {
    out += "\"\"\n";
    return;
  }
  for (std::size_t i = 0; i < fields.size(); ++i) {
    if (i) out += ',';
    write_field(out, fields[i]);
  }
  out += '\n';
}

}  // namespace fca::csv
