#include <charconv>

#include "fca/error.hpp"
#include "fca/io_formats.hpp"

namespace fca {

namespace {

class LineReader {
 public:
  explicit LineReader(std::string_view text) : text_(text) {}

  bool at_end() const { return pos_ >= text_.size(); }
  std::size_t line_number() const { return line_; }

  /// Next line without its terminator (LF or CRLF).
  std::string_view next(const char* what) {
    if (at_end()) throw FormatError("Burmeister: unexpected end of file, expected " + std::string(what));
    const auto eol = text_.find('\n', pos_);
    std::string_view line = text_.substr(pos_, eol == std::string_view::npos ? std::string_view::npos : eol - pos_);
    pos_ = eol == std::string_view::npos ? text_.size() : eol + 1;
    ++line_;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    return line;
  }

  [[noreturn]] void fail(const std::string& what) const {
    throw FormatError("Burmeister line " + std::to_string(line_) + ": " + what);
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t line_ = 0;
};

std::size_t parse_count(LineReader& in, const char* what) {
  std::string_view s = in.next(what);
  const auto first = s.find_first_not_of(" \t");
  const auto last = s.find_last_not_of(" \t");
  if (first == std::string_view::npos) in.fail(std::string("empty line where ") + what + " was expected");
  s = s.substr(first, last - first + 1);
  std::size_t out = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  if (ec != std::errc() || ptr != s.data() + s.size()) {
    in.fail(std::string("cannot parse ") + what + " '" + std::string(s) + "'");
  }
  return out;
}

void append_line(std::string& out, std::string_view line) {
  if (line.find_first_of("\r\n") != std::string_view::npos) {
    throw FormatError("Burmeister: label '" + std::string(line) + "' contains a line break");
  }
  out += line;
  out += '\n';
}

}  // namespace

ContextDocument parse_burmeister(std::string_view bytes) {
  LineReader in(bytes);
  if (in.next("the 'B' marker") != "B") in.fail("first line must be 'B'");
  std::string name(in.next("the context name"));
  const std::size_t objects_n = parse_count(in, "the object count");
  const std::size_t attributes_n = parse_count(in, "the attribute count");
  if (!in.next("a blank line").empty()) in.fail("expected a blank line after the counts");

  std::vector<std::string> objects;
  std::vector<std::string> attributes;
  for (std::size_t g = 0; g < objects_n; ++g) objects.emplace_back(in.next("an object name"));
  for (std::size_t m = 0; m < attributes_n; ++m) attributes.emplace_back(in.next("an attribute name"));

  std::vector<Incidence> pairs;
  for (std::size_t g = 0; g < objects_n; ++g) {
    const std::string_view row = in.next("an incidence row");
    if (row.size() != attributes_n) {
      in.fail("row for '" + objects[g] + "' has " + std::to_string(row.size()) + " cells, expected " +
              std::to_string(attributes_n));
    }
    for (std::size_t m = 0; m < attributes_n; ++m) {
      if (row[m] == 'X' || row[m] == 'x') {
        pairs.emplace_back(g, m);
      } else if (row[m] != '.') {
        in.fail(std::string("invalid cell '") + row[m] + "' (expected X or .)");
      }
    }
  }
  while (!in.at_end()) {
    if (!in.next("").empty()) in.fail("unexpected content after the incidence rows");
  }

  if (name.empty()) name = kDefaultDocumentName;
  try {
    return {std::move(name), FormalContext::build(std::move(objects), std::move(attributes), pairs),
            ContextFormat::burmeister};
  } catch (const ContextError& e) {
    throw FormatError(std::string("Burmeister: ") + e.what());
  }
}

std::string serialize_burmeister(const ContextDocument& doc) {
  const FormalContext& ctx = doc.context;
  std::string out = "B\n";
  append_line(out, doc.name);
  out += std::to_string(ctx.object_count()) + "\n" + std::to_string(ctx.attribute_count()) + "\n\n";
  for (const auto& name : ctx.object_names()) append_line(out, name);
  for (const auto& name : ctx.attribute_names()) append_line(out, name);
  for (std::size_t g = 0; g < ctx.object_count(); ++g) {
    for (std::size_t m = 0; m < ctx.attribute_count(); ++m) out += ctx.incident(g, m) ? 'X' : '.';
    out += '\n';
  }
  return out;
}

}  // namespace fca
