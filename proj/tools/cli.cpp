#include "cli.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>

#include "fca/error.hpp"
#include "fca/implications.hpp"
#include "fca/ingest.hpp"
#include "fca/io_formats.hpp"
#include "fca/lattice.hpp"
#include "fca/render.hpp"

namespace fca::cli {

namespace {

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string read_input(const std::string& path) {
  if (path == "-") {
    return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open '" + path + "' for reading");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_output(const std::string& path, const std::string& data, std::ostream& out) {
  if (path == "-") {
    out << data;
    return;
  }
  std::ofstream file(path, std::ios::binary | std::ios::trunc);
  if (!file) throw IoError("cannot open '" + path + "' for writing");
  file << data;
  if (!file) throw IoError("failed writing '" + path + "'");
}

ContextFormat resolve_format(const std::string& path, const std::string& flag) {
  if (!flag.empty()) return parse_format_name(flag);
  if (auto f = format_from_extension(path)) return *f;
  throw FormatError("cannot infer the format of '" + path + "'; pass --format xml|csv|cxt");
}

std::string file_stem(const std::string& path) {
  if (path == "-") return std::string(kDefaultDocumentName);
  auto stem = std::filesystem::path(path).stem().string();
  return stem.empty() ? std::string(kDefaultDocumentName) : stem;
}

ContextDocument load_context(const std::string& path, const std::string& format_flag) {
  const ContextFormat format = resolve_format(path, format_flag);
  ContextDocument doc = parse_context(read_input(path), format);
  // CSV carries no document name.
  if (format == ContextFormat::csv) doc.name = file_stem(path);
  return doc;
}

struct Options {
  std::string input;
  std::string output = "-";
  std::string format;
  std::string to_format;
  std::string name;
  std::string dot_path;
  std::string labels = "reduced";
  std::string rankdir = "TB";
  std::string check;
  std::vector<std::string> object_order;
  std::vector<std::string> attribute_order;
};

int cmd_convert(const Options& o, std::ostream& out) {
  ContextDocument doc = load_context(o.input, o.format);
  if (!o.name.empty()) doc.name = o.name;
  const ContextFormat target = resolve_format(o.output, o.to_format);
  write_output(o.output, serialize_context(doc, target), out);
  return kOk;
}

int cmd_concepts(const Options& o, std::ostream& out) {
  const ContextDocument doc = load_context(o.input, o.format);
  const FormalContext& ctx = doc.context;
  for (const auto& c : enumerate_concepts(ctx)) {
    out << format_objects(ctx, c.extent) << '\t' << format_attributes(ctx, c.intent) << '\n';
  }
  return kOk;
}

int cmd_lattice(const Options& o, std::ostream& out, std::ostream& err) {
  const ContextDocument doc = load_context(o.input, o.format);
  const ConceptLattice lat = build_lattice(doc.context);
  std::ostream* summary = &out;
  if (!o.dot_path.empty()) {
    DotOptions dot;
    dot.labels = o.labels == "full" ? LabelMode::full : LabelMode::reduced;
    dot.rankdir = o.rankdir == "BT" ? RankDir::bottom_top : RankDir::top_bottom;
    write_output(o.dot_path, lattice_to_dot(lat, doc.context, dot), out);
    if (o.dot_path == "-") summary = &err;
  }
  *summary << "concepts: " << lat.size() << "\ncovers: " << lat.covers().size() << '\n';
  return kOk;
}

int cmd_report(const Options& o, std::ostream& out) {
  const ContextDocument doc = load_context(o.input, o.format);
  out << pattern_report(build_lattice(doc.context), doc.context);
  return kOk;
}

int cmd_implications(const Options& o, std::ostream& out) {
  const ContextDocument doc = load_context(o.input, o.format);
  const FormalContext& ctx = doc.context;
  if (o.check.empty()) {
    for (const auto& imp : implication_basis(ctx)) out << format_implication(ctx, imp) << '\n';
    return kOk;
  }
  const Implication imp = parse_implication(ctx, o.check);
  if (implication_holds(ctx, imp)) {
    out << "holds: " << format_implication(ctx, imp) << '\n';
    return kOk;
  }
  // Some object has the whole premise but misses part of the conclusion.
  const ObjectSet witnesses = ctx.common_objects(imp.premise) - ctx.common_objects(imp.conclusion);
  out << "does not hold: " << format_implication(ctx, imp) << " (counterexample: "
      << ctx.object_name(witnesses.find_first()) << ")\n";
  return kImplicationFails;
}

int cmd_ingest(const Options& o, std::ostream& out) {
  const auto records = parse_incident_csv(read_input(o.input));
  std::optional<std::vector<std::string>> objects;
  std::optional<std::vector<std::string>> attributes;
  if (!o.object_order.empty()) objects = o.object_order;
  if (!o.attribute_order.empty()) attributes = o.attribute_order;

  ContextDocument doc{o.name.empty() ? file_stem(o.input) : o.name,
                      incidents_to_context(records, objects, attributes), ContextFormat::xml};
  const ContextFormat target =
      o.output == "-" && o.to_format.empty() ? ContextFormat::xml : resolve_format(o.output, o.to_format);
  write_output(o.output, serialize_context(doc, target), out);
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Formal concept analysis of object-attribute data", "fca"};
  app.require_subcommand(1);
  Options o;
  const std::vector<std::string> format_names{"xml", "csv", "cxt", "burmeister"};

  const auto add_context_input = [&](CLI::App* sub) {
    sub->add_option("context", o.input, "Context file (.xml, .csv, .cxt) or - for stdin")->required();
    sub->add_option("--format", o.format, "Input format, overriding the file extension")
        ->check(CLI::IsMember(format_names));
  };

  auto* convert = app.add_subcommand("convert", "Convert a context between file formats");
  convert->add_option("input", o.input, "Input context file")->required();
  convert->add_option("output", o.output, "Output context file, or - for stdout")->required();
  convert->add_option("--from,--format", o.format, "Input format")->check(CLI::IsMember(format_names));
  convert->add_option("--to", o.to_format, "Output format")->check(CLI::IsMember(format_names));
  convert->add_option("--name", o.name, "Document name written to the output");

  auto* concepts = app.add_subcommand("concepts", "List all formal concepts in lectic order");
  add_context_input(concepts);

  auto* lattice = app.add_subcommand("lattice", "Build the concept lattice and optionally write a DOT diagram");
  add_context_input(lattice);
  lattice->add_option("--dot", o.dot_path, "Write the Hasse diagram as DOT to this path (- for stdout)");
  lattice->add_option("--labels", o.labels, "Node labeling")->check(CLI::IsMember({"reduced", "full"}));
  lattice->add_option("--rankdir", o.rankdir, "Diagram direction")->check(CLI::IsMember({"TB", "BT"}));

  auto* report = app.add_subcommand("report", "Print the concept pattern report");
  add_context_input(report);

  auto* implications = app.add_subcommand("implications", "Print the stem base, or check one implication");
  add_context_input(implications);
  implications->add_option("--check", o.check, "Implication to test, e.g. \"P1,P2 -> P6\"");

  auto* ingest = app.add_subcommand("ingest", "Build a context from an incident CSV");
  ingest->add_option("incidents", o.input, "CSV with header location,crime_type[,timestamp]")->required();
  ingest->add_option("--out", o.output, "Output context file (default: XML on stdout)");
  ingest->add_option("--to", o.to_format, "Output format")->check(CLI::IsMember(format_names));
  ingest->add_option("--name", o.name, "Document name (default: input file stem)");
  ingest->add_option("--objects", o.object_order, "Explicit location order, comma-separated")->delimiter(',');
  ingest->add_option("--attributes", o.attribute_order, "Explicit crime-type order, comma-separated")
      ->delimiter(',');

  std::vector<std::string> argv_storage{"fca"};
  argv_storage.insert(argv_storage.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& a : argv_storage) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*convert) return cmd_convert(o, out);
    if (*concepts) return cmd_concepts(o, out);
    if (*lattice) return cmd_lattice(o, out, err);
    if (*report) return cmd_report(o, out);
    if (*implications) return cmd_implications(o, out);
    if (*ingest) return cmd_ingest(o, out);
  } catch (const IoError& e) {
    err << "fca: " << e.what() << '\n';
    return kIoError;
  } catch (const fca::Error& e) {
    err << "fca: " << e.what() << '\n';
    return kBadInput;
  }
  return kUsage;
}

}  // namespace fca::cli
