// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any fails.

#include <sys/wait.h>

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "dot_checker.hpp"
#include "fca/implications.hpp"
#include "fca/io_formats.hpp"
#include "fca/lattice.hpp"
#include "fca/render.hpp"
#include "oracle.hpp"
#include "table1.hpp"

#ifndef FCA_CLI_PATH
#error "FCA_CLI_PATH must be defined"
#endif

using namespace fca;
namespace fs = std::filesystem;

namespace {

class Criterion {
 public:
  void require(bool ok, const std::string& what) {
    if (!ok && failures_.size() < 5) failures_.push_back(what);
    if (!ok) ++failed_;
    ++checks_;
  }
  bool passed() const { return failed_ == 0; }
  std::string summary() const {
    std::ostringstream s;
    s << checks_ << " checks";
    if (failed_) {
      s << ", " << failed_ << " failed:";
      for (const auto& f : failures_) s << " [" << f << "]";
    }
    return s.str();
  }

 private:
  std::size_t checks_ = 0;
  std::size_t failed_ = 0;
  std::vector<std::string> failures_;
};

std::set<oracle::Concept> as_oracle(const std::vector<FormalConcept>& cs) {
  std::set<oracle::Concept> out;
  for (const auto& c : cs) out.insert({oracle::mask(c.extent), oracle::mask(c.intent)});
  return out;
}

std::map<std::string, std::size_t> read_golden(const std::string& name) {
  std::istringstream in(testing::read_data(name));
  std::map<std::string, std::size_t> out;
  std::string key;
  std::size_t value = 0;
  while (in >> key >> value) out[key] = value;
  return out;
}

int shell(const std::string& command) {
  const int status = std::system(command.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string cli() { return std::string("'") + FCA_CLI_PATH + "'"; }

// Random contexts reused by criteria 2 and 4.
std::vector<oracle::Matrix> random_contexts(std::size_t count, std::size_t max_side, unsigned seed) {
  std::mt19937 rng(seed);
  std::vector<oracle::Matrix> out;
  for (std::size_t i = 0; i < count; ++i) out.push_back(oracle::random_matrix(rng, max_side, max_side));
  return out;
}

bool table1_fidelity(Criterion& c) {
  const auto xml = parse_xml_context(testing::read_data("table1.xml")).context;
  const auto csv = parse_csv_context(testing::read_data("table1.csv")).context;
  const auto cxt = parse_burmeister(testing::read_data("table1.cxt")).context;
  c.require(xml == csv && csv == cxt, "the three fixtures parse to one context");
  c.require(xml == testing::table1(), "fixtures equal the transcribed table");
  c.require(xml.object_count() == 6 && xml.attribute_count() == 8, "6 objects x 8 attributes");
  c.require(xml.common_attributes(testing::objs(xml, {"A"})) == testing::attrs(xml, {"P1", "P3", "P7"}), "{A}'");
  c.require(xml.common_objects(testing::attrs(xml, {"P5"})) == testing::objs(xml, {"B", "C", "D", "F"}), "{P5}'");
  c.require(xml.closure(testing::attrs(xml, {"P1", "P2"})) == testing::attrs(xml, {"P1", "P2", "P6"}), "{P1,P2}''");
  return c.passed();
}

bool concept_oracle_equivalence(Criterion& c) {
  const auto start = std::chrono::steady_clock::now();
  auto cases = random_contexts(250, 12, 20240601);
  cases.insert(cases.begin(), oracle::from_context(testing::table1()));
  for (std::size_t i = 0; i < cases.size(); ++i) {
    const auto& matrix = cases[i];
    const auto concepts = enumerate_concepts(oracle::to_context(matrix));
    const auto got = as_oracle(concepts);
    c.require(got == oracle::concepts(matrix), "case " + std::to_string(i) + ": concept set differs");
    c.require(got.size() == concepts.size(), "case " + std::to_string(i) + ": duplicates");
    for (std::size_t k = 1; k < concepts.size(); ++k) {
      c.require(oracle::lectic_less(oracle::mask(concepts[k - 1].intent), oracle::mask(concepts[k].intent),
                                    matrix.attributes),
                "case " + std::to_string(i) + ": lectic order broken at " + std::to_string(k));
    }
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  c.require(secs < 10.0, "runtime " + std::to_string(secs) + " s >= 10 s");
  return c.passed();
}

template <typename Set, typename Other>
void galois_laws(Criterion& c, const Set& small, const Set& large,
                 const std::function<Other(const Set&)>& derive, const std::function<Set(const Other&)>& back) {
  c.require(derive(large).is_subset_of(derive(small)), "anti-monotonicity");
  const Set closed = back(derive(small));
  c.require(small.is_subset_of(closed), "extensivity");
  c.require(derive(small) == derive(closed), "triple prime");
}

bool galois_law_suite(Criterion& c) {
  std::mt19937 rng(1000);
  for (int i = 0; i < 1000; ++i) {
    const auto matrix = oracle::random_matrix(rng, 12, 12);
    const auto ctx = oracle::to_context(matrix);
    std::uniform_int_distribution<oracle::Mask> og(0, oracle::full(matrix.objects));
    std::uniform_int_distribution<oracle::Mask> am(0, oracle::full(matrix.attributes));
    const oracle::Mask a1 = og(rng), a2 = a1 | og(rng);
    const oracle::Mask b1 = am(rng), b2 = b1 | am(rng);
    const std::function<AttributeSet(const ObjectSet&)> up = [&](const ObjectSet& s) { return ctx.common_attributes(s); };
    const std::function<ObjectSet(const AttributeSet&)> down = [&](const AttributeSet& s) { return ctx.common_objects(s); };
    galois_laws(c, oracle::from_mask<ObjectSet>(matrix.objects, a1),
                oracle::from_mask<ObjectSet>(matrix.objects, a2), up, down);
    galois_laws(c, oracle::from_mask<AttributeSet>(matrix.attributes, b1),
                oracle::from_mask<AttributeSet>(matrix.attributes, b2), down, up);
  }

  // Exhaustive: every pair of nested subsets on each side of small contexts.
  auto small = random_contexts(12, 8, 77);
  small.push_back(oracle::from_context(testing::table1()));
  for (const auto& matrix : small) {
    const auto ctx = oracle::to_context(matrix);
    const std::function<AttributeSet(const ObjectSet&)> up = [&](const ObjectSet& s) { return ctx.common_attributes(s); };
    const std::function<ObjectSet(const AttributeSet&)> down = [&](const AttributeSet& s) { return ctx.common_objects(s); };
    const oracle::Mask all_g = oracle::full(matrix.objects), all_m = oracle::full(matrix.attributes);
    for (oracle::Mask x = 0; x <= all_g; ++x) {
      for (oracle::Mask y = x; y <= all_g; y = (y + 1) | x) {
        galois_laws(c, oracle::from_mask<ObjectSet>(matrix.objects, x),
                    oracle::from_mask<ObjectSet>(matrix.objects, y), up, down);
        if (y == all_g) break;
      }
      if (x == all_g) break;
    }
    for (oracle::Mask x = 0; x <= all_m; ++x) {
      for (oracle::Mask y = x; y <= all_m; y = (y + 1) | x) {
        galois_laws(c, oracle::from_mask<AttributeSet>(matrix.attributes, x),
                    oracle::from_mask<AttributeSet>(matrix.attributes, y), down, up);
        if (y == all_m) break;
      }
      // Closure axioms for X -> X'': idempotence on top of the laws above.
      const auto s = oracle::from_mask<AttributeSet>(matrix.attributes, x);
      c.require(ctx.closure(ctx.closure(s)) == ctx.closure(s), "closure idempotence");
      if (x == all_m) break;
    }
  }
  return c.passed();
}

bool lattice_laws(Criterion& c) {
  auto cases = random_contexts(120, 9, 4242);
  cases.push_back(oracle::from_context(testing::table1()));
  std::size_t checked = 0;
  for (const auto& matrix : cases) {
    const auto ctx = oracle::to_context(matrix);
    const auto lat = build_lattice(ctx);
    if (lat.size() > 200) continue;
    ++checked;
    const auto& cs = lat.concepts();
    std::vector<oracle::Concept> plain;
    for (const auto& k : cs) plain.push_back({oracle::mask(k.extent), oracle::mask(k.intent)});
    c.require(std::set<Cover>(lat.covers().begin(), lat.covers().end()) == oracle::covers(plain),
              "covers differ from the triple-scan reduction");
    for (const auto& a : cs) {
      for (const auto& b : cs) {
        const auto m = meet(ctx, a, b);
        const auto j = join(ctx, a, b);
        c.require(ctx.common_attributes(m.extent) == m.intent && ctx.common_objects(m.intent) == m.extent,
                  "meet is a concept");
        c.require(ctx.common_attributes(j.extent) == j.intent && ctx.common_objects(j.intent) == j.extent,
                  "join is a concept");
        c.require(concept_leq(m, a) && concept_leq(m, b), "meet is a lower bound");
        c.require(concept_leq(a, j) && concept_leq(b, j), "join is an upper bound");
        for (const auto& k : cs) {
          if (concept_leq(k, a) && concept_leq(k, b)) c.require(concept_leq(k, m), "meet is greatest");
          if (concept_leq(a, k) && concept_leq(b, k)) c.require(concept_leq(j, k), "join is least");
        }
      }
    }
  }
  c.require(checked >= 100, "too few lattices under 200 concepts");
  return c.passed();
}

bool implication_basis_complete(Criterion& c) {
  std::mt19937 rng(555);
  for (int i = 0; i < 200; ++i) {
    const auto matrix = oracle::random_matrix(rng, 10, 8);
    const auto ctx = oracle::to_context(matrix);
    const auto basis = implication_basis(ctx);
    for (const auto& imp : basis) c.require(implication_holds(ctx, imp), "unsound basis member");
    const oracle::Mask all = oracle::full(matrix.attributes);
    for (oracle::Mask x = 0; x <= all; ++x) {
      const auto s = oracle::from_mask<AttributeSet>(matrix.attributes, x);
      c.require(oracle::mask(syntactic_closure(basis, s)) == oracle::up(matrix, oracle::down(matrix, x)),
                "basis closure differs from X''");
      if (x == all) break;
    }
  }
  const auto xml = testing::data_path("table1.xml");
  c.require(shell(cli() + " implications '" + xml + "' --check 'P1,P2 -> P6' >/dev/null") == 0,
            "--check \"P1,P2 -> P6\" exit 0");
  c.require(shell(cli() + " implications '" + xml + "' --check 'P1 -> P3' >/dev/null") == 1,
            "--check \"P1 -> P3\" exit 1");
  return c.passed();
}

bool round_trips(Criterion& c) {
  std::mt19937 rng(100);
  for (int i = 0; i < 100; ++i) {
    const ContextDocument doc{"rt" + std::to_string(i), oracle::to_context(oracle::random_matrix(rng, 12, 12)),
                              ContextFormat::xml};
    c.require(parse_xml_context(serialize_xml_context(doc)).context == doc.context, "xml round trip");
    c.require(parse_csv_context(serialize_csv_context(doc)).context == doc.context, "csv round trip");
    c.require(parse_burmeister(serialize_burmeister(doc)).context == doc.context, "cxt round trip");
  }
  const std::string xml =
      serialize_xml_context({"Crime patternContext.slf", testing::table1(), ContextFormat::xml});
  const std::string header =
      "<BIN name=\"Crime patternContext.slf\" nbObj=\"6\" nbAtt=\"8\" type=\"BinaryRelation\">";
  c.require(xml.find("\n" + header + "\n") != std::string::npos, "BIN header bytes");
  c.require(xml == testing::read_data("table1.xml"), "whole document equals the completed listing");
  return c.passed();
}

bool rendering(Criterion& c) {
  const FormalContext ctx = testing::table1();
  const auto golden = read_golden("table1_lattice.golden");
  const auto oracle_set = oracle::concepts(oracle::from_context(ctx));
  const std::vector<oracle::Concept> ordered(oracle_set.begin(), oracle_set.end());
  const auto oracle_edges = oracle::covers(ordered).size();
  c.require(golden.at("concepts") == oracle_set.size(), "golden concept count matches the oracle");
  c.require(golden.at("covers") == oracle_edges, "golden cover count matches the oracle");

  dot::Checker checker(lattice_to_dot(build_lattice(ctx), ctx));
  const auto graph = checker.parse();
  c.require(graph.has_value(), "DOT parses: " + checker.error());
  if (!graph) return false;
  c.require(graph->labels.size() == golden.at("concepts"), "DOT node count");
  c.require(graph->edges.size() == golden.at("covers"), "DOT edge count");

  std::map<std::string, int> seen;
  for (const auto& [node, label] : graph->labels) {
    std::istringstream lines(label);
    for (std::string line; std::getline(lines, line);) {
      std::size_t start = 0;
      while (true) {
        const auto comma = line.find(", ", start);
        const auto item = line.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
        if (!item.empty()) ++seen[item];
        if (comma == std::string::npos) break;
        start = comma + 2;
      }
    }
  }
  for (const auto& n : ctx.object_names()) c.require(seen[n] == 1, "object label " + n + " once");
  for (const auto& n : ctx.attribute_names()) c.require(seen[n] == 1, "attribute label " + n + " once");
  c.require(seen.size() == 14, "no labels beyond the 6 objects and 8 attributes");
  return c.passed();
}

bool end_to_end(Criterion& c) {
  const fs::path dir = fs::temp_directory_path() / ("fca_acceptance_" + std::to_string(std::random_device{}()));
  fs::create_directories(dir);
  const auto incidents = testing::data_path("table1_incidents.csv");
  std::vector<std::string> outputs;
  for (int run = 0; run < 2; ++run) {
    const std::string tag = std::to_string(run);
    const std::string ctx = (dir / ("ctx" + tag + ".xml")).string();
    const std::string dot = (dir / ("lattice" + tag + ".dot")).string();
    const std::string log = (dir / ("out" + tag + ".txt")).string();
    c.require(shell(cli() + " ingest '" + incidents + "' --out '" + ctx + "' > '" + log + "'") == 0, "ingest exit 0");
    c.require(shell(cli() + " lattice '" + ctx + "' --dot '" + dot + "' >> '" + log + "'") == 0, "lattice exit 0");
    c.require(shell(cli() + " implications '" + ctx + "' >> '" + log + "'") == 0, "implications exit 0");
    c.require(shell(cli() + " report '" + ctx + "' >> '" + log + "'") == 0, "report exit 0");
    outputs.push_back(testing::read_file(ctx) + testing::read_file(dot) + testing::read_file(log));
    if (run == 0) {
      c.require(parse_xml_context(testing::read_file(ctx)).context == testing::table1(), "ingested context is Table 1");
    }
  }
  c.require(outputs[0] == outputs[1], "byte-identical across runs");
  fs::remove_all(dir);
  return c.passed();
}

}  // namespace

int main() {
  struct Entry {
    const char* name;
    bool (*run)(Criterion&);
  };
  const Entry criteria[] = {
      {"1 Table 1 fidelity", table1_fidelity},
      {"2 concept enumeration equals the exhaustive oracle", concept_oracle_equivalence},
      {"3 Galois law suite", galois_law_suite},
      {"4 lattice laws and covers", lattice_laws},
      {"5 implication basis completeness and --check", implication_basis_complete},
      {"6 format round trips and BIN header", round_trips},
      {"7 DOT rendering counts and reduced labels", rendering},
      {"8 end-to-end ingest, lattice, implications", end_to_end},
  };
  int failed = 0;
  for (const auto& entry : criteria) {
    Criterion c;
    bool ok = false;
    std::string detail;
    const auto start = std::chrono::steady_clock::now();
    try {
      ok = entry.run(c);
      detail = c.summary();
    } catch (const std::exception& e) {
      detail = std::string("exception: ") + e.what();
    }
    const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    std::cout << (ok ? "PASS" : "FAIL") << "  criterion " << entry.name << " (" << detail << ", "
              << static_cast<long>(ms) << " ms)" << std::endl;
    if (!ok) ++failed;
  }
  std::cout << (failed ? "acceptance: FAILED\n" : "acceptance: all criteria passed\n");
  return failed ? 1 : 0;
}
