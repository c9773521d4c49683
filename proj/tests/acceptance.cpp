// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any
// failure. Time limits are wall-clock and fixed below.
#include <chrono>
#include <cstdio>
#include <functional>
#include <limits>
#include <string>

#include "nesy/colimit.hpp"
#include "nesy/dsl.hpp"
#include "nesy/emitters.hpp"
#include "support/documents.hpp"

using namespace nesy;

namespace {

constexpr double kOneSecond = 1.0;
constexpr double kThirtySeconds = 30.0;
constexpr double kTenSeconds = 10.0;
constexpr double kNoLimit = std::numeric_limits<double>::infinity();

constexpr int kHomomorphismCases = 200;
constexpr int kNetworkCases = 200;
constexpr int kInfimumTaxonomies = 200;
constexpr int kSyntheticLibraries = 12;

std::string text_of(std::string_view file) { return read_file(testkit::corpus(file)); }

/// Returns an empty string on success, otherwise what went wrong.
using Check = std::function<std::string()>;

int failures = 0;

void criterion(int number, const char* title, double limit_s, const Check& check) {
  auto start = std::chrono::steady_clock::now();
  std::string problem;
  try {
    problem = check();
  } catch (const std::exception& e) {
    problem = std::string("unexpected exception: ") + e.what();
  }
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (problem.empty() && secs >= limit_s) {
    problem = "took " + std::to_string(secs) + " s, limit " + std::to_string(limit_s) + " s";
  }
  bool ok = problem.empty();
  if (!ok) ++failures;
  std::printf("criterion %d: %s  %s  (%.3f s%s)%s%s\n", number, ok ? "PASS" : "FAIL",
              title, secs,
              limit_s == kNoLimit ? "" : (", limit " + std::to_string(static_cast<int>(limit_s)) + " s").c_str(),
              ok ? "" : "  ", problem.c_str());
}

Pattern expected_combination() {
  const Taxonomy& t = default_taxonomy();
  std::vector<PatternNode> ns{
      {NodeId("s1"), t.get("Symbol")},        {NodeId("tr"), t.get("Training")},
      {NodeId("m"), t.get("Semantic_Model")}, {NodeId("s2"), t.get("Symbol")},
      {NodeId("d"), t.get("Deduction")},      {NodeId("s3"), t.get("Symbol")}};
  std::vector<EdgeDecl> es{{NodeId("s1"), NodeId("tr")}, {NodeId("tr"), NodeId("m")},
                           {NodeId("s2"), NodeId("d")},  {NodeId("d"), NodeId("s3")},
                           {NodeId("m"), NodeId("d")}};
  return build_pattern("Expected", t, ns, es);
}

std::string c1_worked_example() {
  Library lib = evaluate_combines(resolve(parse(text_of("generate_and_train.nesy")), Catalog{}));
  for (const char* r : {"R1", "R2"}) {
    if (!lib.refinements.contains(r)) return std::string(r) + " was not inferred";
  }
  const Refinement& r1 = lib.refinements.at("R1");
  const Refinement& r2 = lib.refinements.at("R2");
  if (r1.target.label(r1.node_map[0]).local_name != "Model") return "R1 maps to the wrong node";
  if (r2.target.label(r2.node_map[0]).local_name != "Semantic_Model")
    return "R2 maps to the wrong node";
  const Pattern& got = lib.pattern("SemanticGenerateAndTrain");
  if (!testkit::isomorphic_oracle(got, expected_combination()))
    return "combination is not the expected 6-node pattern";
  return {};
}

std::string c2_undefined_colimit() {
  try {
    load_library(text_of("clash.nesy"));
    return "the clash network combined";
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::undefined_colimit)
      return std::string("wrong error: ") + e.what();
  }
  Library lib = load_library(text_of("hybrid.nesy"));
  const Pattern& p = lib.pattern("HybridCombination");
  int hybrid = 0;
  for (const auto& n : p.nodes()) hybrid += n.label.local_name == "Hybrid_Model";
  if (hybrid != 1) return "expected exactly one Hybrid_Model node";
  // The merged node is the one with three members.
  CombinationResult r = combine(lib.networks.at("N"));
  for (std::size_t k = 0; k < r.classes.size(); ++k) {
    if (r.classes[k].size() == 3 && r.pattern.label(k).local_name != "Hybrid_Model")
      return "merged node is labeled " + r.pattern.label(k).local_name;
  }
  return {};
}

std::string c3_inline_extension() {
  Library lib = load_library(text_of("embedding.nesy"));
  const Pattern& p = lib.pattern("Embedding");
  const Taxonomy& t = p.taxonomy();
  if (!leq(t, t.get("Embedding"), t.get("Process"))) return "Embedding is not below Process";
  if (p.size() != 4 || p.edges().size() != 3) return "wrong node or edge count";
  int embeddings = 0;
  for (const auto& n : p.nodes()) embeddings += n.label.local_name == "Embedding";
  if (embeddings != 1) return "expected a single Embedding node";
  return {};
}

std::string c4_homomorphism_oracle() {
  testkit::Rng rng(4);
  for (int i = 0; i < kHomomorphismCases; ++i) {
    auto rt = testkit::random_taxonomy(rng, 12);
    Pattern src = testkit::random_pattern(rng, rt.tax, "S", 1 + testkit::pick(rng, 5), 0.25);
    Pattern tgt = testkit::random_pattern(rng, rt.tax, "T", 1 + testkit::pick(rng, 6), 0.35);
    auto got = find_homomorphisms(src, tgt, std::numeric_limits<std::size_t>::max());
    std::sort(got.begin(), got.end());
    if (got != testkit::all_refinements(src, tgt, rt))
      return "disagreement on case " + std::to_string(i);
  }
  return {};
}

std::string c5_colimit_invariants() {
  testkit::Rng rng(5);
  int combined = 0;
  for (int i = 0; i < kNetworkCases; ++i) {
    auto rt = testkit::random_taxonomy(rng, 10);
    auto gen = testkit::random_network(rng, rt, 4, 12, 4);
    Network n = make_network("N", gen.patterns, gen.refinements);
    std::string expected = testkit::expected_failure(n, rt);
    try {
      CombinationResult r = combine(n);
      if (!expected.empty()) return "case " + std::to_string(i) + " should fail: " + expected;
      if (auto why = testkit::check_combination(n, r, rt); !why.empty())
        return "case " + std::to_string(i) + ": " + why;
      ++combined;
    } catch (const Error& e) {
      if (to_string(e.kind()) != expected)
        return "case " + std::to_string(i) + " failed unexpectedly: " + e.what();
    }
  }
  if (combined < kNetworkCases / 2) return "too few successful combinations";
  return {};
}

std::string c6_infimum() {
  testkit::Rng rng(6);
  for (int i = 0; i < kInfimumTaxonomies; ++i) {
    auto rt = testkit::random_taxonomy(rng, 15, 0.4);
    auto order = rt.oracle();
    for (std::size_t a = 0; a < rt.refs.size(); ++a) {
      for (std::size_t b = 0; b < rt.refs.size(); ++b) {
        std::vector<ClassRef> pair{rt.refs[a], rt.refs[b]};
        auto got = infimum(rt.tax, pair);
        auto want = order.infimum({a, b});
        if (got.has_value() != want.has_value() || (got && *got != rt.refs[*want]))
          return "disagreement in taxonomy " + std::to_string(i);
      }
    }
  }
  return {};
}

std::string round_trip(const std::string& label, const std::string& text) {
  Library first = load_library(text);
  Library second = load_library(emit_dsl(first));
  if (first.patterns.size() != second.patterns.size()) return label + ": pattern count changed";
  for (const auto& [name, p] : first.patterns) {
    auto it = second.patterns.find(name);
    if (it == second.patterns.end()) return label + ": lost " + name;
    if (!isomorphic(p, it->second)) return label + ": " + name + " changed";
  }
  return {};
}

std::string c7_round_trip() {
  for (const char* file : {"generate_and_train.nesy", "embedding.nesy", "abox.nesy", "hybrid.nesy"}) {
    if (auto why = round_trip(file, text_of(file)); !why.empty()) return why;
  }
  testkit::Rng rng(7);
  for (int i = 0; i < kSyntheticLibraries; ++i) {
    auto doc = testkit::random_document(rng);
    if (auto why = round_trip("synthetic " + std::to_string(i), doc.text); !why.empty())
      return why;
  }
  return {};
}

std::string c8_abox() {
  Library lib = load_library(text_of("abox.nesy"));
  const std::string want =
      "a : Symbol\nprovidesInput(a,b)\nb : Training\nhasOutput(b,c)\nc : Model\n";
  std::string got = render_abox(emit_abox(lib.pattern("Chain")));
  return got == want ? std::string{} : "got:\n" + got;
}

}  // namespace

int main() {
  criterion(1, "worked example combines to the expected pattern", kOneSecond, c1_worked_example);
  criterion(2, "undefined colimit, then Hybrid_Model after extension", kOneSecond,
            c2_undefined_colimit);
  criterion(3, "inline extension: Embedding below Process, 4 nodes / 3 edges", kOneSecond,
            c3_inline_extension);
  criterion(4, "find_homomorphisms equals exhaustive enumeration (200 cases)", kThirtySeconds,
            c4_homomorphism_oracle);
  criterion(5, "colimit cocone, injections and label minimality (200 networks)",
            kThirtySeconds, c5_colimit_invariants);
  criterion(6, "infimum equals brute-force scan on all class pairs", kTenSeconds, c6_infimum);
  criterion(7, "emit_dsl round-trip on corpus and 12 synthetic libraries", kNoLimit,
            c7_round_trip);
  criterion(8, "ABox translation is byte-exact", kNoLimit, c8_abox);
  std::printf("%s: %d of 8 criteria failed\n", failures ? "FAIL" : "PASS", failures);
  return failures ? 1 : 0;
}
