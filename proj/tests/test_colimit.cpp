#include <doctest.h>

#include "nesy/colimit.hpp"
#include "nesy/dsl.hpp"
#include "support/testkit.hpp"

using namespace nesy;

namespace {

Library load(std::string_view file) {
  return load_library(read_file(testkit::corpus(file)));
}

Error error_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e;
  }
  FAIL("no error raised");
  return Error(ErrorKind::syntax, "");
}

/// The combination as drawn for the worked example.
Pattern expected_combination() {
  const Taxonomy& t = default_taxonomy();
  std::vector<PatternNode> ns{
      {NodeId("s1"), t.get("Symbol")},  {NodeId("tr"), t.get("Training")},
      {NodeId("m"), t.get("Semantic_Model")}, {NodeId("s2"), t.get("Symbol")},
      {NodeId("d"), t.get("Deduction")}, {NodeId("s3"), t.get("Symbol")}};
  std::vector<EdgeDecl> es{{NodeId("s1"), NodeId("tr")}, {NodeId("tr"), NodeId("m")},
                           {NodeId("s2"), NodeId("d")},  {NodeId("d"), NodeId("s3")},
                           {NodeId("m"), NodeId("d")}};
  return build_pattern("Expected", t, ns, es);
}

}  // namespace

TEST_CASE("worked example combination") {
  Library lib = load("generate_and_train.nesy");
  const Pattern& p = lib.pattern("SemanticGenerateAndTrain");
  CHECK(isomorphic(p, expected_combination()));
  CHECK(testkit::isomorphic_oracle(p, expected_combination()));

  CombinationResult r = combine(lib.networks.at("N"));
  CHECK(r.pattern.name() == "N");
  CHECK(r.injections.size() == 3);
  auto m = r.pattern.index_of(NodeId("Model_anon1"));
  REQUIRE(m);
  CHECK(r.pattern.label(*m).local_name == "Semantic_Model");
  CHECK(r.classes[*m].size() == 3);
}

TEST_CASE("a one-pattern network combines to itself") {
  Library lib = load("generate_and_train.nesy");
  Network n = make_network("Solo", {lib.pattern("SemanticDeduction")}, {});
  CombinationResult r = combine(n);
  CHECK(isomorphic(r.pattern, lib.pattern("SemanticDeduction")));
  std::vector<std::size_t> image = r.injections[0];
  std::sort(image.begin(), image.end());
  for (std::size_t i = 0; i < image.size(); ++i) CHECK(image[i] == i);
}

TEST_CASE("no refinements gives the disjoint union") {
  Library lib = load("generate_and_train.nesy");
  Network n = make_network("U", {lib.pattern("Train"), lib.pattern("SemanticDeduction"),
                                 lib.pattern("Model")}, {});
  CHECK(combine(n).pattern.size() == 3 + 4 + 1);
}

TEST_CASE("undefined colimit and its repair") {
  Error e = error_of([] { load("clash.nesy"); });
  CHECK(e.kind() == ErrorKind::undefined_colimit);
  std::string msg = e.what();
  CHECK(msg.find("Semantic_Model") != std::string::npos);
  CHECK(msg.find("Statistical_Model") != std::string::npos);

  Library lib = load("hybrid.nesy");
  const Pattern& p = lib.pattern("HybridCombination");
  CHECK(p.size() == 6);
  int hybrid = 0;
  for (const auto& n : p.nodes()) hybrid += n.label.local_name == "Hybrid_Model";
  CHECK(hybrid == 1);
}

TEST_CASE("degenerate loop") {
  Error e = error_of([] { load("loop.nesy"); });
  CHECK(e.kind() == ErrorKind::degenerate_loop);
}

TEST_CASE("evaluate_combines") {
  const std::string head =
      "logic NeSyPatterns\npattern M = data ontohub:NeSyPatterns.omn Model; end\n";
  SUBCASE("library without combinations is unchanged") {
    Library lib = resolve(parse(head), Catalog{});
    Library out = evaluate_combines(lib);
    CHECK(emit_dsl(out) == emit_dsl(lib));
    CHECK(out.patterns.at("M") == lib.patterns.at("M"));
  }
  SUBCASE("combinations can feed later declarations") {
    Library lib = load_library(head +
                               "network A = M end\n"
                               "pattern C1 = combine A end\n"
                               "refinement R = M refined to C1 end\n"
                               "network B = C1, R end\n"
                               "pattern C2 = combine B end\n");
    CHECK(lib.pattern("C2").size() == 1);
  }
  SUBCASE("cyclic combinations") {
    // A network cannot name a combination declared after it, so the only way
    // to close a loop is through a refinement endpoint that is combine-defined.
    Diagnostics d;
    Library lib = resolve(parse(head +
                                "network A = M end\n"
                                "pattern C = combine A end\n"),
                          Catalog{}, d);
    lib.network_decls.at("A").members.push_back({"C", {}});
    lib.networks.erase("A");
    Library out = evaluate_combines(lib, d);
    REQUIRE(d.has_errors());
    CHECK(d.items().back().kind == ErrorKind::cyclic_combine);
    CHECK_FALSE(out.patterns.contains("C"));
  }
}

TEST_CASE("cocone, minimality and closure on random networks") {
  testkit::Rng rng(9001);
  int combined = 0, failed = 0;
  for (int round = 0; round < 200; ++round) {
    auto rt = testkit::random_taxonomy(rng, 8);
    auto gen = testkit::random_network(rng, rt, 4, 12, 4);
    Network n = make_network("N", gen.patterns, gen.refinements);
    std::string expect = testkit::expected_failure(n, rt);
    try {
      CombinationResult r = combine(n);
      REQUIRE(expect.empty());
      CHECK(testkit::check_combination(n, r, rt) == "");
      ++combined;

      auto shuffled = gen.patterns;
      std::shuffle(shuffled.begin(), shuffled.end(), rng);
      CHECK(isomorphic(combine(make_network("N", shuffled, gen.refinements)).pattern,
                       r.pattern));
    } catch (const Error& e) {
      ++failed;
      CHECK(to_string(e.kind()) == (expect.empty() ? "?" : expect));
    }
  }
  CHECK(combined > 100);
}
