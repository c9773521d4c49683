#include <doctest.h>

#include "nesy/dsl.hpp"
#include "nesy/network.hpp"
#include "support/testkit.hpp"

using namespace nesy;

namespace {

const Library& worked() {
  static const Library lib = load_library(read_file(testkit::corpus("generate_and_train.nesy")));
  return lib;
}

ErrorKind kind_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("no error raised");
  return ErrorKind::syntax;
}

ast::NetworkDecl decl(std::vector<std::string> members) {
  ast::NetworkDecl d;
  d.name = {"N", {}};
  for (auto& m : members) d.members.push_back({m, {}});
  return d;
}

}  // namespace

TEST_CASE("worked example network") {
  const Network& n = worked().networks.at("N");
  REQUIRE(n.patterns.size() == 3);
  CHECK(n.patterns[0].name() == "Model");
  CHECK(n.patterns[1].name() == "SemanticDeduction");
  CHECK(n.patterns[2].name() == "Train");
  REQUIRE(n.refinements.size() == 2);
  for (const auto& e : n.refinements) {
    CHECK(e.source == *n.index_of("Model"));
    CHECK(check_refinement(n.patterns[e.source], n.patterns[e.target],
                           e.refinement.node_map)
              .empty());
  }
}

TEST_CASE("member order and duplicates do not matter") {
  Network a = build_network(decl({"Train", "SemanticDeduction", "R1", "R2"}), worked());
  Network b = build_network(decl({"R2", "R1", "Train", "R2", "SemanticDeduction"}), worked());
  Network c = build_network(decl({"R1", "R2"}), worked());
  CHECK(a == b);
  CHECK(a == c);
}

TEST_CASE("network errors") {
  CHECK(build_network(decl({"Model"}), worked()).patterns.size() == 1);
  CHECK(kind_of([] { build_network(decl({"Nope"}), worked()); }) == ErrorKind::unknown_name);
  CHECK(kind_of([] { build_network(decl({"N"}), worked()); }) == ErrorKind::type_error);
  CHECK(kind_of([] { make_network("E", {}, {}); }) == ErrorKind::type_error);

  SUBCASE("mixing hierarchies") {
    Library ext = load_library(read_file(testkit::corpus("embedding.nesy")));
    const Pattern& emb = ext.pattern("Embedding");
    CHECK(kind_of([&] {
            make_network("M", {worked().pattern("Train"), emb}, {});
          }) == ErrorKind::taxonomy_mismatch);
    std::string text =
        read_file(testkit::corpus("embedding.nesy")) +
        "pattern Plain = data ontohub:NeSyPatterns.omn Symbol; end\n"
        "refinement R = Plain refined to Embedding end\n";
    CHECK(kind_of([&] { load_library(text); }) == ErrorKind::taxonomy_mismatch);
  }
  SUBCASE("conflicting members with one name") {
    Pattern other = worked().pattern("Model").renamed("Train");
    CHECK(kind_of([&] {
            make_network("M", {worked().pattern("Train"), other}, {});
          }) == ErrorKind::type_error);
  }
  SUBCASE("refinement that does not check") {
    Refinement bad{"Bad", worked().pattern("Model"), worked().pattern("Train"), NodeMap{0}};
    CHECK(kind_of([&] { make_network("M", {}, {bad}); }) == ErrorKind::type_error);
  }
}

TEST_CASE("random networks satisfy the network invariants") {
  testkit::Rng rng(606);
  for (int round = 0; round < 100; ++round) {
    auto rt = testkit::random_taxonomy(rng, 8);
    auto gen = testkit::random_network(rng, rt, 4, 12, 4);
    auto patterns = gen.patterns;
    std::shuffle(patterns.begin(), patterns.end(), rng);
    Network n = make_network("N", patterns, gen.refinements);
    CHECK(std::is_sorted(n.patterns.begin(), n.patterns.end(),
                         [](const Pattern& a, const Pattern& b) { return a.name() < b.name(); }));
    for (const auto& e : n.refinements) {
      CHECK(n.patterns[e.source].name() == e.refinement.source.name());
      CHECK(n.patterns[e.target].name() == e.refinement.target.name());
      CHECK(check_refinement(n.patterns[e.source], n.patterns[e.target],
                             e.refinement.node_map)
                .empty());
    }
    CHECK(make_network("N", gen.patterns, gen.refinements) == n);
  }
}
