#include <doctest.h>

#include "nesy/colimit.hpp"
#include "nesy/dsl.hpp"
#include "support/documents.hpp"

using namespace nesy;

namespace {

std::string train_text() { return read_file(testkit::corpus("generate_and_train.nesy")); }
std::string embedding_text() { return read_file(testkit::corpus("embedding.nesy")); }

std::string doc_with(std::string_view body) {
  return "logic NeSyPatterns\npattern P = data ontohub:NeSyPatterns.omn\n" +
         std::string(body) + "\nend\n";
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

Error error_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e;
  }
  FAIL("no error raised");
  return Error(ErrorKind::syntax, "");
}

void check_round_trip(const Library& lib) {
  std::string text = emit_dsl(lib);
  Library back = evaluate_combines(resolve(parse(text), Catalog{}));
  REQUIRE(back.patterns.size() == lib.patterns.size());
  for (const auto& [name, p] : lib.patterns) {
    REQUIRE(back.patterns.contains(name));
    CHECK(isomorphic(p, back.patterns.at(name)));
  }
  CHECK(back.refinements.size() == lib.refinements.size());
  for (const auto& [name, r] : lib.refinements) {
    CHECK(back.refinements.at(name).id_map() == r.id_map());
  }
  CHECK(emit_dsl(back) == text);
}

}  // namespace

TEST_CASE("parse the worked examples") {
  ast::Document d = parse(train_text());
  REQUIRE(d.declarations.size() == 7);
  int patterns = 0, combines = 0, refinements = 0, networks = 0;
  for (const auto& decl : d.declarations) {
    if (auto* p = std::get_if<ast::PatternDecl>(&decl)) {
      ++patterns;
      combines += p->is_combine();
    } else if (std::holds_alternative<ast::RefinementDecl>(decl)) {
      ++refinements;
    } else {
      ++networks;
    }
  }
  CHECK(patterns == 4);
  CHECK(combines == 1);
  CHECK(refinements == 2);
  CHECK(networks == 1);

  ast::Document e = parse(embedding_text());
  REQUIRE(e.declarations.size() == 1);
  const auto& p = std::get<ast::PatternDecl>(e.declarations[0]);
  const auto& body = std::get<ast::DataBody>(p.body);
  REQUIRE(body.ontology.extension.has_value());
  CHECK(*body.ontology.extension == "Class Embedding SubClassOf: Transformation");

  CHECK(parse("logic NeSyPatterns").declarations.empty());
  CHECK(parse("logic NeSyPatterns %% nothing else\n").declarations.empty());
}

TEST_CASE("syntax errors") {
  auto e = error_of([] { parse("logic NeSyPatterns\npattern = data x end"); });
  CHECK(e.kind() == ErrorKind::syntax);
  CHECK(e.position().line == 2);
  CHECK(e.position().column == 9);
  CHECK(std::string(e.what()).find("expected") != std::string::npos);

  CHECK(kind_of([] { parse("pattern P = data x end"); }) == ErrorKind::syntax);
  CHECK(kind_of([] { parse(doc_with("a : Symbol ->;")); }) == ErrorKind::syntax);
  CHECK(kind_of([] { parse("logic NeSyPatterns\nnetwork N = end"); }) == ErrorKind::syntax);
  CHECK(kind_of([] {
          parse("logic NeSyPatterns\nrefinement R = A refined B end");
        }) == ErrorKind::syntax);
  CHECK(kind_of([] { parse(doc_with("Symbol")); }) == ErrorKind::syntax);
  CHECK(kind_of([] { parse(doc_with("end : Symbol;")); }) == ErrorKind::syntax);
}

TEST_CASE("pattern bodies") {
  SUBCASE("identifiers join nodes") {
    Library lib = load_library(doc_with(
        "Symbol -> d : Deduction -> Symbol;\nSemantic_Model -> d : Deduction;"));
    const Pattern& p = lib.pattern("P");
    CHECK(p.size() == 4);
    CHECK(p.edges().size() == 3);
    int symbols = 0, deductions = 0;
    for (const auto& n : p.nodes()) {
      symbols += n.label.local_name == "Symbol";
      deductions += n.label.local_name == "Deduction";
    }
    CHECK(symbols == 2);
    CHECK(deductions == 1);
  }
  SUBCASE("single node") {
    Pattern p = load_library(doc_with("Model;")).pattern("P");
    CHECK(p.size() == 1);
    CHECK(p.edges().empty());
    CHECK(p.node(0).id.str() == "anon1");
  }
  SUBCASE("generated ids skip explicit ones") {
    Pattern p = load_library(doc_with("anon1 : Model; Symbol;")).pattern("P");
    CHECK(p.node(1).id.str() == "anon2");
  }
  SUBCASE("label mismatch") {
    auto e = error_of([] {
      load_library(doc_with("d : Deduction -> d2 : Deduction;\nd : Training;"));
    });
    CHECK(e.kind() == ErrorKind::label_mismatch);
    CHECK(e.position().line == 4);
  }
  SUBCASE("unknown class and self loop") {
    CHECK(kind_of([] { load_library(doc_with("Banana;")); }) == ErrorKind::unknown_class);
    CHECK(kind_of([] { load_library(doc_with("a : Model -> a : Model;")); }) ==
          ErrorKind::self_loop);
  }
  SUBCASE("repeated chains are idempotent") {
    Pattern p = load_library(doc_with(
        "a : Symbol -> b : Training; a : Symbol -> b : Training;")).pattern("P");
    CHECK(p.edges().size() == 1);
  }
  SUBCASE("inline extension") {
    Library lib = load_library(embedding_text());
    const Pattern& p = lib.pattern("Embedding");
    CHECK(p.size() == 4);
    CHECK(p.edges().size() == 3);
    const Taxonomy& t = p.taxonomy();
    CHECK(leq(t, t.get("Embedding"), t.get("Process")));
  }
}

TEST_CASE("name resolution") {
  const std::string head = "logic NeSyPatterns\n";
  const std::string a = "pattern A = data ontohub:NeSyPatterns.omn Model; end\n";
  CHECK(kind_of([&] { load_library(head + a + a); }) == ErrorKind::duplicate_name);
  CHECK(kind_of([&] {
          load_library(head + "refinement R = A refined to A end\n" + a);
        }) == ErrorKind::unknown_name);
  CHECK(kind_of([&] {
          load_library(head + "pattern A = data nowhere:X.omn Model; end\n");
        }) == ErrorKind::catalog_miss);
  CHECK(kind_of([&] {
          load_library(head + a + "refinement R = A refined to A via anon1 |-> ghost end\n");
        }) == ErrorKind::unknown_node);

  SUBCASE("resolution keeps going after an error") {
    Diagnostics d;
    Library lib = resolve(parse(head + "pattern Bad = data ontohub:NeSyPatterns.omn Banana; end\n" + a),
                          Catalog{}, d);
    CHECK(d.error_count() == 1);
    CHECK(lib.patterns.contains("A"));
    CHECK_FALSE(lib.patterns.contains("Bad"));
  }
}

TEST_CASE("diagnostic positions stay inside the input") {
  const std::vector<std::string> bad = {
      doc_with("Banana;"),
      doc_with("a : Model -> a : Model;"),
      doc_with("d : Deduction; d : Training;"),
      "logic NeSyPatterns\nrefinement R = X refined to Y end\n",
      "logic NeSyPatterns\npattern P = data { ontohub:NeSyPatterns.omn then Class: Q SubClassOf: Missing } Q; end\n",
      read_file(testkit::corpus("clash.nesy")),
      read_file(testkit::corpus("loop.nesy")),
  };
  for (const auto& text : bad) {
    Diagnostics d;
    try {
      Library lib = resolve(parse(text), Catalog{}, d);
      evaluate_combines(lib, d);
    } catch (const Error& e) {
      d.error(e, {});
    }
    REQUIRE(d.has_errors());
    int lines = 1 + static_cast<int>(std::count(text.begin(), text.end(), '\n'));
    for (const auto& item : d.items()) {
      CHECK(item.pos.line >= 1);
      CHECK(item.pos.line <= lines);
      CHECK(item.pos.column >= 1);
    }
  }
}

TEST_CASE("extension errors point into the fragment") {
  Diagnostics d;
  std::string text =
      "logic NeSyPatterns\npattern P = data { ontohub:NeSyPatterns.omn\n"
      "  then Class: Q SubClassOf: Missing }\n  Q;\nend\n";
  resolve(parse(text), Catalog{}, d);
  REQUIRE(d.has_errors());
  CHECK(d.items()[0].kind == ErrorKind::unknown_class);
  CHECK(d.items()[0].pos.line == 3);
}

TEST_CASE("resolution is deterministic") {
  std::string text = train_text();
  Library a = load_library(text);
  Library b = load_library(text);
  CHECK(emit_dsl(a) == emit_dsl(b));
  for (const auto& [name, p] : a.patterns) CHECK(p == b.patterns.at(name));
  for (const auto& [name, n] : a.networks) CHECK(n == b.networks.at(name));
}

TEST_CASE("emit_dsl") {
  CHECK(emit_dsl(Library{}) == "logic NeSyPatterns\n");
  check_round_trip(load_library(train_text()));
  check_round_trip(load_library(embedding_text()));
  check_round_trip(load_library(read_file(testkit::corpus("hybrid.nesy"))));
}

TEST_CASE("random documents round-trip") {
  testkit::Rng rng(1234);
  int combined = 0;
  for (int round = 0; round < 60; ++round) {
    auto doc = testkit::random_document(rng);
    CAPTURE(doc.text);
    Library lib = load_library(doc.text);
    for (const auto& [name, p] : doc.patterns) {
      CHECK(isomorphic(lib.pattern(name), p));
    }
    if (!doc.combined.empty()) {
      ++combined;
      CHECK(lib.patterns.contains(doc.combined));
    }
    check_round_trip(lib);
  }
  CHECK(combined > 10);
}
