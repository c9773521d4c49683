#include <doctest.h>

#include <filesystem>
#include <fstream>

#include "nesy/catalog.hpp"
#include "nesy/dsl.hpp"
#include "support/testkit.hpp"

using namespace nesy;

namespace {

ErrorKind kind_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("no error raised");
  return ErrorKind::syntax;
}

struct TempDir {
  std::filesystem::path path;
  TempDir() {
    path = std::filesystem::temp_directory_path() /
           ("nesy_catalog_" + std::to_string(std::random_device{}()));
    std::filesystem::create_directories(path);
  }
  ~TempDir() { std::filesystem::remove_all(path); }
  std::filesystem::path write(const std::string& name, const std::string& text) const {
    std::ofstream(path / name) << text;
    return path / name;
  }
};

}  // namespace

TEST_CASE("expansion") {
  Catalog c;
  CHECK(c.expand("ontohub:NeSyPatterns.omn") == "https://ontohub.org/meta/NeSyPatterns.omn");
  CHECK(c.expand("<https://x.org/o>") == "https://x.org/o");
  CHECK(c.expand("https://x.org/o") == "https://x.org/o");
  CHECK(kind_of([&] { c.expand("nowhere:x"); }) == ErrorKind::catalog_miss);
}

TEST_CASE("loading") {
  Catalog c;
  CHECK(c.load("https://ontohub.org/meta/NeSyPatterns.omn").same_hierarchy(default_taxonomy()));
  CHECK(c.load("https://ontohub.org/meta/NeSyPatterns").same_hierarchy(default_taxonomy()));
  CHECK(kind_of([&] { c.load("https://example.org/unknown.omn"); }) ==
        ErrorKind::catalog_miss);
}

TEST_CASE("catalog files") {
  TempDir dir;
  SUBCASE("prefix only, bundled fallback") {
    auto path = dir.write("c.json",
                          R"({"prefixes":{"ontohub":"https://ontohub.org/meta/"},"mappings":{}})");
    Catalog c = load_catalog(path);
    Library lib = load_library(read_file(testkit::corpus("generate_and_train.nesy")), c);
    CHECK(lib.patterns.size() == 4);
  }
  SUBCASE("mapping to a local file") {
    dir.write("mine.omn",
              "Prefix: : <https://example.org/mine#>\nOntology: <https://example.org/mine>\n"
              "Class: Gadget\nClass: Widget SubClassOf: Gadget\n");
    auto path = dir.write("c.json",
                          R"({"prefixes":{"ex":"https://example.org/"},)"
                          R"("mappings":{"https://example.org/mine.omn":"mine.omn"}})");
    Catalog c = load_catalog(path);
    Library lib = load_library(
        "logic NeSyPatterns\npattern P = data ex:mine.omn w : Widget -> g : Gadget; end\n", c);
    const Taxonomy& t = lib.pattern("P").taxonomy();
    CHECK(leq(t, t.get("Widget"), t.get("Gadget")));
    CHECK_FALSE(t.find_local("Model").has_value());
  }
  SUBCASE("errors") {
    CHECK(kind_of([&] { load_catalog(dir.write("bad.json", "{nope")); }) ==
          ErrorKind::catalog_error);
    CHECK(kind_of([&] { load_catalog(dir.write("bad2.json", R"({"prefixes":[1]})")); }) ==
          ErrorKind::catalog_error);
    CHECK(kind_of([&] {
            load_catalog(dir.write("gone.json", R"({"mappings":{"urn:x":"missing.omn"}})"));
          }) == ErrorKind::io_error);
    CHECK(kind_of([&] { load_catalog(dir.path / "absent.json"); }) == ErrorKind::io_error);
  }
}
