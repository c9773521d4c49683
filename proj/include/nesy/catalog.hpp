#pragma once

#include <filesystem>
#include <map>
#include <string>
#include <string_view>

#include "nesy/taxonomy.hpp"

namespace nesy {

/// Resolves ontology references (CURIEs or IRIs) to taxonomies: user
/// mappings first, then the bundled NeSyPatterns ontology, then an HTTP
/// fetch when allowed.
struct Catalog {
  /// prefix (without ':') -> IRI base. Contains `ontohub` unless overridden.
  std::map<std::string, std::string> prefixes;
  /// IRI -> local .omn file.
  std::map<std::string, std::filesystem::path> mappings;
  bool allow_fetch = false;

  Catalog();

  /// `<iri>` or `prefix:rest` to a full IRI. Throws CatalogMiss for an
  /// unknown prefix.
  std::string expand(std::string_view reference) const;

  /// Loads the taxonomy for an expanded IRI. Throws CatalogMiss, IOError,
  /// or the Manchester reader's errors. Warnings go to `sink`.
  Taxonomy load(std::string_view iri, Diagnostics* sink = nullptr) const;
};

/// Reads a JSON catalog: {"prefixes": {...}, "mappings": {...},
/// "allow_fetch": bool}. Relative mapping paths are taken relative to the
/// catalog file. Throws CatalogError (malformed) or IOError (unreadable).
Catalog load_catalog(const std::filesystem::path& path);
Catalog parse_catalog(std::string_view json_text,
                      const std::filesystem::path& base_dir = {});

/// Whole-file read; throws IOError.
std::string read_file(const std::filesystem::path& path);

}  // namespace nesy
