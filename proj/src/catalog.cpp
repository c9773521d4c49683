#include "nesy/catalog.hpp"

#include <fstream>
#include <sstream>

#include <httplib.h>
#include <json.hpp>

namespace nesy {

namespace {

bool is_builtin_iri(std::string_view iri) {
  return iri == kDefaultOntologyIri || iri == kDefaultOntologySource;
}

std::string fetch(const std::string& iri) {
  auto scheme_end = iri.find("://");
  if (scheme_end == std::string::npos) {
    throw Error(ErrorKind::catalog_miss, "cannot fetch '" + iri + "'");
  }
  auto path_start = iri.find('/', scheme_end + 3);
  std::string origin = iri.substr(0, path_start);
  std::string path = path_start == std::string::npos ? "/" : iri.substr(path_start);
  httplib::Client client(origin);
  client.set_follow_location(true);
  auto res = client.Get(path);
  if (!res || res->status != 200) {
    throw Error(ErrorKind::catalog_miss,
                "fetching '" + iri + "' failed" +
                    (res ? " with HTTP status " + std::to_string(res->status)
                         : std::string()));
  }
  return res->body;
}

}  // namespace

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw Error(ErrorKind::io_error, "cannot read '" + path.string() + "'");
  }
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Catalog::Catalog() { prefixes["ontohub"] = "https://ontohub.org/meta/"; }

std::string Catalog::expand(std::string_view reference) const {
  if (reference.size() >= 2 && reference.front() == '<' &&
      reference.back() == '>') {
    return std::string(reference.substr(1, reference.size() - 2));
  }
  auto colon = reference.find(':');
  if (colon == std::string_view::npos) {
    throw Error(ErrorKind::catalog_miss,
                "ontology reference '" + std::string(reference) +
                    "' is neither a CURIE nor an <IRI>");
  }
  std::string prefix(reference.substr(0, colon));
  auto it = prefixes.find(prefix);
  if (it == prefixes.end()) {
    // Absolute IRIs written without angle brackets.
    if (reference.substr(colon, 3) == "://") return std::string(reference);
    throw Error(ErrorKind::catalog_miss,
                "unknown prefix '" + prefix + "' in ontology reference '" +
                    std::string(reference) + "'");
  }
  return it->second + std::string(reference.substr(colon + 1));
}

Taxonomy Catalog::load(std::string_view iri, Diagnostics* sink) const {
  std::string key(iri);
  if (auto it = mappings.find(key); it != mappings.end()) {
    return parse_taxonomy(read_file(it->second), sink).with_source({key, {}});
  }
  if (is_builtin_iri(iri)) return default_taxonomy().with_source({key, {}});
  if (allow_fetch) return parse_taxonomy(fetch(key), sink).with_source({key, {}});
  throw Error(ErrorKind::catalog_miss,
              "no catalog mapping for ontology '" + key +
                  "' (network fetching is disabled)");
}

Catalog parse_catalog(std::string_view json_text,
                      const std::filesystem::path& base_dir) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorKind::catalog_error,
                std::string("malformed catalog JSON: ") + e.what());
  }
  if (!j.is_object()) {
    throw Error(ErrorKind::catalog_error, "catalog must be a JSON object");
  }
  Catalog cat;
  auto string_map = [&](const char* key) {
    std::map<std::string, std::string> out;
    if (!j.contains(key)) return out;
    const auto& v = j.at(key);
    if (!v.is_object()) {
      throw Error(ErrorKind::catalog_error,
                  std::string("catalog key '") + key + "' must be an object");
    }
    for (const auto& [k, val] : v.items()) {
      if (!val.is_string()) {
        throw Error(ErrorKind::catalog_error, std::string("catalog '") + key +
                                                  "' entry '" + k +
                                                  "' must be a string");
      }
      out[k] = val.get<std::string>();
    }
    return out;
  };
  for (auto& [k, v] : string_map("prefixes")) cat.prefixes[k] = v;
  for (auto& [iri, file] : string_map("mappings")) {
    std::filesystem::path p(file);
    if (p.is_relative() && !base_dir.empty()) p = base_dir / p;
    std::ifstream probe(p);
    if (!probe) {
      throw Error(ErrorKind::io_error, "catalog maps '" + iri +
                                           "' to unreadable file '" +
                                           p.string() + "'");
    }
    cat.mappings[iri] = p;
  }
  if (j.contains("allow_fetch")) {
    if (!j["allow_fetch"].is_boolean()) {
      throw Error(ErrorKind::catalog_error, "'allow_fetch' must be a boolean");
    }
    cat.allow_fetch = j["allow_fetch"].get<bool>();
  }
  return cat;
}

Catalog load_catalog(const std::filesystem::path& path) {
  return parse_catalog(read_file(path), path.parent_path());
}

}  // namespace nesy
