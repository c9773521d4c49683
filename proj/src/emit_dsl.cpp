#include <sstream>

#include "nesy/dsl.hpp"

namespace nesy {

namespace {

std::string data_clause(const Taxonomy& t) {
  const auto& src = t.source();
  std::string base = "<" + (src.iri.empty() ? t.ontology_iri() : src.iri) + ">";
  if (src.extensions.empty()) return "data " + base;
  std::string out = "data { " + base;
  for (const auto& ext : src.extensions) out += "\n         then " + ext;
  return out + " }";
}

void write_pattern_body(std::ostream& os, const Pattern& p) {
  os << "pattern " << p.name() << " =\n  " << data_clause(p.taxonomy()) << "\n";
  auto ref = [&](std::size_t i) {
    return p.node(i).id.str() + " : " + p.label(i).local_name;
  };
  for (std::size_t i = 0; i < p.size(); ++i) os << "  " << ref(i) << ";\n";
  for (auto [a, b] : p.edges()) os << "  " << ref(a) << " -> " << ref(b) << ";\n";
  os << "end\n";
}

void write_refinement(std::ostream& os, const std::string& name,
                      const std::string& source, const std::string& target,
                      const std::vector<std::pair<std::string, std::string>>& map,
                      bool explicit_map) {
  os << "refinement " << name << " = " << source << " refined to " << target;
  if (explicit_map && !map.empty()) {
    os << "\n  via ";
    for (std::size_t k = 0; k < map.size(); ++k) {
      if (k) os << ", ";
      os << map[k].first << " |-> " << map[k].second;
    }
  }
  os << "\nend\n";
}

}  // namespace

std::string emit_dsl(const Library& lib) {
  std::ostringstream os;
  os << "logic NeSyPatterns\n";
  for (const auto& e : lib.order) {
    os << "\n";
    switch (e.kind) {
      case DeclKind::pattern:
        if (auto c = lib.combine_defs.find(e.name); c != lib.combine_defs.end()) {
          os << "pattern " << e.name << " =\n  combine " << c->second << "\nend\n";
        } else {
          write_pattern_body(os, lib.patterns.at(e.name));
        }
        break;
      case DeclKind::refinement:
        if (auto r = lib.refinements.find(e.name); r != lib.refinements.end()) {
          std::vector<std::pair<std::string, std::string>> map;
          for (const auto& [from, to] : r->second.id_map()) {
            map.emplace_back(from.str(), to.str());
          }
          write_refinement(os, e.name, r->second.source.name(),
                           r->second.target.name(), map, true);
        } else {
          const auto& d = lib.refinement_decls.at(e.name);
          std::vector<std::pair<std::string, std::string>> map;
          if (d.explicit_map) {
            for (const auto& m : *d.explicit_map) map.emplace_back(m.from.text, m.to.text);
          }
          write_refinement(os, e.name, d.source.text, d.target.text, map,
                           d.explicit_map.has_value());
        }
        break;
      case DeclKind::network: {
        const auto& d = lib.network_decls.at(e.name);
        os << "network " << e.name << " =\n  ";
        for (std::size_t k = 0; k < d.members.size(); ++k) {
          if (k) os << ", ";
          os << d.members[k].text;
        }
        os << "\nend\n";
        break;
      }
    }
  }
  return os.str();
}

std::string emit_dsl(const Pattern& p) {
  std::ostringstream os;
  os << "logic NeSyPatterns\n\n";
  write_pattern_body(os, p);
  return os.str();
}

}  // namespace nesy
