#include <map>
#include <set>

#include "nesy/colimit.hpp"
#include "nesy/dsl.hpp"

namespace nesy {

// ----------------------------------------------------------------- Library

const DeclEntry* Library::entry(const std::string& name) const {
  for (const auto& e : order) {
    if (e.name == name) return &e;
  }
  return nullptr;
}

bool Library::has_name(const std::string& name) const {
  return patterns.contains(name) || combine_defs.contains(name) ||
         refinement_decls.contains(name) || refinements.contains(name) ||
         network_decls.contains(name) || networks.contains(name);
}

const Pattern& Library::pattern(const std::string& name) const {
  if (auto it = patterns.find(name); it != patterns.end()) return it->second;
  if (combine_defs.contains(name)) {
    throw Error(ErrorKind::type_error,
                "pattern '" + name + "' is a combination that has not been "
                "computed yet");
  }
  throw Error(ErrorKind::unknown_name, "unknown pattern '" + name + "'");
}

Refinement resolve_refinement(const ast::RefinementDecl& decl,
                              const Library& lib) {
  auto endpoint = [&](const ast::Name& n) -> const Pattern& {
    try {
      return lib.pattern(n.text);
    } catch (const Error& e) {
      throw e.with_position(n.pos);
    }
  };
  const Pattern& src = endpoint(decl.source);
  const Pattern& tgt = endpoint(decl.target);
  try {
    if (decl.explicit_map) {
      std::vector<std::pair<NodeId, NodeId>> map;
      for (const auto& e : *decl.explicit_map) {
        if (!src.index_of(NodeId(e.from.text))) {
          throw Error(ErrorKind::unknown_node, e.from.pos,
                      "'" + e.from.text + "' is not a node of '" + src.name() + "'");
        }
        if (!tgt.index_of(NodeId(e.to.text))) {
          throw Error(ErrorKind::unknown_node, e.to.pos,
                      "'" + e.to.text + "' is not a node of '" + tgt.name() + "'");
        }
        map.emplace_back(NodeId(e.from.text), NodeId(e.to.text));
      }
      return make_refinement(decl.name.text, src, tgt, map);
    }
    return infer_refinement(decl.name.text, src, tgt);
  } catch (const Error& e) {
    if (e.has_position()) throw;
    throw e.with_position(decl.pos);
  }
}

// ----------------------------------------------------------------- resolve

namespace {

struct Skip {};  // a dependency already failed; stay silent

class Resolver {
 public:
  Resolver(const Catalog& catalog, Diagnostics& diags)
      : catalog_(catalog), diags_(diags) {}

  Library run(const ast::Document& doc) {
    for (const auto& decl : doc.declarations) {
      std::visit([&](const auto& d) { handle(d); }, decl);
    }
    return std::move(lib_);
  }

 private:
  bool claim_name(const ast::Name& n) {
    if (lib_.has_name(n.text) || failed_.contains(n.text)) {
      diags_.error(ErrorKind::duplicate_name, n.pos,
                   "'" + n.text + "' is already declared");
      return false;
    }
    return true;
  }

  template <typename Fn>
  void guarded(const std::string& name, SourcePos pos, Fn&& fn) {
    try {
      fn();
    } catch (const Skip&) {
      failed_.insert(name);
    } catch (const Error& e) {
      diags_.error(e, pos);
      failed_.insert(name);
    }
  }

  // A referenced pattern that is declared (plain or combine-defined).
  bool pattern_known(const ast::Name& n) {
    if (failed_.contains(n.text)) throw Skip{};
    if (lib_.patterns.contains(n.text)) return true;
    if (lib_.combine_defs.contains(n.text)) return false;
    if (lib_.has_name(n.text)) {
      throw Error(ErrorKind::type_error, n.pos, "'" + n.text + "' is not a pattern");
    }
    throw Error(ErrorKind::unknown_name, n.pos, "unknown pattern '" + n.text + "'");
  }

  Taxonomy taxonomy_for(const ast::OntRef& ref) {
    std::string iri;
    try {
      iri = catalog_.expand(ref.base.text);
    } catch (const Error& e) {
      throw e.with_position(ref.base.pos);
    }
    std::string key = iri;
    if (ref.extension) key += " then " + *ref.extension;
    if (auto it = lib_.taxonomies.find(key); it != lib_.taxonomies.end()) {
      return it->second;
    }
    Taxonomy base = [&] {
      if (auto it = lib_.taxonomies.find(iri); it != lib_.taxonomies.end()) {
        return it->second;
      }
      try {
        Diagnostics local;
        Taxonomy t = catalog_.load(iri, &local);
        for (auto d : local.items()) {
          d.pos = ref.base.pos;  // positions refer to the ontology file
          d.message = iri + ": " + d.message;
          diags_.add(std::move(d));
        }
        lib_.taxonomies.emplace(iri, t);
        return t;
      } catch (const Error& e) {
        throw Error(e.kind(), ref.base.pos,
                    e.has_position() && e.kind() != ErrorKind::catalog_miss
                        ? iri + ":" + std::to_string(e.position().line) + ":" +
                              std::to_string(e.position().column) + ": " +
                              e.detail()
                        : e.detail());
      }
    }();
    if (!ref.extension) return base;
    Taxonomy ext = extend(base, *ref.extension, &diags_, ref.extension_pos);
    lib_.taxonomies.emplace(key, ext);
    return ext;
  }

  void handle(const ast::PatternDecl& decl) {
    if (!claim_name(decl.name)) return;
    const std::string& name = decl.name.text;
    guarded(name, decl.pos, [&] {
      if (const auto* c = std::get_if<ast::CombineBody>(&decl.body)) {
        const auto& net = c->network.text;
        if (failed_.contains(net)) throw Skip{};
        if (!lib_.network_decls.contains(net)) {
          throw Error(lib_.has_name(net) ? ErrorKind::type_error
                                         : ErrorKind::unknown_name,
                      c->network.pos, "'" + net + "' is not a declared network");
        }
        lib_.combine_defs[name] = net;
      } else {
        lib_.patterns.emplace(name,
                              build(decl, std::get<ast::DataBody>(decl.body)));
      }
      lib_.order.push_back({DeclKind::pattern, name, decl.pos});
    });
  }

  Pattern build(const ast::PatternDecl& decl, const ast::DataBody& body) {
    Taxonomy tax = taxonomy_for(body.ontology);

    std::set<std::string> explicit_ids;
    for (const auto& chain : body.statements) {
      for (const auto& ref : chain.refs) {
        if (ref.id) explicit_ids.insert(ref.id->text);
      }
    }
    int anon = 0;
    auto fresh = [&] {
      std::string id;
      do {
        id = "anon" + std::to_string(++anon);
      } while (explicit_ids.contains(id));
      return id;
    };

    std::vector<PatternNode> nodes;
    std::map<std::string, std::size_t> by_id;
    std::vector<EdgeDecl> edges;
    for (const auto& chain : body.statements) {
      std::optional<std::string> prev;
      for (const auto& ref : chain.refs) {
        auto cls = tax.find_local(ref.cls.text);
        if (!cls) {
          throw Error(ErrorKind::unknown_class, ref.cls.pos,
                      "unknown class '" + ref.cls.text + "' in pattern '" +
                          decl.name.text + "'");
        }
        std::string id;
        if (ref.id) {
          id = ref.id->text;
          auto it = by_id.find(id);
          if (it == by_id.end()) {
            by_id.emplace(id, nodes.size());
            nodes.push_back({NodeId(id), *cls});
          } else if (nodes[it->second].label != *cls) {
            throw Error(ErrorKind::label_mismatch, ref.id->pos,
                        "node '" + id + "' was declared as '" +
                            nodes[it->second].label.local_name +
                            "' but is used as '" + cls->local_name + "'");
          }
        } else {
          id = fresh();
          by_id.emplace(id, nodes.size());
          nodes.push_back({NodeId(id), *cls});
        }
        if (prev) {
          if (*prev == id) {
            throw Error(ErrorKind::self_loop, ref.cls.pos,
                        "edge from node '" + id + "' to itself");
          }
          edges.push_back({NodeId(*prev), NodeId(id)});
        }
        prev = id;
      }
    }
    try {
      return build_pattern(decl.name.text, tax, nodes, edges);
    } catch (const Error& e) {
      throw e.has_position() ? e : e.with_position(decl.pos);
    }
  }

  void handle(const ast::RefinementDecl& decl) {
    if (!claim_name(decl.name)) return;
    const std::string& name = decl.name.text;
    guarded(name, decl.pos, [&] {
      bool ready = pattern_known(decl.source);
      ready = pattern_known(decl.target) && ready;
      if (ready) lib_.refinements.emplace(name, resolve_refinement(decl, lib_));
      lib_.refinement_decls.emplace(name, decl);
      lib_.order.push_back({DeclKind::refinement, name, decl.pos});
    });
  }

  void handle(const ast::NetworkDecl& decl) {
    if (!claim_name(decl.name)) return;
    const std::string& name = decl.name.text;
    guarded(name, decl.pos, [&] {
      bool ready = true;
      for (const auto& m : decl.members) {
        if (failed_.contains(m.text)) throw Skip{};
        if (lib_.patterns.contains(m.text) || lib_.refinements.contains(m.text)) {
          continue;
        }
        if (lib_.combine_defs.contains(m.text) ||
            lib_.refinement_decls.contains(m.text)) {
          ready = false;
          continue;
        }
        if (lib_.network_decls.contains(m.text)) {
          throw Error(ErrorKind::type_error, m.pos,
                      "'" + m.text + "' is a network, not a pattern or refinement");
        }
        throw Error(ErrorKind::unknown_name, m.pos,
                    "unknown pattern or refinement '" + m.text + "'");
      }
      if (ready) lib_.networks.emplace(name, build_network(decl, lib_));
      lib_.network_decls.emplace(name, decl);
      lib_.order.push_back({DeclKind::network, name, decl.pos});
    });
  }

  const Catalog& catalog_;
  Diagnostics& diags_;
  Library lib_;
  std::set<std::string> failed_;
};

[[noreturn]] void throw_first(const Diagnostics& diags) {
  for (const auto& d : diags.items()) {
    if (d.severity == Severity::error) throw Error(d.kind, d.pos, d.message);
  }
  throw Error(ErrorKind::syntax, "unknown error");
}

}  // namespace

Library resolve(const ast::Document& doc, const Catalog& catalog,
                Diagnostics& diags) {
  return Resolver(catalog, diags).run(doc);
}

Library resolve(const ast::Document& doc, const Catalog& catalog) {
  Diagnostics diags;
  Library lib = resolve(doc, catalog, diags);
  if (diags.has_errors()) throw_first(diags);
  return lib;
}

Library load_library(std::string_view text, const Catalog& catalog) {
  return evaluate_combines(resolve(parse(text), catalog));
}

}  // namespace nesy
