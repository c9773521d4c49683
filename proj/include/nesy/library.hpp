#pragma once

#include <map>
#include <string>
#include <vector>

#include "nesy/ast.hpp"
#include "nesy/network.hpp"
#include "nesy/refinement.hpp"

namespace nesy {

enum class DeclKind { pattern, refinement, network };

struct DeclEntry {
  DeclKind kind;
  std::string name;
  SourcePos pos;
};

/// A resolved document. `order` records declarations in source order and
/// drives emission and evaluation. Refinements and networks that depend on a
/// not-yet-computed combination live only in the *_decls maps until
/// evaluate_combines materializes them.
struct Library {
  std::vector<DeclEntry> order;
  std::map<std::string, Taxonomy> taxonomies;
  std::map<std::string, Pattern> patterns;
  std::map<std::string, Refinement> refinements;
  std::map<std::string, Network> networks;
  /// combine-defined pattern name -> network name
  std::map<std::string, std::string> combine_defs;
  std::map<std::string, ast::RefinementDecl> refinement_decls;
  std::map<std::string, ast::NetworkDecl> network_decls;

  /// Throws UnknownName (or TypeError for a pending combination).
  const Pattern& pattern(const std::string& name) const;
  bool has_name(const std::string& name) const;
  const DeclEntry* entry(const std::string& name) const;
};

/// Builds a refinement from its declaration: explicit `via` map if present,
/// otherwise inferred. Endpoints must be available in lib.patterns.
Refinement resolve_refinement(const ast::RefinementDecl& decl,
                              const Library& lib);

}  // namespace nesy
