#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "nesy/ast.hpp"
#include "nesy/refinement.hpp"

namespace nesy {

struct Library;

/// A refinement edge between two member patterns (indices into
/// Network::patterns).
struct NetworkEdge {
  Refinement refinement;
  std::size_t source = 0;
  std::size_t target = 0;
};

/// Patterns (sorted by name) glued by refinements (sorted by name).
struct Network {
  std::string name;
  std::vector<Pattern> patterns;
  std::vector<NetworkEdge> refinements;

  const Taxonomy& taxonomy() const { return patterns.front().taxonomy(); }
  std::optional<std::size_t> index_of(std::string_view pattern_name) const;

  friend bool operator==(const Network& a, const Network& b);
};

/// Canonicalizes members: endpoints of refinements are added implicitly,
/// duplicates removed, both families sorted by name.
/// Errors: TaxonomyMismatch, TypeError (conflicting members with one name,
/// a refinement that does not check between its endpoints, no patterns).
Network make_network(std::string name, std::vector<Pattern> patterns,
                     std::vector<Refinement> refinements);

/// Resolves a network declaration against a library.
/// Errors: UnknownName, TypeError (member is a network, or names a pending
/// combination), plus those of make_network.
Network build_network(const ast::NetworkDecl& decl, const Library& lib);

}  // namespace nesy
