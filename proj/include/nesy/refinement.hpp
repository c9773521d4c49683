#pragma once

#include <cstddef>
#include <limits>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "nesy/pattern.hpp"

namespace nesy {

/// Source node index -> target node index.
using NodeMap = std::vector<std::size_t>;
inline constexpr std::size_t kNoImage = std::numeric_limits<std::size_t>::max();

/// A pattern homomorphism under which labels may only move down the
/// hierarchy: lab(map(n)) <= lab(n).
struct Refinement {
  std::string name;
  Pattern source;
  Pattern target;
  NodeMap node_map;

  const NodeId& image(const NodeId& source_node) const;
  /// (source id, target id) pairs in source node order.
  std::vector<std::pair<NodeId, NodeId>> id_map() const;
};

struct Violation {
  enum class Kind {
    missing_image,
    unknown_node,
    conflicting_image,
    edge_not_preserved,
    label_not_refined,
  };
  Kind kind;
  std::string message;
};

/// Reports every way `map` fails to be a refinement from `src` to `tgt`;
/// empty means ok. Throws TaxonomyMismatch if the hierarchies differ.
std::vector<Violation> check_refinement(const Pattern& src, const Pattern& tgt,
                                        const NodeMap& map);
std::vector<Violation> check_refinement(
    const Pattern& src, const Pattern& tgt,
    std::span<const std::pair<NodeId, NodeId>> map);

/// Backtracking enumeration of refinement maps. Source nodes are assigned in
/// decreasing degree order (declaration order breaks ties), target
/// candidates in ascending index order; at most `limit` maps are returned.
std::vector<NodeMap> find_homomorphisms(const Pattern& src, const Pattern& tgt,
                                        std::size_t limit);

/// The unique refinement from `src` to `tgt`.
/// Errors: NoRefinement, AmbiguousRefinement (message lists two witnesses),
/// TaxonomyMismatch.
Refinement infer_refinement(std::string name, const Pattern& src,
                            const Pattern& tgt);

/// Builds a refinement from an explicit id map; throws InvalidRefinement
/// listing all violations.
Refinement make_refinement(std::string name, const Pattern& src,
                           const Pattern& tgt,
                           std::span<const std::pair<NodeId, NodeId>> map);

/// `src_node |-> tgt_node` text of a map, one pair per entry, comma-separated.
std::string describe_map(const Pattern& src, const Pattern& tgt,
                         const NodeMap& map);

}  // namespace nesy
