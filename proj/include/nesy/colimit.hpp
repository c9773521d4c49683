#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "nesy/library.hpp"
#include "nesy/network.hpp"

namespace nesy {

/// A member node of the disjoint union: (pattern index, node index).
using MemberNode = std::pair<std::size_t, std::size_t>;

struct CombinationResult {
  /// The glued pattern.
  Pattern pattern;
  /// The network's patterns, in pattern-index order.
  std::vector<Pattern> sources;
  /// injections[i][n] = result node of node n of pattern i.
  std::vector<NodeMap> injections;
  /// classes[r] = all member nodes glued into result node r (sorted).
  std::vector<std::vector<MemberNode>> classes;
};

/// Glues the network's patterns along its refinements: disjoint union of the
/// node sets, quotient by the equivalence the refinements generate, labels
/// the infimum over each class, edges the images of member edges.
/// Result node ids are the least "pattern.node" name of the class with '.'
/// replaced by '_' (numeric suffix on collision); nodes are ordered by that
/// name. `name` defaults to the network name.
/// Errors: UndefinedColimit, DegenerateLoop.
CombinationResult combine(const Network& net, std::string name = {});

/// Materializes every combine-defined pattern (and the refinements and
/// networks waiting on one) in dependency order.
/// Errors: those of combine prefixed with the pattern name; CyclicCombine.
Library evaluate_combines(const Library& lib);
Library evaluate_combines(const Library& lib, Diagnostics& diags);

}  // namespace nesy
