#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "nesy/colimit.hpp"
#include "nesy/network.hpp"
#include "nesy/pattern.hpp"

namespace nesy {

/// Graphviz digraph. Shapes follow the label's top-level class: Instance box,
/// Model hexagon, Process ellipse, Actor diamond, anything else plaintext.
std::string emit_dot(const Pattern& p);

// JSON (sorted keys, two-space indent, trailing newline).
std::string emit_json(const Pattern& p);
std::string emit_json(const Network& net);
std::string emit_json(const CombinationResult& result);

/// Reads the emit_json(Pattern) format back; labels are local names of
/// `taxonomy`.
Pattern pattern_from_json(std::string_view json_text, const Taxonomy& taxonomy);

enum class AboxRelation { provides_input, has_output, throughput, connected_to };

std::string_view to_string(AboxRelation r);

struct AboxMembership {
  NodeId node;
  ClassRef cls;
};

struct AboxLink {
  AboxRelation relation;
  NodeId from;
  NodeId to;
};

/// One membership per node (node order), one link per edge (edge order).
struct AboxTriples {
  std::vector<AboxMembership> memberships;
  std::vector<AboxLink> links;
};

/// Edges into a process are providesInput, out of a process hasOutput,
/// between processes throughput; anything else is connectedTo and raises a
/// warning in `sink`. Throws UnknownClass if the taxonomy has no Process.
AboxTriples emit_abox(const Pattern& p, Diagnostics* sink = nullptr);

/// One fact per line: each membership `a : C` followed by the links leaving
/// that node, e.g. `providesInput(a,b)`.
std::string render_abox(const AboxTriples& triples);

/// Manchester text that parse_taxonomy reads back into the same order.
std::string emit_manchester(const Taxonomy& t);

}  // namespace nesy
