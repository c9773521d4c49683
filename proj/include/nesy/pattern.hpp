#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "nesy/taxonomy.hpp"

namespace nesy {

/// Node identifier within one pattern: a user id from `id : Class` or a
/// generated `anonN`.
class NodeId {
 public:
  NodeId() = default;
  explicit NodeId(std::string name) : name_(std::move(name)) {}

  const std::string& str() const noexcept { return name_; }

  friend bool operator==(const NodeId&, const NodeId&) = default;
  friend std::strong_ordering operator<=>(const NodeId&,
                                          const NodeId&) = default;

 private:
  std::string name_;
};

struct PatternNode {
  NodeId id;
  ClassRef label;

  friend bool operator==(const PatternNode&, const PatternNode&) = default;
};

struct EdgeDecl {
  NodeId from;
  NodeId to;
};

/// A simple directed graph (no parallel edges, no self-loops) whose nodes are
/// labeled with classes of its taxonomy. Nodes keep declaration order.
class Pattern {
 public:
  using Edge = std::pair<std::size_t, std::size_t>;

  const std::string& name() const noexcept { return name_; }
  const Taxonomy& taxonomy() const noexcept { return taxonomy_; }

  std::span<const PatternNode> nodes() const noexcept { return nodes_; }
  std::size_t size() const noexcept { return nodes_.size(); }
  const PatternNode& node(std::size_t i) const { return nodes_.at(i); }
  const ClassRef& label(std::size_t i) const { return nodes_.at(i).label; }
  std::optional<std::size_t> index_of(const NodeId& id) const;

  /// Edges as node-index pairs, sorted lexicographically.
  std::span<const Edge> edges() const noexcept { return edges_; }
  bool has_edge(std::size_t from, std::size_t to) const;
  std::span<const std::size_t> successors(std::size_t i) const {
    return out_[i];
  }
  std::span<const std::size_t> predecessors(std::size_t i) const {
    return in_[i];
  }
  std::size_t degree(std::size_t i) const {
    return out_[i].size() + in_[i].size();
  }

  /// Same graph under a different pattern name.
  Pattern renamed(std::string name) const;

  /// Structural equality: name, nodes in order, edges and hierarchy.
  friend bool operator==(const Pattern& a, const Pattern& b);

 private:
  Pattern(std::string name, Taxonomy taxonomy)
      : name_(std::move(name)), taxonomy_(std::move(taxonomy)) {}

  std::string name_;
  Taxonomy taxonomy_;
  std::vector<PatternNode> nodes_;
  std::vector<Edge> edges_;
  std::vector<std::vector<std::size_t>> out_;
  std::vector<std::vector<std::size_t>> in_;

  friend Pattern build_pattern(std::string, Taxonomy,
                               std::span<const PatternNode>,
                               std::span<const EdgeDecl>);
};

/// Validating constructor. Re-declaring an id with the same label is a no-op;
/// duplicate edges are merged.
/// Errors: SelfLoop, UnknownLabel, DuplicateNode, UnknownNode (edge endpoint
/// not declared).
Pattern build_pattern(std::string name, Taxonomy taxonomy,
                      std::span<const PatternNode> node_decls,
                      std::span<const EdgeDecl> edge_decls);

/// Label- and edge-preserving bijection exists (node names ignored).
bool isomorphic(const Pattern& p, const Pattern& q);

}  // namespace nesy
