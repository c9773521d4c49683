#include "nesy/refinement.hpp"

#include <algorithm>
#include <numeric>

namespace nesy {

const NodeId& Refinement::image(const NodeId& source_node) const {
  auto i = source.index_of(source_node);
  if (!i) {
    throw Error(ErrorKind::unknown_node, "'" + source_node.str() +
                                             "' is not a node of pattern '" +
                                             source.name() + "'");
  }
  return target.node(node_map.at(*i)).id;
}

std::vector<std::pair<NodeId, NodeId>> Refinement::id_map() const {
  std::vector<std::pair<NodeId, NodeId>> out;
  out.reserve(node_map.size());
  for (std::size_t i = 0; i < node_map.size(); ++i) {
    out.emplace_back(source.node(i).id, target.node(node_map[i]).id);
  }
  return out;
}

namespace {

void require_same_taxonomy(const Pattern& src, const Pattern& tgt) {
  if (!src.taxonomy().same_hierarchy(tgt.taxonomy())) {
    throw Error(ErrorKind::taxonomy_mismatch,
                "patterns '" + src.name() + "' and '" + tgt.name() +
                    "' use different class hierarchies");
  }
}

std::string node_text(const Pattern& p, std::size_t i) {
  return p.node(i).id.str() + " : " + p.label(i).local_name;
}

}  // namespace

std::vector<Violation> check_refinement(const Pattern& src, const Pattern& tgt,
                                        const NodeMap& map) {
  require_same_taxonomy(src, tgt);
  const Taxonomy& tax = src.taxonomy();
  std::vector<Violation> out;
  auto mapped = [&](std::size_t i) {
    return i < map.size() && map[i] != kNoImage && map[i] < tgt.size();
  };

  for (std::size_t i = 0; i < src.size(); ++i) {
    if (i < map.size() && map[i] != kNoImage && map[i] >= tgt.size()) {
      out.push_back({Violation::Kind::unknown_node,
                     "image of '" + src.node(i).id.str() +
                         "' is not a node of '" + tgt.name() + "'"});
    } else if (!mapped(i)) {
      out.push_back({Violation::Kind::missing_image,
                     "node '" + src.node(i).id.str() + "' has no image in '" +
                         tgt.name() + "'"});
    }
  }
  for (auto [a, b] : src.edges()) {
    if (!mapped(a) || !mapped(b)) continue;
    if (!tgt.has_edge(map[a], map[b])) {
      out.push_back({Violation::Kind::edge_not_preserved,
                     "edge " + src.node(a).id.str() + " -> " +
                         src.node(b).id.str() + " maps to " +
                         tgt.node(map[a]).id.str() + " -> " +
                         tgt.node(map[b]).id.str() + ", which is not an edge of '" +
                         tgt.name() + "'"});
    }
  }
  for (std::size_t i = 0; i < src.size(); ++i) {
    if (!mapped(i)) continue;
    auto s = *tax.index_of(src.label(i));
    auto t = *tax.index_of(tgt.label(map[i]));
    if (!tax.leq_index(t, s)) {
      out.push_back({Violation::Kind::label_not_refined,
                     "node '" + node_text(src, i) + "' maps to '" +
                         node_text(tgt, map[i]) + "', but " +
                         tgt.label(map[i]).local_name + " is not a subclass of " +
                         src.label(i).local_name});
    }
  }
  return out;
}

std::vector<Violation> check_refinement(
    const Pattern& src, const Pattern& tgt,
    std::span<const std::pair<NodeId, NodeId>> map) {
  require_same_taxonomy(src, tgt);
  std::vector<Violation> pre;
  NodeMap index_map(src.size(), kNoImage);
  for (const auto& [from, to] : map) {
    auto a = src.index_of(from);
    auto b = tgt.index_of(to);
    if (!a) {
      pre.push_back({Violation::Kind::unknown_node,
                     "'" + from.str() + "' is not a node of '" + src.name() + "'"});
      continue;
    }
    if (!b) {
      pre.push_back({Violation::Kind::unknown_node,
                     "'" + to.str() + "' is not a node of '" + tgt.name() + "'"});
      continue;
    }
    if (index_map[*a] != kNoImage && index_map[*a] != *b) {
      pre.push_back({Violation::Kind::conflicting_image,
                     "node '" + from.str() + "' is mapped to both '" +
                         tgt.node(index_map[*a]).id.str() + "' and '" +
                         to.str() + "'"});
      continue;
    }
    index_map[*a] = *b;
  }
  auto rest = check_refinement(src, tgt, index_map);
  pre.insert(pre.end(), rest.begin(), rest.end());
  return pre;
}

std::vector<NodeMap> find_homomorphisms(const Pattern& src, const Pattern& tgt,
                                        std::size_t limit) {
  require_same_taxonomy(src, tgt);
  std::vector<NodeMap> results;
  if (limit == 0) return results;
  const Taxonomy& tax = src.taxonomy();
  const std::size_t n = src.size();

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return src.degree(a) > src.degree(b);
  });

  // Label pruning: candidates whose label is below the source label.
  std::vector<std::vector<std::size_t>> candidates(n);
  for (std::size_t v = 0; v < n; ++v) {
    auto s = *tax.index_of(src.label(v));
    for (std::size_t w = 0; w < tgt.size(); ++w) {
      if (tax.leq_index(*tax.index_of(tgt.label(w)), s)) {
        candidates[v].push_back(w);
      }
    }
    if (candidates[v].empty()) return results;
  }

  NodeMap map(n, kNoImage);
  auto consistent = [&](std::size_t v, std::size_t w) {
    for (std::size_t u : src.successors(v)) {
      if (map[u] != kNoImage && !tgt.has_edge(w, map[u])) return false;
    }
    for (std::size_t u : src.predecessors(v)) {
      if (map[u] != kNoImage && !tgt.has_edge(map[u], w)) return false;
    }
    return true;
  };

  auto search = [&](auto&& self, std::size_t depth) -> bool {
    if (depth == n) {
      results.push_back(map);
      return results.size() >= limit;
    }
    std::size_t v = order[depth];
    for (std::size_t w : candidates[v]) {
      if (!consistent(v, w)) continue;
      map[v] = w;
      if (self(self, depth + 1)) return true;
      map[v] = kNoImage;
    }
    return false;
  };
  search(search, 0);
  return results;
}

std::string describe_map(const Pattern& src, const Pattern& tgt,
                         const NodeMap& map) {
  std::string out;
  for (std::size_t i = 0; i < map.size(); ++i) {
    if (i) out += ", ";
    out += src.node(i).id.str() + " |-> " + tgt.node(map[i]).id.str();
  }
  return out;
}

Refinement infer_refinement(std::string name, const Pattern& src,
                            const Pattern& tgt) {
  auto maps = find_homomorphisms(src, tgt, 2);
  if (maps.empty()) {
    throw Error(ErrorKind::no_refinement,
                "no refinement from '" + src.name() + "' to '" + tgt.name() +
                    "'" + (name.empty() ? "" : " for '" + name + "'"));
  }
  if (maps.size() > 1) {
    throw Error(ErrorKind::ambiguous_refinement,
                "refinement from '" + src.name() + "' to '" + tgt.name() +
                    "' is ambiguous; witnesses: {" +
                    describe_map(src, tgt, maps[0]) + "} and {" +
                    describe_map(src, tgt, maps[1]) + "}");
  }
  return Refinement{std::move(name), src, tgt, std::move(maps.front())};
}

Refinement make_refinement(std::string name, const Pattern& src,
                           const Pattern& tgt,
                           std::span<const std::pair<NodeId, NodeId>> map) {
  auto violations = check_refinement(src, tgt, map);
  if (!violations.empty()) {
    std::string msg = "'" + name + "' is not a refinement from '" +
                      src.name() + "' to '" + tgt.name() + "':";
    for (const auto& v : violations) msg += " " + v.message + ";";
    msg.pop_back();
    throw Error(ErrorKind::invalid_refinement, std::move(msg));
  }
  NodeMap index_map(src.size());
  for (const auto& [from, to] : map) {
    index_map[*src.index_of(from)] = *tgt.index_of(to);
  }
  return Refinement{std::move(name), src, tgt, std::move(index_map)};
}

}  // namespace nesy
