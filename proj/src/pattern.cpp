#include "nesy/pattern.hpp"

#include <algorithm>
#include <map>

namespace nesy {

std::optional<std::size_t> Pattern::index_of(const NodeId& id) const {
  for (std::size_t i = 0; i < nodes_.size(); ++i) {
    if (nodes_[i].id == id) return i;
  }
  return std::nullopt;
}

bool Pattern::has_edge(std::size_t from, std::size_t to) const {
  return std::binary_search(edges_.begin(), edges_.end(), Edge{from, to});
}

Pattern Pattern::renamed(std::string name) const {
  Pattern copy = *this;
  copy.name_ = std::move(name);
  return copy;
}

bool operator==(const Pattern& a, const Pattern& b) {
  return a.name_ == b.name_ && a.nodes_ == b.nodes_ && a.edges_ == b.edges_ &&
         a.taxonomy_.same_hierarchy(b.taxonomy_);
}

Pattern build_pattern(std::string name, Taxonomy taxonomy,
                      std::span<const PatternNode> node_decls,
                      std::span<const EdgeDecl> edge_decls) {
  Pattern p(std::move(name), std::move(taxonomy));
  std::map<NodeId, std::size_t> index;
  for (const auto& decl : node_decls) {
    if (!p.taxonomy_.contains(decl.label)) {
      throw Error(ErrorKind::unknown_label,
                  "label '" + decl.label.local_name + "' of node '" +
                      decl.id.str() + "' is not a class of the taxonomy");
    }
    auto [it, inserted] = index.emplace(decl.id, p.nodes_.size());
    if (!inserted) {
      if (p.nodes_[it->second].label != decl.label) {
        throw Error(ErrorKind::duplicate_node,
                    "node '" + decl.id.str() + "' declared as '" +
                        p.nodes_[it->second].label.local_name + "' and '" +
                        decl.label.local_name + "'");
      }
      continue;
    }
    p.nodes_.push_back(decl);
  }

  auto lookup = [&](const NodeId& id) {
    auto it = index.find(id);
    if (it == index.end()) {
      throw Error(ErrorKind::unknown_node,
                  "edge endpoint '" + id.str() + "' is not a declared node");
    }
    return it->second;
  };
  for (const auto& e : edge_decls) {
    std::size_t a = lookup(e.from);
    std::size_t b = lookup(e.to);
    if (a == b) {
      throw Error(ErrorKind::self_loop,
                  "self-loop on node '" + e.from.str() + "'");
    }
    p.edges_.emplace_back(a, b);
  }
  std::sort(p.edges_.begin(), p.edges_.end());
  p.edges_.erase(std::unique(p.edges_.begin(), p.edges_.end()), p.edges_.end());

  p.out_.assign(p.nodes_.size(), {});
  p.in_.assign(p.nodes_.size(), {});
  for (auto [a, b] : p.edges_) {
    p.out_[a].push_back(b);
    p.in_[b].push_back(a);
  }
  for (auto& v : p.in_) std::sort(v.begin(), v.end());
  return p;
}

bool isomorphic(const Pattern& p, const Pattern& q) {
  const std::size_t n = p.size();
  if (n != q.size() || p.edges().size() != q.edges().size()) return false;

  auto signature = [](const Pattern& g, std::size_t i) {
    return std::tuple(g.label(i).iri, g.successors(i).size(),
                      g.predecessors(i).size());
  };
  std::vector<std::vector<std::size_t>> candidates(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (signature(p, i) == signature(q, j)) candidates[i].push_back(j);
    }
    if (candidates[i].empty()) return false;
  }

  std::vector<std::size_t> order(n);
  for (std::size_t i = 0; i < n; ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return candidates[a].size() < candidates[b].size();
  });

  constexpr std::size_t kUnset = static_cast<std::size_t>(-1);
  std::vector<std::size_t> image(n, kUnset);
  std::vector<bool> used(n, false);

  auto consistent = [&](std::size_t v, std::size_t w) {
    for (std::size_t u = 0; u < n; ++u) {
      if (image[u] == kUnset) continue;
      if (p.has_edge(v, u) != q.has_edge(w, image[u])) return false;
      if (p.has_edge(u, v) != q.has_edge(image[u], w)) return false;
    }
    return true;
  };

  auto search = [&](auto&& self, std::size_t depth) -> bool {
    if (depth == n) return true;
    std::size_t v = order[depth];
    for (std::size_t w : candidates[v]) {
      if (used[w] || !consistent(v, w)) continue;
      image[v] = w;
      used[w] = true;
      if (self(self, depth + 1)) return true;
      image[v] = kUnset;
      used[w] = false;
    }
    return false;
  };
  return search(search, 0);
}

}  // namespace nesy
