#include "nesy/network.hpp"

#include <algorithm>
#include <map>

#include "nesy/library.hpp"

namespace nesy {

namespace {
bool same_refinement(const Refinement& a, const Refinement& b) {
  return a.name == b.name && a.source == b.source && a.target == b.target &&
         a.node_map == b.node_map;
}
}  // namespace

std::optional<std::size_t> Network::index_of(std::string_view pattern_name) const {
  for (std::size_t i = 0; i < patterns.size(); ++i) {
    if (patterns[i].name() == pattern_name) return i;
  }
  return std::nullopt;
}

bool operator==(const Network& a, const Network& b) {
  if (a.name != b.name || a.patterns != b.patterns ||
      a.refinements.size() != b.refinements.size()) {
    return false;
  }
  for (std::size_t k = 0; k < a.refinements.size(); ++k) {
    const auto& x = a.refinements[k];
    const auto& y = b.refinements[k];
    if (x.source != y.source || x.target != y.target ||
        !same_refinement(x.refinement, y.refinement)) {
      return false;
    }
  }
  return true;
}

Network make_network(std::string name, std::vector<Pattern> patterns,
                     std::vector<Refinement> refinements) {
  std::map<std::string, Pattern> members;
  auto add = [&](const Pattern& p, const std::string& via) {
    auto [it, inserted] = members.emplace(p.name(), p);
    if (!inserted && !(it->second == p)) {
      throw Error(ErrorKind::type_error,
                  "network '" + name + "': pattern '" + p.name() +
                      "'" + (via.empty() ? "" : " used by refinement '" + via + "'") +
                      " differs from the member pattern of that name");
    }
  };
  for (const auto& p : patterns) add(p, {});

  std::map<std::string, Refinement> edges;
  for (const auto& r : refinements) {
    auto [it, inserted] = edges.emplace(r.name, r);
    if (!inserted && !same_refinement(it->second, r)) {
      throw Error(ErrorKind::type_error, "network '" + name +
                                             "': two different refinements "
                                             "named '" + r.name + "'");
    }
  }
  for (const auto& [rname, r] : edges) {
    add(r.source, rname);
    add(r.target, rname);
  }
  if (members.empty()) {
    throw Error(ErrorKind::type_error, "network '" + name + "' has no patterns");
  }

  Network net;
  net.name = std::move(name);
  for (auto& [pname, p] : members) net.patterns.push_back(std::move(p));

  const Taxonomy& tax = net.patterns.front().taxonomy();
  for (const auto& p : net.patterns) {
    if (!p.taxonomy().same_hierarchy(tax)) {
      throw Error(ErrorKind::taxonomy_mismatch,
                  "network '" + net.name + "': pattern '" + p.name() +
                      "' uses a different class hierarchy than '" +
                      net.patterns.front().name() + "'");
    }
  }

  for (auto& [rname, r] : edges) {
    auto violations = check_refinement(r.source, r.target, r.node_map);
    if (!violations.empty()) {
      throw Error(ErrorKind::type_error,
                  "network '" + net.name + "': '" + rname +
                      "' is not a refinement from '" + r.source.name() +
                      "' to '" + r.target.name() + "': " +
                      violations.front().message);
    }
    std::size_t s = *net.index_of(r.source.name());
    std::size_t t = *net.index_of(r.target.name());
    net.refinements.push_back({std::move(r), s, t});
  }
  return net;
}

Network build_network(const ast::NetworkDecl& decl, const Library& lib) {
  std::vector<Pattern> patterns;
  std::vector<Refinement> refinements;
  for (const auto& member : decl.members) {
    const auto& n = member.text;
    if (auto it = lib.refinements.find(n); it != lib.refinements.end()) {
      refinements.push_back(it->second);
    } else if (auto p = lib.patterns.find(n); p != lib.patterns.end()) {
      patterns.push_back(p->second);
    } else if (lib.networks.contains(n) || lib.network_decls.contains(n)) {
      throw Error(ErrorKind::type_error, member.pos,
                  "'" + n + "' is a network, not a pattern or refinement");
    } else if (lib.combine_defs.contains(n) || lib.refinement_decls.contains(n)) {
      throw Error(ErrorKind::type_error, member.pos,
                  "'" + n + "' depends on a combination that has not been "
                  "computed yet");
    } else {
      throw Error(ErrorKind::unknown_name, member.pos,
                  "unknown pattern or refinement '" + n + "'");
    }
  }
  try {
    return make_network(decl.name.text, std::move(patterns),
                        std::move(refinements));
  } catch (const Error& e) {
    if (e.has_position()) throw;
    throw e.with_position(decl.pos);
  }
}

}  // namespace nesy
