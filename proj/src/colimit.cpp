#include "nesy/colimit.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "nesy/union_find.hpp"

namespace nesy {

namespace {

std::string qualified(const Network& net, MemberNode m) {
  return net.patterns[m.first].name() + "." +
         net.patterns[m.first].node(m.second).id.str();
}

std::string class_text(const Network& net, const std::vector<MemberNode>& cls) {
  std::string s = "{";
  for (std::size_t k = 0; k < cls.size(); ++k) {
    if (k) s += ", ";
    s += qualified(net, cls[k]);
  }
  return s + "}";
}

}  // namespace

CombinationResult combine(const Network& net, std::string name) {
  if (name.empty()) name = net.name;
  const std::size_t count = net.patterns.size();

  std::vector<std::size_t> offset(count + 1, 0);
  for (std::size_t i = 0; i < count; ++i) {
    offset[i + 1] = offset[i] + net.patterns[i].size();
  }
  UnionFind uf(offset.back());
  for (const auto& edge : net.refinements) {
    const NodeMap& map = edge.refinement.node_map;
    for (std::size_t n = 0; n < map.size(); ++n) {
      uf.unite(offset[edge.source] + n, offset[edge.target] + map[n]);
    }
  }

  std::map<std::size_t, std::vector<MemberNode>> by_root;
  for (std::size_t i = 0; i < count; ++i) {
    for (std::size_t n = 0; n < net.patterns[i].size(); ++n) {
      by_root[uf.find(offset[i] + n)].push_back({i, n});
    }
  }

  struct Class {
    std::string least;
    std::vector<MemberNode> members;
  };
  std::vector<Class> classes;
  classes.reserve(by_root.size());
  for (auto& [root, members] : by_root) {
    std::string least = qualified(net, members.front());
    for (const auto& m : members) least = std::min(least, qualified(net, m));
    std::sort(members.begin(), members.end());
    classes.push_back({std::move(least), std::move(members)});
  }
  std::sort(classes.begin(), classes.end(),
            [](const Class& a, const Class& b) { return a.least < b.least; });

  const Taxonomy& tax = net.taxonomy();
  CombinationResult result{Pattern(build_pattern(name, tax, {}, {})), {}, {}, {}};
  for (const auto& p : net.patterns) {
    result.sources.push_back(p);
    result.injections.emplace_back(p.size(), kNoImage);
  }

  std::vector<PatternNode> nodes;
  std::set<std::string> used_ids;
  for (std::size_t r = 0; r < classes.size(); ++r) {
    const auto& cls = classes[r];
    std::vector<ClassRef> labels;
    for (auto [i, n] : cls.members) {
      const ClassRef& l = net.patterns[i].label(n);
      if (std::find(labels.begin(), labels.end(), l) == labels.end()) {
        labels.push_back(l);
      }
      result.injections[i][n] = r;
    }
    auto label = infimum(tax, labels);
    if (!label) {
      std::sort(labels.begin(), labels.end(),
                [](const ClassRef& a, const ClassRef& b) {
                  return a.local_name < b.local_name;
                });
      std::string names;
      for (std::size_t k = 0; k < labels.size(); ++k) {
        if (k) names += ", ";
        names += labels[k].local_name;
      }
      throw Error(ErrorKind::undefined_colimit,
                  "the glued node " + class_text(net, cls.members) +
                      " has labels " + names +
                      ", which have no greatest common subclass");
    }

    std::string base = cls.least;
    std::replace(base.begin(), base.end(), '.', '_');
    std::string id = base;
    for (int suffix = 2; used_ids.contains(id); ++suffix) {
      id = base + "_" + std::to_string(suffix);
    }
    used_ids.insert(id);
    nodes.push_back({NodeId(id), *label});
    result.classes.push_back(cls.members);
  }

  std::vector<EdgeDecl> edges;
  for (std::size_t i = 0; i < count; ++i) {
    const Pattern& p = net.patterns[i];
    for (auto [a, b] : p.edges()) {
      std::size_t ra = result.injections[i][a];
      std::size_t rb = result.injections[i][b];
      if (ra == rb) {
        throw Error(ErrorKind::degenerate_loop,
                    "edge " + p.name() + "." + p.node(a).id.str() + " -> " +
                        p.name() + "." + p.node(b).id.str() +
                        " collapses onto the single glued node " +
                        class_text(net, classes[ra].members));
      }
      edges.push_back({nodes[ra].id, nodes[rb].id});
    }
  }
  result.pattern = build_pattern(std::move(name), tax, nodes, edges);
  return result;
}

// ------------------------------------------------------- evaluate_combines

namespace {

struct Skip {};

class Evaluator {
 public:
  Evaluator(const Library& in, Diagnostics& diags) : out_(in), diags_(diags) {}

  Library run() {
    for (const auto& e : out_.order) {
      try {
        ensure(e.name);
      } catch (const Skip&) {
      }
    }
    return std::move(out_);
  }

 private:
  SourcePos pos_of(const std::string& name) const {
    const DeclEntry* e = out_.entry(name);
    return e ? e->pos : SourcePos{};
  }

  void ensure(const std::string& name) {
    if (failed_.contains(name)) throw Skip{};
    if (done_.contains(name)) return;
    if (auto it = std::find(stack_.begin(), stack_.end(), name);
        it != stack_.end()) {
      std::string chain;
      for (; it != stack_.end(); ++it) chain += *it + " -> ";
      throw Error(ErrorKind::cyclic_combine,
                  "combinations depend on each other: " + chain + name);
    }
    stack_.push_back(name);
    try {
      compute(name);
    } catch (const Skip&) {
      stack_.pop_back();
      failed_.insert(name);
      throw;
    } catch (const Error& e) {
      stack_.pop_back();
      failed_.insert(name);
      Error shown = out_.combine_defs.contains(name) &&
                            e.kind() != ErrorKind::cyclic_combine
                        ? e.with_prefix("in combination '" + name + "'")
                        : e;
      diags_.error(shown, pos_of(name));
      throw Skip{};
    }
    stack_.pop_back();
    done_.insert(name);
  }

  void compute(const std::string& name) {
    if (auto c = out_.combine_defs.find(name); c != out_.combine_defs.end()) {
      const std::string net_name = c->second;
      ensure(net_name);
      auto it = out_.networks.find(net_name);
      if (it == out_.networks.end()) {
        throw Error(ErrorKind::unknown_name, "unknown network '" + net_name + "'");
      }
      Pattern p = combine(it->second, name).pattern;
      out_.patterns.insert_or_assign(name, std::move(p));
      return;
    }
    if (auto r = out_.refinement_decls.find(name);
        r != out_.refinement_decls.end() && !out_.refinements.contains(name)) {
      ensure(r->second.source.text);
      ensure(r->second.target.text);
      out_.refinements.emplace(name, resolve_refinement(r->second, out_));
      return;
    }
    if (auto n = out_.network_decls.find(name);
        n != out_.network_decls.end() && !out_.networks.contains(name)) {
      for (const auto& m : n->second.members) {
        if (out_.has_name(m.text)) ensure(m.text);
      }
      out_.networks.emplace(name, build_network(n->second, out_));
      return;
    }
  }

  Library out_;
  Diagnostics& diags_;
  std::set<std::string> done_;
  std::set<std::string> failed_;
  std::vector<std::string> stack_;
};

}  // namespace

Library evaluate_combines(const Library& lib, Diagnostics& diags) {
  return Evaluator(lib, diags).run();
}

Library evaluate_combines(const Library& lib) {
  Diagnostics diags;
  Library out = evaluate_combines(lib, diags);
  for (const auto& d : diags.items()) {
    if (d.severity == Severity::error) throw Error(d.kind, d.pos, d.message);
  }
  return out;
}

}  // namespace nesy
