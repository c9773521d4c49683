#include "nesy/emitters.hpp"

#include <algorithm>
#include <sstream>

#include <json.hpp>

namespace nesy {

using nlohmann::json;

namespace {

std::string dot_quote(std::string_view s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    if (c == '\n') {
      out += "\\n";
      continue;
    }
    out += c;
  }
  return out + "\"";
}

std::optional<std::size_t> class_index(const Taxonomy& t, std::string_view local) {
  try {
    if (auto c = t.find_local(local)) return t.index_of(*c);
  } catch (const Error&) {
  }
  return std::nullopt;
}

json pattern_json(const Pattern& p) {
  json nodes = json::array();
  for (const auto& n : p.nodes()) {
    nodes.push_back({{"id", n.id.str()}, {"label", n.label.local_name}});
  }
  json edges = json::array();
  for (auto [a, b] : p.edges()) {
    edges.push_back({p.node(a).id.str(), p.node(b).id.str()});
  }
  return {{"name", p.name()}, {"nodes", nodes}, {"edges", edges}};
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

}  // namespace

std::string emit_dot(const Pattern& p) {
  static constexpr std::pair<std::string_view, std::string_view> kShapes[] = {
      {"Instance", "box"},
      {"Model", "hexagon"},
      {"Process", "ellipse"},
      {"Actor", "diamond"}};
  const Taxonomy& t = p.taxonomy();
  auto shape_of = [&](const ClassRef& label) -> std::string_view {
    auto li = t.index_of(label);
    for (auto [cls, shape] : kShapes) {
      auto ci = class_index(t, cls);
      if (li && ci && t.leq_index(*li, *ci)) return shape;
    }
    return "plaintext";
  };

  std::vector<std::size_t> order(p.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return p.node(a).id < p.node(b).id;
  });
  std::vector<std::pair<std::string, std::string>> edges;
  for (auto [a, b] : p.edges()) {
    edges.emplace_back(p.node(a).id.str(), p.node(b).id.str());
  }
  std::sort(edges.begin(), edges.end());

  std::ostringstream os;
  os << "digraph " << dot_quote(p.name()) << " {\n";
  os << "  rankdir=LR;\n";
  for (std::size_t i : order) {
    const auto& n = p.node(i);
    os << "  " << dot_quote(n.id.str())
       << " [label=" << dot_quote(n.id.str() + " : " + n.label.local_name)
       << ", shape=" << shape_of(n.label) << "];\n";
  }
  for (const auto& [a, b] : edges) {
    os << "  " << dot_quote(a) << " -> " << dot_quote(b) << ";\n";
  }
  os << "}\n";
  return os.str();
}

std::string emit_json(const Pattern& p) { return dump(pattern_json(p)); }

std::string emit_json(const Network& net) {
  json patterns = json::array();
  for (const auto& p : net.patterns) patterns.push_back(pattern_json(p));
  json refinements = json::array();
  for (const auto& e : net.refinements) {
    json map = json::object();
    for (const auto& [from, to] : e.refinement.id_map()) map[from.str()] = to.str();
    refinements.push_back({{"name", e.refinement.name},
                           {"source", net.patterns[e.source].name()},
                           {"target", net.patterns[e.target].name()},
                           {"map", map}});
  }
  return dump({{"name", net.name},
               {"patterns", patterns},
               {"refinements", refinements}});
}

std::string emit_json(const CombinationResult& result) {
  const Pattern& p = result.pattern;
  json injections = json::object();
  json members = json::array();
  for (std::size_t i = 0; i < result.sources.size(); ++i) {
    const Pattern& src = result.sources[i];
    json map = json::object();
    for (std::size_t n = 0; n < src.size(); ++n) {
      map[src.node(n).id.str()] = p.node(result.injections[i][n]).id.str();
    }
    injections[src.name()] = map;
    members.push_back(src.name());
  }
  json classes = json::object();
  for (std::size_t r = 0; r < result.classes.size(); ++r) {
    json glued = json::array();
    for (auto [i, n] : result.classes[r]) {
      glued.push_back({result.sources[i].name(), result.sources[i].node(n).id.str()});
    }
    classes[p.node(r).id.str()] = glued;
  }
  return dump({{"pattern", pattern_json(p)},
               {"members", members},
               {"injections", injections},
               {"classes", classes}});
}

Pattern pattern_from_json(std::string_view json_text, const Taxonomy& taxonomy) {
  try {
    json j = json::parse(json_text);
    std::vector<PatternNode> nodes;
    for (const auto& n : j.at("nodes")) {
      nodes.push_back({NodeId(n.at("id").get<std::string>()),
                       taxonomy.get(n.at("label").get<std::string>())});
    }
    std::vector<EdgeDecl> edges;
    for (const auto& e : j.at("edges")) {
      edges.push_back({NodeId(e.at(0).get<std::string>()),
                       NodeId(e.at(1).get<std::string>())});
    }
    return build_pattern(j.at("name").get<std::string>(), taxonomy, nodes, edges);
  } catch (const json::exception& e) {
    throw Error(ErrorKind::syntax, std::string("malformed pattern JSON: ") + e.what());
  }
}

// -------------------------------------------------------------------- ABox

std::string_view to_string(AboxRelation r) {
  switch (r) {
    case AboxRelation::provides_input: return "providesInput";
    case AboxRelation::has_output: return "hasOutput";
    case AboxRelation::throughput: return "throughput";
    case AboxRelation::connected_to: return "connectedTo";
  }
  return "connectedTo";
}

AboxTriples emit_abox(const Pattern& p, Diagnostics* sink) {
  const Taxonomy& t = p.taxonomy();
  const std::size_t process = *t.index_of(t.get("Process"));
  auto is_process = [&](std::size_t node) {
    return t.leq_index(*t.index_of(p.label(node)), process);
  };

  AboxTriples out;
  for (const auto& n : p.nodes()) out.memberships.push_back({n.id, n.label});
  for (auto [a, b] : p.edges()) {
    bool pa = is_process(a);
    bool pb = is_process(b);
    AboxRelation rel = pa && pb   ? AboxRelation::throughput
                       : pb       ? AboxRelation::provides_input
                       : pa       ? AboxRelation::has_output
                                  : AboxRelation::connected_to;
    if (rel == AboxRelation::connected_to && sink) {
      sink->warning(ErrorKind::connected_to, {},
                    "edge " + p.node(a).id.str() + " -> " + p.node(b).id.str() +
                        " in '" + p.name() +
                        "' touches no process; emitted as connectedTo");
    }
    out.links.push_back({rel, p.node(a).id, p.node(b).id});
  }
  return out;
}

std::string render_abox(const AboxTriples& triples) {
  std::string out;
  std::vector<bool> printed(triples.links.size(), false);
  for (const auto& m : triples.memberships) {
    out += m.node.str() + " : " + m.cls.local_name + "\n";
    for (std::size_t k = 0; k < triples.links.size(); ++k) {
      const auto& l = triples.links[k];
      if (printed[k] || l.from != m.node) continue;
      out += std::string(to_string(l.relation)) + "(" + l.from.str() + "," +
             l.to.str() + ")\n";
      printed[k] = true;
    }
  }
  for (std::size_t k = 0; k < triples.links.size(); ++k) {
    if (printed[k]) continue;
    const auto& l = triples.links[k];
    out += std::string(to_string(l.relation)) + "(" + l.from.str() + "," +
           l.to.str() + ")\n";
  }
  return out;
}

// -------------------------------------------------------------- Manchester

std::string emit_manchester(const Taxonomy& t) {
  std::ostringstream os;
  os << "Ontology: <" << t.ontology_iri() << ">\n";
  const std::size_t top = *t.index_of(t.top());
  std::vector<std::vector<std::size_t>> supers(t.size());
  for (auto [s, p] : t.edges()) supers[s].push_back(p);
  for (std::size_t i = 0; i < t.size(); ++i) {
    os << "\nClass: <" << t.at(i).iri << ">\n";
    if (i == top) continue;
    os << "    SubClassOf: ";
    for (std::size_t k = 0; k < supers[i].size(); ++k) {
      if (k) os << ", ";
      os << '<' << t.at(supers[i][k]).iri << '>';
    }
    os << "\n";
  }
  return os.str();
}

}  // namespace nesy
