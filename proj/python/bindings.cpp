#include <sstream>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "nesy/cli.hpp"
#include "nesy/colimit.hpp"
#include "nesy/dsl.hpp"
#include "nesy/emitters.hpp"

namespace py = pybind11;
using namespace nesy;

namespace {

PyObject* error_type = nullptr;

using IdPairs = std::vector<std::pair<std::string, std::string>>;

IdPairs id_pairs(const Pattern& src, const Pattern& tgt, const NodeMap& map) {
  IdPairs out;
  for (std::size_t i = 0; i < map.size(); ++i) {
    out.emplace_back(src.node(i).id.str(), tgt.node(map[i]).id.str());
  }
  return out;
}

std::vector<ClassRef> classes_of(const Taxonomy& t, const std::vector<std::string>& names) {
  std::vector<ClassRef> out;
  for (const auto& n : names) out.push_back(t.get(n));
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Neural-symbolic design patterns: taxonomies, refinements, combinations";

  error_type = PyErr_NewException("nesy.NesyError", PyExc_RuntimeError, nullptr);
  m.attr("NesyError") = py::handle(error_type);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::object exc = py::reinterpret_borrow<py::object>(error_type)(e.what());
      exc.attr("kind") = std::string(to_string(e.kind()));
      exc.attr("detail") = e.detail();
      exc.attr("position") =
          e.has_position() ? py::cast(std::make_pair(e.position().line, e.position().column))
                           : py::none();
      PyErr_SetObject(error_type, exc.ptr());
    }
  });

  py::class_<Taxonomy>(m, "Taxonomy")
      .def_property_readonly("classes",
                             [](const Taxonomy& t) {
                               std::vector<std::string> out;
                               for (const auto& c : t.classes()) out.push_back(c.local_name);
                               return out;
                             })
      .def_property_readonly("top", [](const Taxonomy& t) { return t.top().local_name; })
      .def_property_readonly("edges",
                             [](const Taxonomy& t) {
                               IdPairs out;
                               for (auto [a, b] : t.edges())
                                 out.emplace_back(t.at(a).local_name, t.at(b).local_name);
                               return out;
                             })
      .def("iri", [](const Taxonomy& t, const std::string& name) { return t.get(name).iri; })
      .def("leq",
           [](const Taxonomy& t, const std::string& a, const std::string& b) {
             return leq(t, t.get(a), t.get(b));
           })
      .def("infimum",
           [](const Taxonomy& t, const std::vector<std::string>& names) -> std::optional<std::string> {
             auto cs = classes_of(t, names);
             auto r = infimum(t, cs);
             if (!r) return std::nullopt;
             return r->local_name;
           })
      .def("extend", [](const Taxonomy& t, const std::string& frag) { return extend(t, frag); })
      .def("to_manchester", &emit_manchester)
      .def("__len__", &Taxonomy::size);

  m.def("default_taxonomy", &default_taxonomy, py::return_value_policy::copy);
  m.def("parse_taxonomy", [](const std::string& text) { return parse_taxonomy(text); });

  py::class_<Pattern>(m, "Pattern")
      .def(py::init([](std::string name, const Taxonomy& t, const IdPairs& nodes,
                       const IdPairs& edges) {
             std::vector<PatternNode> ns;
             for (const auto& [id, label] : nodes) ns.push_back({NodeId(id), t.get(label)});
             std::vector<EdgeDecl> es;
             for (const auto& [a, b] : edges) es.push_back({NodeId(a), NodeId(b)});
             return build_pattern(std::move(name), t, ns, es);
           }),
           py::arg("name"), py::arg("taxonomy"), py::arg("nodes"), py::arg("edges") = IdPairs{})
      .def_property_readonly("name", &Pattern::name)
      .def_property_readonly("taxonomy", &Pattern::taxonomy)
      .def_property_readonly("nodes",
                             [](const Pattern& p) {
                               IdPairs out;
                               for (const auto& n : p.nodes())
                                 out.emplace_back(n.id.str(), n.label.local_name);
                               return out;
                             })
      .def_property_readonly("edges",
                             [](const Pattern& p) {
                               IdPairs out;
                               for (auto [a, b] : p.edges())
                                 out.emplace_back(p.node(a).id.str(), p.node(b).id.str());
                               return out;
                             })
      .def("__len__", &Pattern::size)
      .def("__eq__", [](const Pattern& a, const Pattern& b) { return a == b; })
      .def("__repr__", [](const Pattern& p) {
        return "<Pattern " + p.name() + ": " + std::to_string(p.size()) + " nodes, " +
               std::to_string(p.edges().size()) + " edges>";
      });

  py::class_<Refinement>(m, "Refinement")
      .def_readonly("name", &Refinement::name)
      .def_readonly("source", &Refinement::source)
      .def_readonly("target", &Refinement::target)
      .def_property_readonly("mapping", [](const Refinement& r) {
        return id_pairs(r.source, r.target, r.node_map);
      });

  py::class_<Network>(m, "Network")
      .def_readonly("name", &Network::name)
      .def_readonly("patterns", &Network::patterns)
      .def_property_readonly("refinements", [](const Network& n) {
        std::vector<Refinement> out;
        for (const auto& e : n.refinements) out.push_back(e.refinement);
        return out;
      });

  py::class_<CombinationResult>(m, "Combination")
      .def_readonly("pattern", &CombinationResult::pattern)
      .def_property_readonly("injections",
                             [](const CombinationResult& r) {
                               std::map<std::string, std::map<std::string, std::string>> out;
                               for (std::size_t i = 0; i < r.sources.size(); ++i)
                                 for (const auto& [a, b] : id_pairs(r.sources[i], r.pattern,
                                                                    r.injections[i]))
                                   out[r.sources[i].name()][a] = b;
                               return out;
                             })
      .def("to_json", [](const CombinationResult& r) { return emit_json(r); });

  py::class_<Library>(m, "Library")
      .def_readonly("patterns", &Library::patterns)
      .def_readonly("refinements", &Library::refinements)
      .def_readonly("networks", &Library::networks)
      .def("pattern", &Library::pattern, py::return_value_policy::copy)
      .def("to_dsl", [](const Library& lib) { return emit_dsl(lib); });

  m.def("load_library", [](const std::string& text) { return load_library(text); },
        py::arg("text"));
  m.def("combine", &combine, py::arg("network"), py::arg("name") = std::string{});
  m.def("isomorphic", &isomorphic);
  m.def("check_refinement",
        [](const Pattern& src, const Pattern& tgt, const IdPairs& map) {
          std::vector<std::pair<NodeId, NodeId>> ids;
          for (const auto& [a, b] : map) ids.emplace_back(NodeId(a), NodeId(b));
          std::vector<std::string> out;
          for (const auto& v : check_refinement(src, tgt, ids)) out.push_back(v.message);
          return out;
        });
  m.def("find_homomorphisms",
        [](const Pattern& src, const Pattern& tgt, std::size_t limit) {
          std::vector<IdPairs> out;
          for (const auto& map : find_homomorphisms(src, tgt, limit))
            out.push_back(id_pairs(src, tgt, map));
          return out;
        },
        py::arg("source"), py::arg("target"), py::arg("limit") = 16);
  m.def("infer_refinement", [](const Pattern& src, const Pattern& tgt) {
    Refinement r = infer_refinement(src.name() + "_to_" + tgt.name(), src, tgt);
    return id_pairs(src, tgt, r.node_map);
  });

  m.def("emit_dot", &emit_dot);
  m.def("emit_json", py::overload_cast<const Pattern&>(&emit_json));
  m.def("emit_dsl", py::overload_cast<const Pattern&>(&emit_dsl));
  m.def("emit_abox", [](const Pattern& p) { return render_abox(emit_abox(p)); });

  m.def("run_cli", [](const std::vector<std::string>& args) {
    std::ostringstream out, err;
    int code = run_cli(args, out, err);
    return py::make_tuple(code, out.str(), err.str());
  });
}
