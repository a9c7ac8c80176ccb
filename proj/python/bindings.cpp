#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "sbp/sbp.hpp"

namespace py = pybind11;
using namespace sbp;

namespace {

FuncTable makeTable(const Group& g, const Group& h, std::vector<Element> values) {
  return FuncTable(g, h, std::move(values));
}

py::dict splitDict(const SplitReport& r) {
  py::dict d;
  d["kind"] = to_string(r.kind);
  d["B"] = r.B;
  d["A"] = r.A;
  d["g"] = r.g ? py::object(py::int_(*r.g)) : py::object(py::none());
  d["h"] = r.h ? py::object(py::int_(*r.h)) : py::object(py::none());
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Semi-planar functions, the incidence structure S(G,H;f) and its splitting classification";

  static py::exception<Error> error(m, "Error", PyExc_ValueError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      PyErr_SetString(error.ptr(), e.what());
    }
  });

  py::class_<Group>(m, "Group")
      .def(py::init<std::vector<int>>(), py::arg("factors"))
      .def_static("parse", &Group::parse)
      .def_property_readonly("order", &Group::order)
      .def_property_readonly("factors",
                             [](const Group& g) { return std::vector<int>(g.factors().begin(), g.factors().end()); })
      .def_property_readonly("name", &Group::name)
      .def("add", &Group::add)
      .def("neg", &Group::neg)
      .def("sub", &Group::sub)
      .def("decode", &Group::decode)
      .def("__eq__", [](const Group& a, const Group& b) { return a == b; })
      .def("__repr__", [](const Group& g) { return "Group(" + g.name() + ")"; });

  m.def("index2_subgroups", &index2Subgroups);
  m.def("is_subgroup", [](const Group& g, const ElementSet& s) { return isSubgroup(g, s); });
  m.def("automorphisms", &automorphisms);

  py::class_<FuncTable>(m, "FuncTable")
      .def(py::init(&makeTable), py::arg("domain"), py::arg("codomain"), py::arg("values"))
      .def_property_readonly("domain", &FuncTable::domain)
      .def_property_readonly("codomain", &FuncTable::codomain)
      .def_property_readonly("values",
                             [](const FuncTable& f) { return std::vector<Element>(f.values().begin(), f.values().end()); })
      .def("__call__", &FuncTable::at)
      .def("__eq__", [](const FuncTable& a, const FuncTable& b) { return a == b; })
      .def("__str__", &formatTable)
      .def("__repr__", [](const FuncTable& f) { return "FuncTable(" + f.domain().name() + ", <" + formatTable(f) + ">)"; });

  m.def("gold_table", &goldTable, py::arg("e"), py::arg("alpha"));
  m.def("inverse_table", &inverseTable, py::arg("e"));
  m.def("identity_table", &identityTable);
  m.def("parse_table", [](const std::string& text, const Group& g, const Group& h) { return parseTable(text, g, h); });
  m.def("format_table", &formatTable);
  m.def("delta", &delta);
  m.def("is_semi_planar", [](const FuncTable& f) {
    auto v = isSemiPlanar(f);
    py::dict d;
    d["semiplanar"] = v.isSemiPlanar;
    if (v.witness) {
      d["witness"] = py::make_tuple(v.witness->a, v.witness->y, v.witness->count);
    } else {
      d["witness"] = py::none();
    }
    return d;
  });
  m.def("s_set", &sSet);
  m.def("fiber_sizes", &fiberSizes);
  m.def("limit_check", &limitCheck);
  m.def("is_bijection", &isBijection);
  m.def("equivalence_transform", [](const FuncTable& f, const Permutation& phi, const Permutation& psi, Element c,
                                    Element d) { return equivalenceTransform(f, phi, psi, c, d); });

  py::class_<Structure>(m, "Structure")
      .def(py::init<FuncTable>())
      .def_property_readonly("k", &Structure::k)
      .def_property_readonly("point_count", &Structure::pointCount)
      .def("is_incident", [](const Structure& s, Element x, Element y, Element a, Element b) {
        return s.isIncident(s.point(x, y), s.line(a, b));
      })
      .def("points_on_line", [](const Structure& s, Element a, Element b) {
        std::vector<std::pair<Element, Element>> out;
        for (PointId p : s.pointsOnLine(s.line(a, b))) out.emplace_back(s.pointX(p), s.pointY(p));
        return out;
      })
      .def("verify_axioms", [](const Structure& s, int workers) {
        return toJson(verifyAxioms(s, workers)).dump();
      }, py::arg("workers") = 1)
      .def("component_count", [](const Structure& s) { return components(s).componentCount; })
      .def("classify", [](const Structure& s) { return splitDict(classifySplit(s, components(s))); })
      .def("component_is_hypercube", [](const Structure& s, int label, int n) {
        auto part = components(s);
        return isHypercubeGraph(componentGraph(s, part, label).graph, n);
      })
      .def("component_is_divisible", [](const Structure& s, int label) {
        return verifyDivisible(s, components(s), label).isDivisible;
      })
      .def("phi_isomorphism", [](const Structure& s, Element h) {
        return verifyPhiIsomorphism(s, components(s), h);
      })
      .def("to_dot", [](const Structure& s, bool colored) {
        if (!colored) return exportDot(s);
        auto part = components(s);
        return exportDot(s, &part);
      }, py::arg("colored") = false);

  m.def("exhaustive_search", [](const Group& g, const Group& h, bool normalize, bool prune, bool fiberLimit,
                                int workers) {
    SearchOptions opts;
    opts.fixZeroAtZero = normalize;
    opts.usePruning = prune;
    opts.useFiberLimit = fiberLimit;
    opts.workers = workers;
    py::gil_scoped_release release;
    return exhaustiveSearch(g, h, opts).found;
  }, py::arg("G"), py::arg("H"), py::arg("normalize") = true, py::arg("prune") = true, py::arg("fiber_limit") = true,
        py::arg("workers") = 1);
  m.def("orbit_reduce", &orbitReduce);
  m.def("verify_z6_nonexistence", [] {
    py::gil_scoped_release release;
    return verifyZ6NonExistence();
  });
}
