#include <pybind11/complex.h>
#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "vassiliev/chords.hpp"
#include "vassiliev/codes.hpp"
#include "vassiliev/error.hpp"
#include "vassiliev/fixtures.hpp"
#include "vassiliev/kontsevich.hpp"
#include "vassiliev/lie.hpp"
#include "vassiliev/samples.hpp"
#include "vassiliev/skein.hpp"

namespace py = pybind11;
using namespace vassiliev;

namespace {

// Nested JSON values cross the boundary as text and are decoded by the package.
std::string dump(const nlohmann::json& j) { return j.dump(); }

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Finite-type knot invariants, chord diagrams and iterated integrals";

  PYBIND11_CONSTINIT static py::gil_safe_call_once_and_store<py::object> error_type;
  error_type.call_once_and_store_result([&] { return py::object(py::exception<Error>(m, "Error", PyExc_ValueError)); });
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::object type = error_type.get_stored();
      py::object exc = type(e.what());
      exc.attr("module") = e.module();
      exc.attr("position") = e.position() ? py::cast(*e.position()) : py::none();
      PyErr_SetObject(type.ptr(), exc.ptr());
    }
  });

  py::class_<LaurentPoly>(m, "LaurentPoly")
      .def(py::init<LaurentPoly::Coefficient>(), py::arg("constant") = 0)
      .def_static("parse", &LaurentPoly::parse)
      .def("coefficient", &LaurentPoly::coefficient)
      .def_property_readonly("terms", &LaurentPoly::terms)
      .def("__eq__", [](const LaurentPoly& a, const LaurentPoly& b) { return a == b; })
      .def("__add__", [](const LaurentPoly& a, const LaurentPoly& b) { return a + b; })
      .def("__sub__", [](const LaurentPoly& a, const LaurentPoly& b) { return a - b; })
      .def("__mul__", [](const LaurentPoly& a, const LaurentPoly& b) { return a * b; })
      .def("__neg__", [](const LaurentPoly& a) { return -a; })
      .def("__str__", [](const LaurentPoly& p) { return p.to_string(); })
      .def("__repr__", [](const LaurentPoly& p) { return "LaurentPoly('" + p.to_string() + "')"; });

  py::class_<SingularDiagram>(m, "SingularDiagram")
      .def_static("unknot", &SingularDiagram::unknot)
      .def_property_readonly("crossings", &SingularDiagram::crossings)
      .def_property_readonly("nodes", &SingularDiagram::nodes)
      .def_property_readonly("component_count", &SingularDiagram::component_count)
      .def("key", &SingularDiagram::key)
      .def("gauss", [](const SingularDiagram& d) { return to_gauss(d); })
      .def("pd", [](const SingularDiagram& d) { return to_pd(d); })
      .def("_json", [](const SingularDiagram& d) { return dump(to_json(d)); })
      .def("__eq__", [](const SingularDiagram& a, const SingularDiagram& b) { return a == b; })
      .def("__repr__", [](const SingularDiagram& d) { return "SingularDiagram('" + to_gauss(d) + "')"; });

  m.def("parse_code", &parse_code, py::arg("text"));
  m.def("parse_gauss", &parse_gauss, py::arg("text"));
  m.def("parse_pd", &parse_pd, py::arg("text"));
  m.def("isomorphic", &isomorphic);
  m.def("writhe", &writhe);
  m.def("linking_number", &linking_number, py::arg("diagram"), py::arg("first") = 0, py::arg("second") = 1);
  m.def("switch_crossing", &switch_crossing);
  m.def("resolve_node", [](const SingularDiagram& d, int id, const std::string& r) {
    if (r == "+") return resolve_node(d, id, Resolution::Positive);
    if (r == "-") return resolve_node(d, id, Resolution::Negative);
    if (r == "0") return resolve_node(d, id, Resolution::Smooth);
    throw Error("knot_codes", "resolution must be '+', '-' or '0'");
  });

  m.def("conway", &conway);
  m.def("v2", &v2);
  m.def("vassiliev_eval", [](const SingularDiagram& g) {
    return vassiliev_eval<LaurentPoly>([](const SingularDiagram& d) { return conway(d); }, g);
  }, "Vassiliev extension of the Conway polynomial.");
  m.def("extend_conway", [](std::int64_t a, std::int64_t b, std::int64_t c, const SingularDiagram& g) {
    auto r = extend_invariant<LaurentPoly>([](const SingularDiagram& d) { return conway(d); }, a, b, c, g);
    return py::make_tuple(r.value, r.resolution_count);
  }, py::arg("a"), py::arg("b"), py::arg("c"), py::arg("graph"));
  m.def("random_singular_knots", [](std::uint64_t seed, std::size_t count, int nodes, int max_letters) {
    return random_singular_knots(seed, count, {nodes, max_letters, 2, 4});
  }, py::arg("seed"), py::arg("count"), py::arg("nodes") = 1, py::arg("max_letters") = 8);

  py::class_<ChordDiagram>(m, "ChordDiagram")
      .def(py::init<std::vector<int>>())
      .def(py::init<std::vector<int>, std::vector<int>>())
      .def_static("from_word", &ChordDiagram::from_word, py::arg("labels"), py::arg("circle_sizes") = std::vector<int>{})
      .def_property_readonly("degree", &ChordDiagram::degree)
      .def_property_readonly("partner", &ChordDiagram::partner)
      .def_property_readonly("circle_sizes", &ChordDiagram::circle_sizes)
      .def("word", &ChordDiagram::word)
      .def("__eq__", [](const ChordDiagram& a, const ChordDiagram& b) { return a == b; })
      .def("__lt__", [](const ChordDiagram& a, const ChordDiagram& b) { return a < b; })
      .def("__hash__", [](const ChordDiagram& d) { return py::hash(py::str(d.to_string())); })
      .def("__repr__", [](const ChordDiagram& d) { return "ChordDiagram(" + d.to_string() + ")"; });

  m.def("chord_diagram_of", &chord_diagram_of);
  m.def("enumerate_chord_diagrams", [](int degree) {
    auto e = enumerate_chord_diagrams(degree);
    return py::make_tuple(e.raw_count, std::vector<ChordDiagram>(e.classes.begin(), e.classes.end()));
  }, "Returns (raw matching count, rotation classes).");
  m.def("four_term_relations", [](int degree) {
    std::vector<std::pair<std::array<int, 4>, std::array<ChordDiagram, 4>>> out;
    for (const auto& r : four_term_relations(degree)) out.push_back({r.signs, r.diagrams});
    return out;
  });

  py::class_<LieAlgebraData>(m, "LieAlgebra")
      .def_readonly("name", &LieAlgebraData::name)
      .def_readonly("dimension", &LieAlgebraData::dimension)
      .def("f", &LieAlgebraData::f)
      .def("axiom_errors", [](const LieAlgebraData& lie) {
        auto r = check_axioms(lie);
        return py::dict(py::arg("normalization") = r.normalization_error, py::arg("closure") = r.closure_error,
                        py::arg("antisymmetry") = r.antisymmetry_error);
      });
  m.def("lie_algebra", &lie_algebra_by_name, py::arg("name"));
  m.def("weight", &weight, py::arg("algebra"), py::arg("diagram"));
  m.def("satisfies_4T", [](const LieAlgebraData& lie, int degree, double tolerance) {
    return satisfies_4T([&](const ChordDiagram& d) { return weight(lie, d); }, degree, tolerance).satisfied;
  }, py::arg("algebra"), py::arg("degree"), py::arg("tolerance") = 1e-9);

  m.def("fixture_names", &fixture_names);

  py::class_<Quadrature>(m, "Quadrature")
      .def(py::init([](int steps, double epsilon, int threads) { return Quadrature{steps, epsilon, threads}; }),
           py::arg("steps") = 2000, py::arg("epsilon") = 1e-3, py::arg("threads") = 0)
      .def_readwrite("steps", &Quadrature::steps)
      .def_readwrite("epsilon", &Quadrature::epsilon)
      .def_readwrite("threads", &Quadrature::threads);

  py::class_<MorseKnot>(m, "MorseKnot")
      .def_static("fixture", [](const std::string& name, int samples) { return MorseKnot(fixture_by_name(name, samples)); },
                  py::arg("name"), py::arg("samples") = 400)
      .def_static("_from_json", [](const std::string& text) { return MorseKnot(curve_from_json(nlohmann::json::parse(text))); })
      .def_property_readonly("critical_levels", &MorseKnot::critical_levels)
      .def_property_readonly("component_count", &MorseKnot::component_count)
      .def("maxima", py::overload_cast<>(&MorseKnot::maxima, py::const_))
      .def("diagram", [](const MorseKnot& mk) { return curve_diagram(mk.curve()); },
           "Projected diagram of the sampled curve.")
      .def("_summary", [](const MorseKnot& mk) { return dump(mk.summary()); });

  m.def("_degree_coefficients", [](const MorseKnot& mk, int degree, const Quadrature& q, bool normalize) {
    py::gil_scoped_release release;
    auto table = degree_coefficients(mk, degree, q);
    if (normalize) table = hump_normalize(table);
    return dump(to_json(table));
  });
  m.def("linking_integral", [](const MorseKnot& mk, std::size_t first, std::size_t second, const Quadrature& q) {
    Estimate e;
    {
      py::gil_scoped_release release;
      e = linking_integral(mk, first, second, q);
    }
    return py::make_tuple(e.value, e.error, e.converged);
  }, py::arg("knot"), py::arg("first") = 0, py::arg("second") = 1, py::arg("quadrature") = Quadrature{},
     "Returns (value, error estimate, converged).");
}
