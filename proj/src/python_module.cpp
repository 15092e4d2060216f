// Python bindings. Values cross the boundary as JSON text; the Python
// package decodes them into plain dicts and lists.

#include "kakimizu/complex.hpp"
#include "kakimizu/diagram.hpp"
#include "kakimizu/error.hpp"
#include "kakimizu/json_io.hpp"
#include "kakimizu/structure.hpp"
#include "kakimizu/surfaces.hpp"
#include "kakimizu/theta.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>
#include <vector>

namespace py = pybind11;
using namespace kakimizu;

namespace {

/// Theta graph of either input kind: a diagram document or a theta document.
ThetaGraph theta_of(const std::string& text) {
    Json j = parse_json_text(text);
    if (j.is_object() && j.contains("crossings")) return theta_pipeline(diagram_from_json(j)).theta();
    return theta_from_json(j);
}

std::string validate_json(const std::string& text) { return to_json(validate(parse_diagram(text))).dump(); }

std::string seifert_json(const std::string& text) { return to_json(seifert(parse_diagram(text))).dump(); }

std::string theta_json(const std::string& text) { return to_json(theta_of(text)).dump(); }

std::string complex_json(const std::string& text) { return to_json(build_complex(theta_of(text))).dump(); }

std::string homology_json(const std::string& text) { return to_json(homology(build_complex(theta_of(text)))).dump(); }

std::string ball_json(const std::string& text) {
    ThetaGraph t = theta_of(text);
    return to_json(ball_report(t, build_complex(t))).dump();
}

std::string esd_json(int n, int m) {
    if (n < 0 || m < 1) throw PreconditionError("esd needs n >= 0 and m >= 1");
    return to_json(esd(n, m)).dump();
}

bool fibred(const std::string& text) { return is_fibred(white_region_graph(parse_diagram(text))); }

int distance_between(const std::string& text, const std::vector<int>& u, const std::vector<int>& v) {
    SimplicialComplex k = build_complex(theta_of(text));
    const int a = k.index_of(u), b = k.index_of(v);
    if (a < 0 || b < 0) throw PreconditionError("weight vector is not a vertex of K");
    return distance(k, a, b);
}

std::string surface_json(const std::string& text, std::optional<std::vector<int>> vertex, bool negative) {
    SurfaceModel m = make_surface_model(parse_diagram(text));
    WeightVector v = vertex ? *vertex : m.theta().base_vertex();
    auto conv = negative ? EmptyConvention::AllNegative : EmptyConvention::AllPositive;
    return to_json(realize(m, v, conv), m.diagram).dump();
}

} // namespace

PYBIND11_MODULE(_core, mod) {
    mod.doc() = "Combinatorial Kakimizu complexes of special alternating links";

    auto base = py::register_exception<Error>(mod, "Error");
    py::register_exception<ParseError>(mod, "ParseError", base.ptr());
    py::register_exception<PreconditionError>(mod, "PreconditionError", base.ptr());
    py::register_exception<InvariantError>(mod, "InvariantError", base.ptr());

    mod.def("validate", &validate_json, py::arg("diagram"));
    mod.def("seifert", &seifert_json, py::arg("diagram"));
    mod.def("theta", &theta_json, py::arg("source"));
    mod.def("complex", &complex_json, py::arg("source"));
    mod.def("homology", &homology_json, py::arg("source"));
    mod.def("ball", &ball_json, py::arg("source"));
    mod.def("esd", &esd_json, py::arg("n"), py::arg("m"));
    mod.def("is_fibred", &fibred, py::arg("diagram"));
    mod.def("distance", &distance_between, py::arg("source"), py::arg("u"), py::arg("v"));
    mod.def("surface", &surface_json, py::arg("diagram"), py::arg("vertex") = py::none(),
            py::arg("negative") = false);
}
