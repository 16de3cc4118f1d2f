#include "bkptau/fock.hpp"
#include "bkptau/hierarchy.hpp"
#include "bkptau/json_io.hpp"
#include "bkptau/schur.hpp"
#include "bkptau/tau.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace bkptau;

namespace {

using Rows = std::vector<std::vector<std::string>>;

TauSpec make_spec(const std::vector<unsigned>& lambda, const Rows& constants) {
    TauSpec spec = TauSpec::plain(ExtendedStrictPartition(lambda));
    if (constants.size() > spec.lambda.length()) throw std::invalid_argument("more constant rows than parts of lambda");
    for (std::size_t i = 0; i < constants.size(); ++i)
        for (const auto& c : constants[i]) spec.constants[i].push_back(parse_rational(c));
    spec.validate();
    return spec;
}

py::dict report(const DefectReport& r) {
    py::dict d;
    d["is_zero"] = r.is_zero;
    d["defect"] = r.defect;
    d["witness"] = r.witness ? py::cast(r.witness->to_string()) : py::none();
    return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Exact polynomial BKP and KP tau-functions";

    py::class_<Poly>(m, "Poly")
        .def(py::init([](const std::string& text) { return parse_poly(text); }), py::arg("text") = "0")
        .def("__str__", [](const Poly& p) { return canonical_string(p); })
        .def("__repr__", [](const Poly& p) { return "Poly('" + canonical_string(p) + "')"; })
        .def("__eq__", [](const Poly& a, const Poly& b) { return a == b; })
        .def("__add__", [](const Poly& a, const Poly& b) { return a + b; })
        .def("__sub__", [](const Poly& a, const Poly& b) { return a - b; })
        .def("__mul__", [](const Poly& a, const Poly& b) { return a * b; })
        .def("__pow__", [](const Poly& a, unsigned e) { return a.pow(e); })
        .def("__len__", &Poly::size)
        .def_property_readonly("is_zero", &Poly::is_zero)
        .def_property_readonly("is_real", &Poly::is_real)
        .def_property_readonly("odd_only", &Poly::odd_only)
        .def_property_readonly("weighted_degree", &Poly::weighted_degree)
        .def("restrict_even_zero", &restrict_even_zero)
        .def("to_json", [](const Poly& p) { return poly_json(p).dump(); });

    m.def("tau_bkp", [](const std::vector<unsigned>& l, const Rows& c) { return tau_bkp(make_spec(l, c)); },
          py::arg("lam"), py::arg("constants") = Rows{});
    m.def("tau_kp_square", [](const std::vector<unsigned>& l, const Rows& c) { return tau_kp_square(make_spec(l, c)); },
          py::arg("lam"), py::arg("constants") = Rows{});
    m.def("oracle_tau_bkp", [](const std::vector<unsigned>& l, const Rows& c) { return fock::oracle_tau_bkp(make_spec(l, c)); },
          py::arg("lam"), py::arg("constants") = Rows{});
    m.def("oracle_tau_kp_square",
          [](const std::vector<unsigned>& l, const Rows& c) { return fock::oracle_tau_kp_square(make_spec(l, c)); },
          py::arg("lam"), py::arg("constants") = Rows{});
    m.def("schur", [](const std::vector<unsigned>& l) { return schur_lambda(Partition(l)); }, py::arg("lam"));
    m.def("q_schur", [](const std::vector<unsigned>& l) { return q_schur(ExtendedStrictPartition(l)); }, py::arg("lam"));
    m.def("kp_square_partition",
          [](const std::vector<unsigned>& l) { return kp_square_partition(ExtendedStrictPartition(l)).parts(); },
          py::arg("lam"));
    m.def("kdv_tau", &kdv_tau, py::arg("k"));
    m.def("kdv_half", &kdv_half, py::arg("k"));
    m.def("kp_defect", [](const Poly& a, const Poly& b, unsigned d) { return report(kp_defect(a, b, d)); },
          py::arg("tau_k"), py::arg("tau_l"), py::arg("d") = 0);
    m.def("bkp_defect", [](const Poly& p) { return report(bkp_defect(p)); }, py::arg("tau"));
    m.def("character_check", &character_check, py::arg("order"));
    m.def("wick_vev", [](const std::string& word) { return fock::wick_vev(fock::parse_word(word)); }, py::arg("word"));
}
