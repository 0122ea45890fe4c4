#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "bigrade/parse.hpp"
#include "bigrade/regularity.hpp"

namespace py = pybind11;
using namespace bigrade;

namespace {

BlockOrder order_of(const std::string& s) {
    if (s == "x<y") return BlockOrder::XBlockLow;
    if (s == "y<x") return BlockOrder::YBlockLow;
    throw contract_error("order must be 'x<y' or 'y<x'");
}

Ideal ideal_from_text(const std::string& text, const std::string& field,
                      const std::string& order, bool allow_inhomogeneous) {
    std::istringstream in(text);
    return parse_ideal_stream(in, parse_field_spec(field), order_of(order),
                              allow_inhomogeneous).ideal;
}

std::vector<std::pair<int, int>> pairs(const std::vector<Bidegree>& ds) {
    std::vector<std::pair<int, int>> out;
    for (const auto& d : ds) out.emplace_back(d.a, d.b);
    return out;
}

} // namespace

PYBIND11_MODULE(_bigrade, m) {
    m.doc() = "bigraded ideal computations on P^n x P^m";

    py::register_exception<parse_error>(m, "ParseError");
    py::register_exception<genericity_error>(m, "GenericityError");
    py::register_exception<contradiction_error>(m, "ContradictionError");
    py::register_exception<contract_error>(m, "ContractError");

    py::class_<Region>(m, "Region")
        .def_property_readonly("floor",
                               [](const Region& r) {
                                   return std::make_pair(r.floor().a, r.floor().b);
                               })
        .def_property_readonly("minimal_elements",
                               [](const Region& r) { return pairs(r.minimal_elements()); })
        .def("contains", [](const Region& r, int a, int b) { return r.contains({a, b}); })
        .def("__repr__", [](const Region& r) { return "Region" + r.str(); });

    py::class_<MonomialIdeal>(m, "MonomialIdeal")
        .def_property_readonly("min_gens",
                               [](const MonomialIdeal& M) {
                                   std::vector<std::string> out;
                                   for (const auto& g : M.min_gens())
                                       out.push_back(g.str(M.ring()));
                                   return out;
                               })
        .def_property_readonly("gen_bidegrees",
                               [](const MonomialIdeal& M) { return pairs(M.gen_bidegrees()); })
        .def("hilbert_function",
             [](const MonomialIdeal& M, int a, int b) {
                 return hilbert_function(M, {a, b});
             })
        .def("is_biborel", [](const MonomialIdeal& M) { return is_biborel(M); })
        .def("xreg", [](const MonomialIdeal& M) { return xreg_region(M); })
        .def("xtor", [](const MonomialIdeal& M) { return xtor(M); })
        .def("ytor", [](const MonomialIdeal& M) { return ytor(M); })
        .def("generator_at",
             [](const MonomialIdeal& M, int a, int b) {
                 return generator_bidegree_test(M, {a, b});
             });

    py::class_<Ideal>(m, "Ideal")
        .def_property_readonly("generators",
                               [](const Ideal& I) {
                                   std::vector<std::string> out;
                                   for (const auto& g : I.generators) out.push_back(g.str());
                                   return out;
                               })
        .def_property_readonly("ring",
                               [](const Ideal& I) {
                                   return std::make_pair(I.ring.nx, I.ring.ny);
                               })
        .def("__str__", [](const Ideal& I) { return print_ideal(I); });

    m.def("parse_ideal", &ideal_from_text, py::arg("text"),
          py::arg("field") = "qq", py::arg("order") = "x<y",
          py::arg("allow_inhomogeneous") = false);

    m.def("groebner_basis", [](const Ideal& I) {
        std::vector<std::string> out;
        for (const auto& g : reduced_basis(I).elements) out.push_back(g.str());
        return out;
    });

    m.def("initial_ideal", [](const Ideal& I) { return initial_ideal(I); });

    m.def("saturate",
          [](const Ideal& I, const std::string& by) {
              Ideal S(I.ring);
              if (by == "b") S = saturate(I, SaturationMode::ByB);
              else if (by == "mx") S = saturate(I, SaturationMode::ByMx);
              else if (by == "my") S = saturate(I, SaturationMode::ByMy);
              else S = saturate_poly(I, parse_polynomial(by, I.ring));
              return Ideal(I.ring, reduced_basis(S).elements);
          },
          py::arg("ideal"), py::arg("by") = "b");

    m.def("is_empty_variety", [](const Ideal& I) { return is_empty_variety(I); });

    m.def("bigin",
          [](const Ideal& I, const std::string& order, std::uint64_t seed) {
              return bigin(I, order_of(order), seed).ideal;
          },
          py::arg("ideal"), py::arg("order") = "x<y", py::arg("seed") = 42);

    m.def("xreg",
          [](const Ideal& I, std::uint64_t seed) { return xreg_of_ideal(I, seed); },
          py::arg("ideal"), py::arg("seed") = 42);

    m.def("reg_empty", [](const Ideal& I) { return reg_empty(I); });
}
