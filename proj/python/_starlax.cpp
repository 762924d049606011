#include <pybind11/pybind11.h>
#include <pybind11/operators.h>
#include <pybind11/stl.h>

#include "starlax/errors.hpp"
#include "starlax/suite.hpp"
#include "starlax/waring.hpp"

namespace py = pybind11;
using namespace starlax;

namespace {

py::dict to_dict(const CheckReport& r)
{
    py::dict d;
    d["name"] = r.name;
    d["pass"] = r.pass;
    d["residual_terms"] = r.residual_terms;
    d["witness"] = r.witness ? py::object(py::str(*r.witness)) : py::object(py::none());
    d["wall_time_ms"] = r.wall_time_ms;
    return d;
}

py::list to_list(const std::vector<CheckReport>& rs)
{
    py::list out;
    for (const auto& r : rs) out.append(to_dict(r));
    return out;
}

Params params_of(const std::string& s) { return s.empty() ? Params{} : Params::parse(s); }

std::optional<RGroup> group_of_opt(const std::optional<std::string>& g)
{
    return g ? std::optional<RGroup>(parse_group(*g)) : std::nullopt;
}

ChiVariant variant_of(const std::string& v)
{
    if (v == "plain") return ChiVariant::plain;
    if (v == "tilde") return ChiVariant::tilde;
    throw ArgumentError("variant must be 'plain' or 'tilde'");
}

PhasePoly exp_term(int particle, const std::string& c, int order, bool momentum)
{
    Mono m;
    if (momentum)
        m.exp_p(particle, Rational::parse(c));
    else
        m.exp_q(particle, Rational::parse(c));
    return PhasePoly(ParamRat::constant(GaussRational(1), order), m);
}

} // namespace

PYBIND11_MODULE(_starlax, m)
{
    m.doc() = "Exact star-product and Lax-integrability engine";

    py::register_exception<ArgumentError>(m, "ArgumentError", PyExc_ValueError);
    py::register_exception<ConfigurationError>(m, "ConfigurationError", PyExc_ValueError);

    py::class_<PhasePoly>(m, "Observable", "Polynomial-exponential function on phase space with hbar-series coefficients")
        .def_static("q", &PhasePoly::q, py::arg("particle"), py::arg("order"))
        .def_static("p", &PhasePoly::p, py::arg("particle"), py::arg("order"))
        .def_static(
            "exp_q", [](int i, const std::string& c, int order) { return exp_term(i, c, order, false); },
            py::arg("particle"), py::arg("coeff"), py::arg("order"), "exp(coeff * q_particle); coeff like '1/2'")
        .def_static(
            "exp_p", [](int i, const std::string& c, int order) { return exp_term(i, c, order, true); },
            py::arg("particle"), py::arg("coeff"), py::arg("order"))
        .def_static(
            "constant",
            [](const std::string& re, const std::string& im, int order) {
                return PhasePoly::constant(GaussRational(Rational::parse(re), Rational::parse(im)), order);
            },
            py::arg("re"), py::arg("im") = "0", py::arg("order"))
        .def(py::self + py::self)
        .def(py::self - py::self)
        .def(py::self * py::self)
        .def(-py::self)
        .def(py::self == py::self)
        .def("is_zero", &PhasePoly::is_zero)
        .def("__len__", &PhasePoly::size)
        .def("__str__", &PhasePoly::str)
        .def("__repr__", [](const PhasePoly& f) { return "Observable(" + f.str() + ")"; })
        .def("hbar_coefficient", &PhasePoly::hbar_coefficient);

    m.def("star_weyl", &star_weyl);
    m.def("star_standard", &star_standard);
    m.def("star_commutator", &star_commutator);
    m.def("poisson", &poisson);
    m.def("n_transform", &n_transform, py::arg("f"), py::arg("direction") = 1);

    m.def(
        "check_rll",
        [](const std::string& s, const std::string& params, int order, const std::optional<std::string>& r) {
            return to_dict(check_rll(parse_system(s), params_of(params), order, group_of_opt(r)));
        },
        py::arg("system"), py::arg("params") = "", py::arg("order") = 8, py::arg("r_override") = py::none());
    m.def(
        "check_rtt",
        [](const std::string& s, int n, const std::string& params, int order, const std::optional<std::string>& r) {
            return to_dict(check_rtt(parse_system(s), n, params_of(params), order, group_of_opt(r)));
        },
        py::arg("system"), py::arg("n") = 2, py::arg("params") = "", py::arg("order") = 6, py::arg("r_override") = py::none());
    m.def(
        "check_char_commute",
        [](const std::string& s, int n, const std::string& variant, const std::string& params, int order) {
            return to_dict(check_char_commute(parse_system(s), n, variant_of(variant), params_of(params), order));
        },
        py::arg("system"), py::arg("n"), py::arg("variant") = "plain", py::arg("params") = "", py::arg("order") = 6);
    m.def(
        "classical_checks", [](int n, std::uint64_t seed) { return to_list(classical_checks(n, seed)); }, py::arg("n"),
        py::arg("seed") = 1);
    m.def(
        "cybe_reports", [](int order) { return to_list(cybe_reports(order)); }, py::arg("order") = 8);
    m.def(
        "qybe_reports",
        [](int order, const std::string& params, std::uint64_t seed) {
            return to_list(qybe_reports(order, params_of(params), seed));
        },
        py::arg("order") = 8, py::arg("params") = "", py::arg("seed") = 1);
    m.def(
        "unitarity_reports",
        [](int order, const std::string& params) { return to_list(unitarity_reports(order, params_of(params))); },
        py::arg("order") = 8, py::arg("params") = "");

    m.def("trace_poly", &trace_poly, py::arg("n"), py::arg("k"), py::arg("order"), "tr L^k for the Toda chain");
    m.def(
        "corrected_trace_poly", [](int n, int k, int order) { return corrected_trace_poly(n, k, order); },
        py::arg("n"), py::arg("k"), py::arg("order"), "star-Waring of the characteristic coefficients");
    m.def("quantum_correction", &quantum_correction, py::arg("n"), py::arg("k"), py::arg("order"));
    m.def("closed_form_correction", &closed_form_correction, py::arg("n"), py::arg("k"), py::arg("order"),
          "closed-form correction for k = 4, 5, 6");

    m.def(
        "run_acceptance",
        [](std::uint64_t seed, int jobs, const std::vector<int>& only) {
            py::list out;
            for (const auto& c : run_acceptance(seed, jobs, only)) {
                py::dict d;
                d["id"] = c.id;
                d["title"] = c.title;
                d["pass"] = c.pass;
                d["wall_time_ms"] = c.wall_time_ms;
                d["budget_ms"] = c.budget_ms;
                d["checks"] = to_list(c.checks);
                out.append(d);
            }
            return out;
        },
        py::arg("seed") = 20240611, py::arg("jobs") = 1, py::arg("only") = std::vector<int>{});
}
