// Python bindings for the main operations. Rationals cross the boundary as "num/den" strings and
// are turned into fractions.Fraction by the package wrapper.
#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "multizeta/bernoulli.hpp"
#include "multizeta/desing.hpp"
#include "multizeta/multiple_l.hpp"
#include "multizeta/numeric.hpp"
#include "multizeta/polylog.hpp"
#include "multizeta/twisted_bernoulli.hpp"

namespace py = pybind11;
using namespace mz;

namespace {

std::vector<Rational> rats(const std::vector<std::string>& v) {
    std::vector<Rational> out;
    for (const auto& s : v) out.push_back(parse_rational(s));
    return out;
}

py::dict padic_dict(const PadicInt& x) {
    py::dict d;
    d["p"] = x.p();
    d["precision"] = x.precision();
    d["residue"] = x.residue();
    d["shift"] = x.shift();
    return d;
}

TmplSpec tmpl_spec(u64 p, std::vector<int> n, int order, std::vector<long> exps, std::optional<std::string> z, int M,
                   bool strict) {
    TmplSpec s;
    s.p = p;
    s.n = std::move(n);
    s.order = order;
    s.xi_exps = std::move(exps);
    if (z) s.z = parse_rational(*z);
    s.M = M;
    s.range = strict ? IndexRange::Strict : IndexRange::Integral;
    return s;
}

}  // namespace

PYBIND11_MODULE(_multizeta, m) {
    m.doc() = "Exact, p-adic and numerical multiple zeta and L-values";
    py::register_exception<Error>(m, "MultizetaError", PyExc_ValueError);

    m.def("bernoulli", [](unsigned n) { return to_string(bernoulli(n)); }, py::arg("n"));
    m.def("root_sum_twisted", [](int n, int c) { return to_string(root_sum_twisted(n, c)); }, py::arg("n"), py::arg("c"));

    m.def(
        "desing_coeffs",
        [](int r) {
            std::vector<std::tuple<std::vector<int>, std::vector<int>, long>> out;
            for (const auto& e : desing_coeffs(r).entries) out.emplace_back(e.l, e.m, e.a.get_si());
            return out;
        },
        py::arg("r"));
    m.def(
        "desing_value",
        [](const std::vector<int>& k, const std::vector<std::string>& gammas) {
            return to_string(desing_value_nonpos(k, rats(gammas)));
        },
        py::arg("k"), py::arg("gammas"));

    m.def(
        "L_closed",
        [](const std::vector<int>& n, const std::vector<std::string>& gammas, int c, u64 p) {
            return to_string(L_value_nonpos_closed(n, rats(gammas), c, p));
        },
        py::arg("n"), py::arg("gammas"), py::arg("c"), py::arg("p"));
    m.def(
        "L_genfun",
        [](const std::vector<int>& n, const std::vector<std::string>& gammas, int c, u64 p) {
            return to_string(L_value_genfun(n, rats(gammas), Rational(c), p));
        },
        py::arg("n"), py::arg("gammas"), py::arg("c"), py::arg("p"));
    m.def(
        "L_riemann",
        [](u64 p, int c, const std::vector<long>& s, const std::vector<long>& k, const std::vector<std::string>& gammas,
           int N, int M) { return padic_dict(L_value_riemann(LSpec{p, c, s, k, rats(gammas)}, N, M)); },
        py::arg("p"), py::arg("c"), py::arg("s"), py::arg("k"), py::arg("gammas"), py::arg("N"), py::arg("M"));
    m.def(
        "functional_relation_residual",
        [](const std::vector<int>& n, const std::vector<long>& k, const std::vector<std::string>& gammas, int c, u64 p) {
            return to_string(functional_relation_residual(n, k, rats(gammas), c, p));
        },
        py::arg("n"), py::arg("k"), py::arg("gammas"), py::arg("c"), py::arg("p"));
    m.def(
        "kummer_check",
        [](const std::vector<int>& mm, const std::vector<int>& n, const std::vector<int>& l,
           const std::vector<std::string>& gammas, int c, u64 p) -> std::optional<long> {
            long v = kummer_check(mm, n, l, rats(gammas), c, p);
            if (v >= kInfiniteValuation) return std::nullopt;
            return v;
        },
        py::arg("m"), py::arg("n"), py::arg("l"), py::arg("gammas"), py::arg("c"), py::arg("p"));

    m.def(
        "tmpl_gM",
        [](u64 p, std::vector<int> n, int order, std::vector<long> exps, std::optional<std::string> z, int M, bool strict) {
            return padic_dict(tmpl_gM_exact(tmpl_spec(p, std::move(n), order, std::move(exps), std::move(z), M, strict)));
        },
        py::arg("p"), py::arg("n"), py::arg("order"), py::arg("xi_exps"), py::arg("z"), py::arg("M"),
        py::arg("strict") = false);
    m.def(
        "L_ell_residual",
        [](const std::vector<int>& n, int c, u64 p, int M, int N, bool strict) {
            return padic_dict(L_ell_residual(n, c, p, M, N, strict ? IndexRange::Strict : IndexRange::Integral));
        },
        py::arg("n"), py::arg("c"), py::arg("p"), py::arg("M"), py::arg("N"), py::arg("strict") = false);

    m.def(
        "mzf",
        [](const std::vector<cplx>& s, const std::vector<cplx>& xis, const std::vector<cplx>& gammas, double tol) {
            auto r = mzf_numeric({s, xis, gammas, tol});
            return py::make_tuple(r.value, r.error, r.converged);
        },
        py::arg("s"), py::arg("xis") = std::vector<cplx>{}, py::arg("gammas") = std::vector<cplx>{},
        py::arg("tol") = 1e-8);
    m.def(
        "thex_residual",
        [](const std::vector<cplx>& s, const std::vector<cplx>& gammas, double tol) {
            auto r = thex_residual(s, gammas, tol);
            return py::make_tuple(r.lhs, r.rhs, r.residual);
        },
        py::arg("s"), py::arg("gammas") = std::vector<cplx>{}, py::arg("tol") = 1e-8);
}
