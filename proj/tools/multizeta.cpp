// multizeta command-line front end. Exit codes: 0 success, 1 domain error, 2 usage error.
#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <optional>

#include "CLI11.hpp"
#include "checks.hpp"
#include "multizeta/bernoulli.hpp"
#include "multizeta/desing.hpp"
#include "multizeta/json_io.hpp"
#include "multizeta/measure.hpp"
#include "multizeta/multiple_l.hpp"
#include "multizeta/numeric.hpp"
#include "multizeta/polylog.hpp"
#include "multizeta/twisted_bernoulli.hpp"

using namespace mz;

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::vector<long> ints(const std::string& flag, const std::string& text) {
    try {
        return parse_int_list(text);
    } catch (const Error& e) {
        throw UsageError(flag + ": " + e.what());
    }
}

std::vector<int> small_ints(const std::string& flag, const std::string& text) {
    std::vector<int> out;
    for (long x : ints(flag, text)) out.push_back(static_cast<int>(x));
    return out;
}

std::vector<Rational> rationals(const std::string& flag, const std::string& text) {
    try {
        return parse_rational_list(text);
    } catch (const Error& e) {
        throw UsageError(flag + ": " + e.what());
    }
}

cplx parse_complex(const std::string& flag, std::string t) {
    try {
        size_t pos = 0;
        if (t.empty()) throw std::invalid_argument("empty");
        if (t.back() != 'i') {
            double re = std::stod(t, &pos);
            if (pos != t.size()) throw std::invalid_argument(t);
            return {re, 0};
        }
        t.pop_back();
        // split at the last sign that is not an exponent sign
        size_t split = std::string::npos;
        for (size_t i = t.size(); i-- > 1;)
            if ((t[i] == '+' || t[i] == '-') && t[i - 1] != 'e' && t[i - 1] != 'E') {
                split = i;
                break;
            }
        std::string re_s = split == std::string::npos ? "0" : t.substr(0, split);
        std::string im_s = split == std::string::npos ? t : t.substr(split);
        if (im_s == "+" || im_s == "-" || im_s.empty()) im_s += "1";
        double re = std::stod(re_s, &pos);
        if (pos != re_s.size()) throw std::invalid_argument(t);
        double im = std::stod(im_s, &pos);
        if (pos != im_s.size()) throw std::invalid_argument(t);
        return {re, im};
    } catch (const std::invalid_argument&) {
        throw UsageError(flag + ": not a complex number: '" + t + "'");
    } catch (const std::out_of_range&) {
        throw UsageError(flag + ": out of range: '" + t + "'");
    }
}

std::vector<cplx> complexes(const std::string& flag, const std::string& text) {
    std::vector<cplx> out;
    size_t start = 0;
    while (start <= text.size()) {
        size_t comma = text.find(',', start);
        if (comma == std::string::npos) comma = text.size();
        out.push_back(parse_complex(flag, text.substr(start, comma - start)));
        start = comma + 1;
    }
    return out;
}

void require_len(const std::string& flag, size_t got, size_t want) {
    if (got != want)
        throw UsageError(flag + ": expected " + std::to_string(want) + " entries, got " + std::to_string(got));
}

std::string g_format = "json";

void emit(const json& j) {
    if (g_format == "plain" && j.is_object() && j.contains("num") && j.size() == 2)
        std::cout << j["num"].get<std::string>() << (j["den"] == "1" ? "" : "/" + j["den"].get<std::string>()) << "\n";
    else
        std::cout << (g_format == "plain" ? j.dump(2) : j.dump()) << "\n";
}

json merge(json base, const json& extra) {
    for (auto it = extra.begin(); it != extra.end(); ++it) base[it.key()] = it.value();
    return base;
}

json valuation_json(long v) { return v >= kInfiniteValuation ? json("inf") : json(v); }

}  // namespace

int main(int argc, char** argv) {
    if (const char* env = std::getenv("MULTIZETA_MAX_TUPLES")) {
        try {
            set_max_tuples(std::stod(env));
        } catch (const std::exception&) {
            std::cerr << "MULTIZETA_MAX_TUPLES: not a number: '" << env << "'\n";
            return 2;
        }
    }

    CLI::App app{"Exact, p-adic and numerical evaluation of multiple zeta and L-values"};
    app.require_subcommand(1);
    app.add_option("--format", g_format, "Output format")->check(CLI::IsMember({"json", "plain"}));
    std::function<void()> action;

    // bernoulli
    unsigned bern_n = 0;
    auto* bern = app.add_subcommand("bernoulli", "Bernoulli number B_n (B_1 = -1/2)");
    bern->add_option("n", bern_n, "Index")->required();
    bern->callback([&] { action = [&] { emit(to_json(bernoulli(bern_n))); }; });

    // twisted-bernoulli
    int tb_n = 0, tb_order = 2;
    long tb_exp = 1;
    auto* tb = app.add_subcommand("twisted-bernoulli", "B_n(xi) for xi = zeta_order^exp");
    tb->add_option("--n", tb_n, "Index (>= -1)")->required();
    tb->add_option("--order", tb_order, "Order of the root of unity")->required()->check(CLI::PositiveNumber);
    tb->add_option("--exp", tb_exp, "Exponent of zeta_order")->required();
    tb->callback([&] {
        action = [&] {
            auto F = CycField::get(tb_order);
            emit(to_json(twisted_bernoulli(tb_n, CycNum::root(F, tb_exp))));
        };
    });

    // tmbn
    int tm_r = 0, tm_order = 2;
    std::string tm_n, tm_exps, tm_gamma;
    auto* tm = app.add_subcommand("tmbn", "Twisted multiple Bernoulli number");
    tm->add_option("--r", tm_r, "Depth")->required()->check(CLI::PositiveNumber);
    tm->add_option("--n", tm_n, "Indices n_1,...,n_r")->required();
    tm->add_option("--xi-order", tm_order, "Common order N of the roots")->required()->check(CLI::PositiveNumber);
    tm->add_option("--xi-exps", tm_exps, "xi_j = zeta_N^{e_j}")->required();
    tm->add_option("--gamma", tm_gamma, "gamma_1,...,gamma_r")->required();
    tm->callback([&] {
        action = [&] {
            TwistSpec spec;
            spec.N = tm_order;
            spec.xi_exps = ints("--xi-exps", tm_exps);
            spec.gammas = rationals("--gamma", tm_gamma);
            auto n = small_ints("--n", tm_n);
            require_len("--n", n.size(), tm_r);
            require_len("--xi-exps", spec.xi_exps.size(), tm_r);
            require_len("--gamma", spec.gammas.size(), tm_r);
            emit(to_json(twisted_multi_bernoulli(spec, n)));
        };
    });

    // desing
    auto* des = app.add_subcommand("desing", "Desingularized multiple zeta values");
    des->require_subcommand(1);
    int dc_r = 1;
    auto* dcoef = des->add_subcommand("coeffs", "Coefficient table of the G polynomial");
    dcoef->add_option("--r", dc_r, "Depth")->required()->check(CLI::Range(1, 8));
    dcoef->callback([&] {
        action = [&] {
            json out = json::array();
            for (const auto& e : desing_coeffs(dc_r).entries)
                out.push_back({{"l", e.l}, {"m", e.m}, {"a", std::stol(e.a.get_str())}});
            emit(out);
        };
    });
    std::string dv_k, dv_gamma, dv_route = "nu";
    auto* dval = des->add_subcommand("value", "zeta^des at (-k_1,...,-k_r)");
    dval->add_option("--k", dv_k, "k_1,...,k_r (>= 0)")->required();
    dval->add_option("--gamma", dv_gamma, "gamma_1,...,gamma_r")->required();
    dval->add_option("--route", dv_route, "nu | r2 | genfun")->check(CLI::IsMember({"nu", "r2", "genfun"}));
    dval->callback([&] {
        action = [&] {
            auto k = small_ints("--k", dv_k);
            auto g = rationals("--gamma", dv_gamma);
            require_len("--gamma", g.size(), k.size());
            for (int x : k)
                if (x < 0) throw UsageError("--k: entries must be >= 0");
            Rational v;
            if (dv_route == "nu") {
                v = desing_value_nonpos(k, g);
            } else if (dv_route == "r2") {
                if (k.size() != 2) throw UsageError("--route r2 needs depth 2");
                v = desing_value_r2_closed(k[0], k[1], g[0], g[1]);
            } else {
                v = desing_value_from_genfun(desing_genfun_oracle(static_cast<int>(k.size()), g, k), k);
            }
            emit(to_json(v));
        };
    });
    std::string dg_gamma, dg_caps;
    auto* dgen = des->add_subcommand("genfun", "Coefficients of the generating-function oracle");
    dgen->add_option("--gamma", dg_gamma, "gamma_1,...,gamma_r")->required();
    dgen->add_option("--caps", dg_caps, "Degree caps per variable")->required();
    dgen->callback([&] {
        action = [&] {
            auto g = rationals("--gamma", dg_gamma);
            auto caps = small_ints("--caps", dg_caps);
            require_len("--caps", caps.size(), g.size());
            auto series = desing_genfun_oracle(static_cast<int>(g.size()), g, caps);
            json out = json::array();
            for (const auto& [e, c] : series.coeffs())
                out.push_back({{"t", e}, {"coeff", to_json(c)}, {"value", to_json(desing_value_from_genfun(series, e))}});
            emit(out);
        };
    });

    // padic
    auto* pad = app.add_subcommand("padic", "p-adic helpers");
    pad->require_subcommand(1);
    u64 pt_p = 5;
    int pt_M = 3;
    std::string pt_x;
    auto* teich = pad->add_subcommand("teichmuller", "Teichmuller representative omega(x)");
    teich->add_option("--p", pt_p, "Odd prime")->required();
    teich->add_option("--M", pt_M, "Precision")->required()->check(CLI::PositiveNumber);
    teich->add_option("--x", pt_x, "A p-adic unit (rational)")->required();
    teich->callback([&] {
        action = [&] {
            auto x = rationals("--x", pt_x);
            require_len("--x", x.size(), 1);
            emit(to_json(teichmuller(rational_to_padic(x[0], pt_p, pt_M))));
        };
    });
    u64 pi_p = 5;
    int pi_c = 2, pi_N = 3, pi_M = 3, pi_order = 0;
    long pi_exp = 1;
    std::string pi_f = "1", pi_gamma;
    bool pi_restricted = false;
    auto* integ = pad->add_subcommand("integrate", "Riemann sum of a monomial against the measure");
    integ->add_option("--p", pi_p, "Odd prime")->required();
    integ->add_option("--c", pi_c, "c-averaged measure (c | p-1)");
    integ->add_option("--xi-order", pi_order, "Use the single-root measure of zeta_order^exp instead");
    integ->add_option("--xi-exp", pi_exp, "Exponent for --xi-order");
    integ->add_option("--N", pi_N, "Level")->required()->check(CLI::NonNegativeNumber);
    integ->add_option("--M", pi_M, "Working precision")->required()->check(CLI::PositiveNumber);
    integ->add_option("--f", pi_f, "Integrand, e.g. x^2 or x1^2*x2^-1");
    integ->add_option("--gamma", pi_gamma, "Region weights (with --restricted)");
    integ->add_flag("--restricted", pi_restricted, "Keep only cells with unit partial sums");
    integ->callback([&] {
        action = [&] {
            MonomialIntegrand mono;
            try {
                mono = MonomialIntegrand::parse(pi_f);
            } catch (const Error& e) {
                throw UsageError(std::string("--f: ") + e.what());
            }
            Region region;
            region.restricted = pi_restricted;
            std::vector<Rational> g = pi_gamma.empty() ? std::vector<Rational>{} : rationals("--gamma", pi_gamma);
            region.r = std::max<int>({1, static_cast<int>(mono.exps.size()), static_cast<int>(g.size())});
            if (pi_restricted) {
                if (g.empty()) g.assign(region.r, Rational(1));
                require_len("--gamma", g.size(), region.r);
                Zmod R(upow(pi_p, pi_M));
                for (const auto& x : g) region.gammas.push_back(R.from_rational(x));
            }
            MeasureSpec ms = pi_order > 0 ? MeasureSpec::single_root(pi_p, pi_M, teichmuller_root(pi_order, pi_exp, pi_p, pi_M))
                                          : MeasureSpec::c_average(pi_p, pi_M, pi_c);
            PadicInt v = integrate_riemann(mono.bind(pi_p, pi_M), region, {ms}, pi_N, pi_M);
            emit(merge(to_json(v), {{"guaranteed_digits", v.precision()}}));
        };
    });

    // L
    u64 L_p = 5;
    int L_c = 2, L_r = 1, L_N = 3, L_M = 3;
    std::string L_s, L_k, L_gamma, L_route = "closed";
    auto* Lc = app.add_subcommand("L", "p-adic multiple L-value at an integer point");
    Lc->add_option("--p", L_p, "Odd prime")->required();
    Lc->add_option("--c", L_c, "Integer c >= 2 prime to p")->required();
    Lc->add_option("--r", L_r, "Depth")->required()->check(CLI::PositiveNumber);
    Lc->add_option("--s", L_s, "s_1,...,s_r")->required();
    Lc->add_option("--k", L_k, "Character exponents k_1,...,k_r")->required();
    Lc->add_option("--gamma", L_gamma, "gamma_1,...,gamma_r (default all 1)");
    Lc->add_option("--route", L_route, "closed | riemann | genfun")->check(CLI::IsMember({"closed", "riemann", "genfun"}));
    Lc->add_option("--N", L_N, "Riemann level")->check(CLI::PositiveNumber);
    Lc->add_option("--M", L_M, "Riemann precision")->check(CLI::PositiveNumber);
    Lc->callback([&] {
        action = [&] {
            auto s = ints("--s", L_s);
            auto k = ints("--k", L_k);
            auto g = L_gamma.empty() ? std::vector<Rational>(L_r, Rational(1)) : rationals("--gamma", L_gamma);
            require_len("--s", s.size(), L_r);
            require_len("--k", k.size(), L_r);
            require_len("--gamma", g.size(), L_r);
            if (L_route == "riemann") {
                LSpec spec{L_p, L_c, s, k, g};
                PadicInt v = L_value_riemann(spec, L_N, L_M);
                emit(merge(to_json(v), {{"route", "riemann"}, {"guaranteed_digits", v.precision()}}));
                return;
            }
            std::vector<int> n;
            for (int j = 0; j < L_r; ++j) {
                if (s[j] > 0) throw Error(ErrorKind::PreconditionViolation, "exact routes need s_j <= 0");
                if (((k[j] + s[j]) % static_cast<long>(L_p - 1)) != 0)
                    throw Error(ErrorKind::PreconditionViolation, "exact routes need k_j = -s_j mod p-1");
                n.push_back(static_cast<int>(-s[j]));
            }
            Rational v = L_route == "closed" ? L_value_nonpos_closed(n, g, L_c, L_p) : L_value_genfun(n, g, Rational(L_c), L_p);
            emit(merge(to_json(v), {{"route", L_route}, {"guaranteed_digits", "exact"}}));
        };
    });

    // kummer
    u64 K_p = 5;
    int K_c = 2;
    std::string K_m, K_n, K_l, K_gamma;
    auto* kum = app.add_subcommand("kummer", "Check a multiple Kummer congruence");
    kum->add_option("--p", K_p, "Odd prime")->required();
    kum->add_option("--c", K_c, "Integer c >= 2 prime to p")->required();
    kum->add_option("--m", K_m, "m_1,...,m_r")->required();
    kum->add_option("--n", K_n, "n_1,...,n_r")->required();
    kum->add_option("--l", K_l, "l_1,...,l_r")->required();
    kum->add_option("--gamma", K_gamma, "gamma_1,...,gamma_r")->required();
    kum->callback([&] {
        action = [&] {
            auto m = small_ints("--m", K_m), n = small_ints("--n", K_n), l = small_ints("--l", K_l);
            auto g = rationals("--gamma", K_gamma);
            require_len("--m", m.size(), n.size());
            require_len("--l", l.size(), n.size());
            require_len("--gamma", g.size(), n.size());
            long v = kummer_check(m, n, l, g, K_c, K_p);
            int need = *std::min_element(l.begin(), l.end());
            emit({{"valuation", valuation_json(v)}, {"required", need}, {"holds", v >= need}});
        };
    });

    // funcrel
    u64 F_p = 5;
    int F_c = 2;
    std::string F_n, F_k, F_gamma;
    auto* fr = app.add_subcommand("funcrel", "Residual of the parity functional relation at s = -n");
    fr->add_option("--p", F_p, "Odd prime")->required();
    fr->add_option("--c", F_c, "Integer c >= 2 prime to p")->required();
    fr->add_option("--n", F_n, "n_1,...,n_r")->required();
    fr->add_option("--k", F_k, "k_1,...,k_r (default n)");
    fr->add_option("--gamma", F_gamma, "gamma_1,...,gamma_r")->required();
    fr->callback([&] {
        action = [&] {
            auto n = small_ints("--n", F_n);
            std::vector<long> k = F_k.empty() ? std::vector<long>(n.begin(), n.end()) : ints("--k", F_k);
            auto g = rationals("--gamma", F_gamma);
            require_len("--k", k.size(), n.size());
            require_len("--gamma", g.size(), n.size());
            Rational res = functional_relation_residual(n, k, g, F_c, F_p);
            emit({{"residual", to_json(res)}, {"vanishes", res == 0}});
        };
    });

    // tmpl
    struct TmplArgs {
        u64 p = 5;
        int c = 1, M = 3, N = 3;
        std::string n, exps, z = "1", alpha, route = "gM";
        long terms = 0;
        bool strict = false;
    } ta;
    auto add_tmpl_options = [&](CLI::App* a, bool with_point) {
        a->add_option("--p", ta.p, "Odd prime");
        a->add_option("--c", ta.c, "Order of the twisting roots (divides p-1)");
        a->add_option("--n", ta.n, "Weights n_1,...,n_r");
        a->add_option("--M", ta.M, "Limit level")->check(CLI::PositiveNumber);
        a->add_flag("--strict", ta.strict, "Use the strict index ranges 0 < l_j");
        if (with_point) {
            a->add_option("--xi-exps", ta.exps, "xi_j = zeta_c^{e_j}");
            a->add_option("--z", ta.z, "Rational point or 'inf'");
        }
    };
    auto tmpl_spec = [&]() {
        TmplSpec s;
        s.p = ta.p;
        s.n = small_ints("--n", ta.n);
        s.order = ta.c;
        s.xi_exps = ta.exps.empty() ? std::vector<long>(s.n.size(), 0) : ints("--xi-exps", ta.exps);
        require_len("--xi-exps", s.xi_exps.size(), s.n.size());
        if (ta.z != "inf") {
            auto z = rationals("--z", ta.z);
            require_len("--z", z.size(), 1);
            s.z = z[0];
        }
        s.M = ta.M;
        s.range = ta.strict ? IndexRange::Strict : IndexRange::Integral;
        return s;
    };
    auto run_eval = [&] {
        TmplSpec s = tmpl_spec();
        if (ta.route == "series") {
            long terms = ta.terms;
            if (terms <= 0) {
                if (!s.z || s.z->get_num() == 0) terms = 1;
                else terms = std::max<long>(1, (s.M + valuation(*s.z, s.p) - 1) / std::max<long>(1, valuation(*s.z, s.p)));
            }
            PadicInt v = tmpl_series(s, terms);
            emit(merge(to_json(v), {{"route", "series"}, {"terms", terms}, {"guaranteed_digits", v.precision()}}));
        } else {
            PadicInt exact = tmpl_gM_exact(s);
            PadicInt v = exact.with_precision(s.M - 1);
            double tuples = std::pow(static_cast<double>(s.p), static_cast<double>(s.M) * s.n.size());
            emit(merge(to_json(v), {{"route", "gM"}, {"guaranteed_digits", v.precision()}, {"gM_exact", to_json(exact)},
                                    {"tuples", tuples}}));
        }
    };
    auto* tmpl = app.add_subcommand("tmpl", "p-adic rigid twisted multiple polylogarithms");
    tmpl->require_subcommand(0, 1);
    add_tmpl_options(tmpl, true);
    tmpl->add_option("--route", ta.route, "gM | series")->check(CLI::IsMember({"gM", "series"}));
    tmpl->add_option("--terms", ta.terms, "Series truncation (default: enough for M digits)");
    auto* teval = tmpl->add_subcommand("eval", "Evaluate via g^M or the power series");
    add_tmpl_options(teval, true);
    teval->add_option("--route", ta.route, "gM | series")->check(CLI::IsMember({"gM", "series"}));
    teval->add_option("--terms", ta.terms, "Series truncation");
    teval->callback([&] { action = run_eval; });
    auto* tpart = tmpl->add_subcommand("partial", "Partial sum with fixed residues alpha_j");
    add_tmpl_options(tpart, true);
    tpart->add_option("--alpha", ta.alpha, "alpha_1,...,alpha_r in (0,p)")->required();
    tpart->callback([&] {
        action = [&] {
            TmplSpec s = tmpl_spec();
            auto a = small_ints("--alpha", ta.alpha);
            require_len("--alpha", a.size(), s.n.size());
            emit(to_json(partial_tmpl(s, a)));
        };
    });
    auto* tlell = tmpl->add_subcommand("l-ell", "L at positive integers minus the root-of-unity polylog sum");
    add_tmpl_options(tlell, false);
    tlell->add_option("--N", ta.N, "Riemann level")->check(CLI::PositiveNumber);
    tlell->callback([&] {
        action = [&] {
            auto n = small_ints("--n", ta.n);
            PadicInt res = L_ell_residual(n, ta.c, ta.p, ta.M, ta.N, ta.strict ? IndexRange::Strict : IndexRange::Integral);
            emit(merge(to_json(res), {{"vanishes", res.is_zero()}, {"guaranteed_digits", res.precision()}}));
        };
    });
    tmpl->callback([&] {
        if (!action) {
            if (ta.n.empty()) throw UsageError("--n is required");
            action = run_eval;
        }
    });

    // numeric
    auto* num = app.add_subcommand("numeric", "Double-precision multiple zeta values");
    num->require_subcommand(1);
    std::string nm_s, nm_gamma, nm_exps;
    int nm_order = 1;
    double nm_tol = 1e-8;
    auto* mzf = num->add_subcommand("mzf", "Nested Lerch-type multiple zeta series");
    mzf->add_option("--s", nm_s, "s_1,...,s_r (complex as a+bi)")->required();
    mzf->add_option("--gamma", nm_gamma, "gamma_j (complex, Re > 0)");
    mzf->add_option("--xi-order", nm_order, "Order of the twisting roots")->check(CLI::PositiveNumber);
    mzf->add_option("--xi-exps", nm_exps, "xi_j = exp(2 pi i e_j / order)");
    mzf->add_option("--tol", nm_tol, "Absolute tolerance")->check(CLI::PositiveNumber);
    mzf->callback([&] {
        action = [&] {
            NumericPoint pt;
            pt.s = complexes("--s", nm_s);
            if (!nm_gamma.empty()) pt.gammas = complexes("--gamma", nm_gamma);
            if (!nm_exps.empty())
                for (long e : ints("--xi-exps", nm_exps)) pt.xis.push_back(std::polar(1.0, 2 * M_PI * e / nm_order));
            pt.tol = nm_tol;
            auto r = mzf_numeric(pt);
            emit({{"value", to_json(r.value)}, {"error_bound", r.error}, {"terms_per_axis", r.terms}, {"converged", r.converged}});
        };
    });
    auto* thex = num->add_subcommand("thex", "Desingularization identity: both sides and the residual");
    thex->add_option("--s", nm_s, "s_1[,s_2]")->required();
    thex->add_option("--gamma", nm_gamma, "gamma_j");
    thex->add_option("--tol", nm_tol, "Absolute tolerance")->check(CLI::PositiveNumber);
    thex->callback([&] {
        action = [&] {
            auto s = complexes("--s", nm_s);
            std::vector<cplx> g = nm_gamma.empty() ? std::vector<cplx>{} : complexes("--gamma", nm_gamma);
            auto rep = thex_residual(s, g, nm_tol);
            emit({{"combination", to_json(rep.lhs)}, {"e_series", to_json(rep.rhs)}, {"residual", rep.residual},
                  {"error_budget", rep.error}});
        };
    });

    // verify
    std::string suite = "all";
    int verify_failed = 0;
    auto* ver = app.add_subcommand("verify", "Run the identity suite and print a pass/fail table");
    ver->add_option("--suite", suite, "all, acceptance, properties, or comma-separated check ids (properties are 101+)");
    ver->callback([&] {
        action = [&] {
            std::vector<long> pick;
            if (suite != "all" && suite != "acceptance" && suite != "properties") pick = ints("--suite", suite);
            std::vector<acceptance::CheckEntry> entries;
            if (suite != "properties") entries = acceptance::registry();
            if (suite != "acceptance")
                for (const auto& e : acceptance::property_registry()) entries.push_back(e);
            int ran = 0;
            for (const auto& e : entries) {
                if (!pick.empty() && std::find(pick.begin(), pick.end(), e.id) == pick.end()) continue;
                auto r = acceptance::run_check(e);
                std::cout << acceptance::format_line(r) << std::endl;
                ++ran;
                if (!r.pass) ++verify_failed;
            }
            if (verify_failed)
                std::cout << verify_failed << " of " << ran << " checks failed\n";
            else
                std::cout << "all " << ran << " checks passed\n";
        };
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    }
    try {
        if (action) action();
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        std::cerr << json{{"error", kind_name(e.kind())}, {"message", e.what()}}.dump() << "\n";
        return 1;
    }
    return verify_failed ? 1 : 0;
}
