#include "checks.hpp"
#include "tally.hpp"

#include <chrono>
#include <cstdio>
#include <random>
#include <sstream>

#include "../oracles.hpp"
#include "multizeta/bernoulli.hpp"
#include "multizeta/desing.hpp"
#include "multizeta/multiple_l.hpp"
#include "multizeta/numeric.hpp"
#include "multizeta/polylog.hpp"
#include "multizeta/twisted_bernoulli.hpp"

namespace mz::acceptance {

namespace {

std::string tuple_str(const std::vector<int>& v) {
    std::string s = "(";
    for (size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
    return s + ")";
}

Rational random_rational(std::mt19937& rng, int lo, int hi, int maxden) {
    std::uniform_int_distribution<int> num(lo, hi), den(1, maxden);
    int a = 0;
    while (a == 0) a = num(rng);
    Rational q(a, den(rng));
    q.canonicalize();
    return q;
}

// 1. G expansions for r = 1, 2, 3 against the printed polynomials, compared on a grid that determines
// polynomials of degree <= 3 in each u_j.
CheckResult check_desing_coeffs() {
    Tally t;
    for (int r = 1; r <= 3; ++r) {
        const auto table = desing_coeffs(r);
        const auto printed = oracle::printed_G(r);
        std::map<std::vector<int>, std::vector<const DesingEntry*>> groups;
        for (const auto& e : table.entries) groups[e.m].push_back(&e);
        t.expect(groups.size() == printed.size(),
                 "r=" + std::to_string(r) + ": " + std::to_string(groups.size()) + " v-monomials, printed " +
                     std::to_string(printed.size()));
        for (const auto& [m, poly] : printed) {
            auto it = groups.find(m);
            t.expect(it != groups.end(), "missing v-monomial " + tuple_str(m));
            if (it == groups.end()) continue;
            for (long u1 = 0; u1 <= 4; ++u1)
                for (long u2 = 0; u2 <= (r >= 2 ? 4 : 0); ++u2)
                    for (long u3 = 0; u3 <= (r >= 3 ? 4 : 0); ++u3) {
                        const long u[3] = {u1, u2, u3};
                        Integer lib = 0;
                        for (const auto* e : it->second) {
                            Integer term = e->a;
                            for (int j = 0; j < r; ++j)
                                for (int k = 0; k < e->l[j]; ++k) term *= u[j];
                            lib += term;
                        }
                        t.expect(lib == poly(u1, u2, u3), "r=" + std::to_string(r) + " m=" + tuple_str(m));
                    }
        }
        for (const auto& e : table.entries) {
            int s = 0;
            for (int x : e.m) s += x;
            t.expect(s == 0, "weight of " + tuple_str(e.m));
        }
    }
    return t.finish();
}

// 2. zeta_2^des(0,-2;1,1) = 1/18 and zeta_1^des(-k;1) = (-1)^k B_{k+1}.
CheckResult check_desing_special() {
    Tally t;
    t.expect(desing_value_nonpos({0, 2}, {Rational(1), Rational(1)}) == Rational(1, 18), "(0,-2) != 1/18");
    for (int k = 0; k <= 20; ++k) {
        Rational expect = oracle::bernoulli(k + 1);
        if (k % 2) expect = -expect;
        t.expect(desing_value_nonpos({k}, {Rational(1)}) == expect, "k=" + std::to_string(k));
    }
    return t.finish();
}

// 3. nu-matrix sum vs the depth-2 single sum and vs the generating-function oracle.
CheckResult check_desing_oracles() {
    Tally t;
    std::mt19937 rng(20240611);
    for (int pair = 0; pair < 5; ++pair) {
        const Rational g1 = random_rational(rng, -9, 9, 7), g2 = random_rational(rng, -9, 9, 7);
        for (int k = 0; k <= 6; ++k)
            for (int l = 0; l <= 6; ++l) {
                const Rational v = desing_value_nonpos({k, l}, {g1, g2});
                t.expect(v == desing_value_r2_closed(k, l, g1, g2), "r2 closed at " + tuple_str({k, l}));
                t.expect(v == oracle::desing_r2(k, l, g1, g2), "r2 oracle at " + tuple_str({k, l}));
            }
    }
    for (int r = 1; r <= 3; ++r) {
        for (int trial = 0; trial < 2; ++trial) {
            std::vector<Rational> gam;
            for (int j = 0; j < r; ++j) gam.push_back(trial == 0 ? Rational(1) : random_rational(rng, -5, 5, 4));
            const std::vector<int> caps(r, 3);
            const auto series = desing_genfun_oracle(r, gam, caps);
            std::vector<int> m(r, 0);
            while (true) {
                t.expect(desing_value_from_genfun(series, m) == desing_value_nonpos(m, gam), "genfun at " + tuple_str(m));
                int j = 0;
                while (j < r && ++m[j] > 3) m[j++] = 0;
                if (j == r) break;
            }
        }
    }
    return t.finish();
}

// 4. Root sums, the depth-2 convolution, and the mu_p-averaged sum in Q(zeta_6).
CheckResult check_twisted_identities() {
    Tally t;
    for (int c : {2, 3, 4, 6})
        for (int n = 0; n <= 10; ++n) {
            const Rational rhs = (1 - oracle::rpow(Rational(c), n + 1)) * oracle::bernoulli(n + 1) / (n + 1);
            t.expect(root_sum_twisted(n, c) == rhs, "root sum c=" + std::to_string(c) + " n=" + std::to_string(n));
        }
    auto F12 = CycField::get(12);
    TwistSpec spec;
    spec.N = 12;
    spec.xi_exps = {3, 4};
    spec.gammas = {Rational(2, 3), Rational(-5, 2)};
    const CycNum x1 = CycNum::root(F12, 3), x2 = CycNum::root(F12, 4);
    for (int k = 0; k <= 8; ++k)
        for (int l = 0; k + l <= 8; ++l) {
            CycNum conv(F12);
            for (int j = 0; j <= l; ++j)
                conv += oracle::twisted_bernoulli(k + j, x1) * oracle::twisted_bernoulli(l - j, x2) *
                        (Rational(oracle::binom(l, j)) * oracle::rpow(spec.gammas[0], k + j) *
                         oracle::rpow(spec.gammas[1], l - j));
            t.expect(twisted_multi_bernoulli(spec, {k, l}) == conv, "convolution at " + tuple_str({k, l}));
        }
    auto F6 = CycField::get(6);
    for (int n = 0; n <= 6; ++n) {
        CycNum sum(F6);
        for (int a = 0; a < 3; ++a) sum += twisted_bernoulli(n, CycNum::root(F6, 2 * a + 3));
        const Rational rhs = oracle::rpow(Rational(3), n + 1) * (1 - oracle::rpow(Rational(2), n + 1)) *
                             oracle::bernoulli(n + 1) / (n + 1);
        t.expect(sum == CycNum(F6, rhs), "mu_3 average n=" + std::to_string(n));
    }
    return t.finish();
}

// 5. Riemann sums at level 3 vs the exact closed form mod 5^3.
CheckResult check_route_agreement() {
    Tally t;
    const u64 p = 5;
    const int c = 2, N = 3, M = 3;
    const std::vector<std::vector<Rational>> gamma_sets = {{Rational(1)}, {Rational(1), Rational(1)}, {Rational(1), Rational(5)}};
    for (const auto& gam : gamma_sets) {
        const int r = static_cast<int>(gam.size());
        std::vector<int> n(r, 0);
        while (true) {
            LSpec spec;
            spec.p = p;
            spec.c = c;
            spec.gammas = gam;
            for (int x : n) {
                spec.s.push_back(-x);
                spec.k.push_back(x);
            }
            const PadicInt riemann = L_value_riemann(spec, N, M);
            const PadicInt closed = rational_to_padic(L_value_nonpos_closed(n, gam, c, p), p, M);
            t.expect(riemann.precision() == 3 && riemann.congruent(closed), "n=" + tuple_str(n) + " " + riemann.to_string());
            int j = 0;
            while (j < r && ++n[j] > 3) n[j++] = 0;
            if (j == r) break;
        }
    }
    return t.finish();
}

// 6. Depth one: (1-p^n)(1-c^{n+1})B_{n+1}/(n+1).
CheckResult check_kubota_leopoldt() {
    Tally t;
    for (long p : {3, 5, 7})
        for (int c : {2, 3}) {
            if (c % p == 0) continue;
            for (int n = 0; n <= 8; ++n)
                t.expect(L_value_nonpos_closed({n}, {Rational(1)}, c, p) == oracle::kubota_leopoldt(n, c, p),
                         "p=" + std::to_string(p) + " c=" + std::to_string(c) + " n=" + std::to_string(n));
        }
    t.expect(L_value_nonpos_closed({1}, {Rational(1)}, 2, 5) == 1, "p=5 c=2 n=1 is not 1");
    return t.finish();
}

// 7. gamma = (1, eta) closed forms, the odd-weight collapse, and the depth-2 (1,1) value.
CheckResult check_closed_anchors() {
    Tally t;
    const long p = 5;
    for (int c : {2, 3})
        for (long eta_mult : {1, 2}) {
            const Rational eta(p * eta_mult);
            for (int k1 = 0; k1 <= 4; ++k1)
                for (int k2 = 0; k2 <= 4; ++k2) {
                    const std::string where = "c=" + std::to_string(c) + " eta=" + eta.get_str() + " k=" + tuple_str({k1, k2});
                    const Rational closed = L_value_nonpos_closed({k1, k2}, {Rational(1), eta}, c, p);
                    const Rational genfun = L_value_genfun({k1, k2}, {Rational(1), eta}, Rational(c), p);
                    const Rational ref = oracle::L2_val(k1, k2, eta, c, p);
                    t.expect(closed == ref, "closed L2 " + where);
                    t.expect(genfun == ref, "genfun L2 " + where);
                    if (k1 >= 1 && (k1 + k2) % 2 == 1) {
                        const Rational odd = oracle::odd_val(k1, k2, c, p);
                        t.expect(closed == odd, "closed odd " + where);
                        t.expect(genfun == odd, "genfun odd " + where);
                    }
                }
        }
    for (int c : {2, 3})
        for (const Rational& g2 : {Rational(5), Rational(10), Rational(25, 3), Rational(-15, 2)}) {
            const Rational v = L_value_nonpos_closed({1, 1}, {Rational(1), g2}, c, p);
            t.expect(v == oracle::pair11_value(c, p, g2) && v != 0, "(1,1) value at gamma2=" + g2.get_str());
        }
    return t.finish();
}

// 8. Multiple Kummer congruences on seeded random instances.
CheckResult check_kummer() {
    Tally t;
    std::mt19937 rng(7211);
    auto pick = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
    struct Shape {
        int r;
        long p;
        std::vector<Rational> gammas;
        int nmax;
    };
    const std::vector<Shape> shapes = {
        {1, 5, {Rational(1)}, 6},
        {2, 5, {Rational(1), Rational(5)}, 4},
        {3, 3, {Rational(1), Rational(3), Rational(3)}, 3},
    };
    for (const auto& sh : shapes)
        for (int inst = 0; inst < 20; ++inst) {
            const int c = sh.p == 3 ? pick(0, 1) * 2 + 2 : pick(2, 4);  // p=3: c in {2,4}
            std::vector<int> n(sh.r), m(sh.r), l(sh.r);
            int minl = 99;
            for (int j = 0; j < sh.r; ++j) {
                n[j] = pick(0, sh.nmax);
                l[j] = pick(1, 2);
                long period = sh.p - 1;
                for (int i = 1; i < l[j]; ++i) period *= sh.p;
                m[j] = n[j] + static_cast<int>(period) * pick(0, sh.r == 1 ? 2 : 1);
                minl = std::min(minl, l[j]);
            }
            const long v = kummer_check(m, n, l, sh.gammas, c, sh.p);
            t.expect(v >= minl, "r=" + std::to_string(sh.r) + " m=" + tuple_str(m) + " n=" + tuple_str(n) +
                                    " valuation " + std::to_string(v));
        }
    return t.finish();
}

// 9. Functional relations at depth 2 and 3, and parity vanishing of calB.
CheckResult check_functional_relations() {
    Tally t;
    std::mt19937 rng(90210);
    auto pick = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
    const long p = 5;
    for (int r : {2, 3}) {
        int done = 0;
        while (done < (r == 2 ? 10 : 5)) {
            std::vector<int> n(r);
            int sum = 0;
            for (auto& x : n) sum += (x = pick(0, 4));
            if ((sum - r) % 2 == 0) continue;
            std::vector<long> k;
            for (int x : n) k.push_back(x + (p - 1) * pick(-1, 1));
            static const int dens[] = {1, 3, 7};
            Rational g1(pick(1, 4), dens[pick(0, 2)]);
            g1.canonicalize();
            std::vector<Rational> gam{g1};
            for (int j = 1; j < r; ++j) {
                Rational g(p * pick(-3, 3), pick(1, 2));
                g.canonicalize();
                gam.push_back(g);
            }
            const int c = pick(2, 4);
            t.expect(functional_relation_residual(n, k, gam, c, p) == 0, "r=" + std::to_string(r) + " n=" + tuple_str(n));
            ++done;
        }
    }
    for (int r = 1; r <= 3; ++r) {
        std::vector<int> n(r, 1);
        const std::vector<Rational> gam(r, Rational(3, 2));
        while (true) {
            int sum = 0;
            for (int x : n) sum += x;
            if ((sum - r) % 2 != 0) t.expect(calB(n, gam, Rational(3)) == 0, "parity at " + tuple_str(n));
            int j = 0;
            while (j < r && ++n[j] > 5) n[j++] = 1;
            if (j == r) break;
        }
    }
    return t.finish();
}

// 10. g^M Cauchy congruence and the positive-integer identity with Riemann sums.
CheckResult check_polylog() {
    Tally t;
    const u64 p = 5;
    for (int r = 1; r <= 2; ++r) {
        const std::vector<std::vector<int>> weights =
            r == 1 ? std::vector<std::vector<int>>{{1}, {2}, {3}} : std::vector<std::vector<int>>{{1, 1}, {1, 2}, {2, 1}};
        for (const auto& n : weights)
            for (int zi = 0; zi < 2; ++zi)
                for (int mask = 0; mask < (1 << r); ++mask) {
                    TmplSpec s;
                    s.p = p;
                    s.n = n;
                    s.order = 2;
                    for (int j = 0; j < r; ++j) s.xi_exps.push_back((mask >> j) & 1);
                    if (zi == 0) {
                        s.z = Rational(1);
                        long tail = 0;
                        bool ok = true;
                        for (int j = r - 1; j >= 0; --j)
                            if ((tail += s.xi_exps[j]) % 2 == 0) ok = false;
                        if (!ok) continue;
                    }
                    for (int M = 1; M <= 3; ++M) {
                        s.M = M;
                        const PadicInt a = tmpl_gM_exact(s);
                        s.M = M + 1;
                        const PadicInt b = tmpl_gM_exact(s);
                        t.expect(a.congruent(b) && a.precision() == M,
                                 "g^M chain n=" + tuple_str(n) + " M=" + std::to_string(M) + (zi ? " z=inf" : " z=1"));
                        if (zi == 1) t.expect(a.is_zero(), "g^M(inf) != 0");
                    }
                }
    }
    for (const auto& n : std::vector<std::vector<int>>{{2}, {3}, {1, 2}, {2, 1}, {1, 1}}) {
        const PadicInt res = L_ell_residual(n, 2, p, 3, 3);
        t.expect(res.is_zero() && res.precision() == 2, "L-ell residual n=" + tuple_str(n) + " " + res.to_string());
    }
    return t.finish();
}

// 11. The desingularization identity numerically.
CheckResult check_numeric_thex() {
    Tally t;
    for (const auto& s : std::vector<std::vector<cplx>>{{4.0, 4.0}, {5.0, 5.0}, {4.0, 6.0}}) {
        const ThexReport rep = thex_residual(s, {1.0, 1.0}, 1e-8);
        char buf[96];
        std::snprintf(buf, sizeof buf, "s=(%g,%g) residual %.2e", s[0].real(), s[1].real(), rep.residual);
        t.expect(rep.residual < 1e-6, buf);
    }
    return t.finish();
}

}  // namespace

const std::vector<CheckEntry>& registry() {
    static const std::vector<CheckEntry> entries = {
        {1, "desingularization coefficients (r=1,2,3)", 1.0, check_desing_coeffs},
        {2, "exact desingularized special values", 10.0, check_desing_special},
        {3, "desingularized value oracles agree", 30.0, check_desing_oracles},
        {4, "twisted Bernoulli identities", 30.0, check_twisted_identities},
        {5, "p-adic Riemann vs closed form (p=5,N=3)", 120.0, check_route_agreement},
        {6, "Kubota-Leopoldt anchor", 30.0, check_kubota_leopoldt},
        {7, "closed-form anchors (depth 2)", 60.0, check_closed_anchors},
        {8, "multiple Kummer congruences", 120.0, check_kummer},
        {9, "functional relations and parity", 120.0, check_functional_relations},
        {10, "polylog congruence and L-ell identity", 180.0, check_polylog},
        {11, "numerical desingularization identity", 60.0, check_numeric_thex},
    };
    return entries;
}

CheckResult run_check(const CheckEntry& e) {
    const auto t0 = std::chrono::steady_clock::now();
    CheckResult r;
    try {
        r = e.fn();
    } catch (const std::exception& ex) {
        r.pass = false;
        r.detail = std::string("exception: ") + ex.what();
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    r.id = e.id;
    r.name = e.name;
    r.budget_seconds = e.budget_seconds;
    if (r.pass && r.seconds > e.budget_seconds) {
        r.pass = false;
        r.detail += "; over the time budget";
    }
    return r;
}

std::string format_line(const CheckResult& r) {
    char buf[512];
    char id[16];
    if (r.id > 100)
        std::snprintf(id, sizeof id, "I%02d", r.id - 100);
    else
        std::snprintf(id, sizeof id, "%3d", r.id);
    std::snprintf(buf, sizeof buf, "%s  %s  %-44s (%.2fs / %.0fs)  %s", r.pass ? "PASS" : "FAIL", id, r.name.c_str(),
                  r.seconds, r.budget_seconds, r.detail.c_str());
    return buf;
}

}  // namespace mz::acceptance
