#include "multizeta/polylog.hpp"

#include <cmath>

#include "multizeta/errors.hpp"
#include "multizeta/measure.hpp"
#include "multizeta/multiple_l.hpp"

namespace mz {

u64 teichmuller_root(int order, long e, u64 p, int M) {
    if (!is_odd_prime(p)) throw Error(ErrorKind::InvalidArgument, "p must be an odd prime");
    if (order < 1 || (p - 1) % static_cast<u64>(order) != 0)
        throw Error(ErrorKind::UnsupportedC, "root order must divide p-1");
    Zmod R(upow(p, M));
    if (order == 1) return 1 % R.m;
    const u64 zeta = nontrivial_roots_of_unity(order, p, M)[0];
    const long k = ((e % order) + order) % order;
    return R.pow(zeta, static_cast<u64>(k));
}

namespace {

void validate(const TmplSpec& spec) {
    const int r = spec.depth();
    if (r < 1 || static_cast<int>(spec.xi_exps.size()) != r)
        throw Error(ErrorKind::InvalidArgument, "tmpl: n and xi exponents must have the same positive length");
    for (int x : spec.n)
        if (x < 1) throw Error(ErrorKind::InvalidArgument, "tmpl: weights must be positive");
    if (spec.M < 1) throw Error(ErrorKind::InvalidArgument, "tmpl: M must be >= 1");
}

// eta_j = xi_j ... xi_r as residues mod p^M
std::vector<u64> tail_products(const TmplSpec& spec, const Zmod& R) {
    const int r = spec.depth();
    std::vector<u64> eta(r);
    u64 acc = 1 % R.m;
    for (int j = r - 1; j >= 0; --j) {
        acc = R.mul(acc, teichmuller_root(spec.order, spec.xi_exps[j], spec.p, spec.M));
        eta[j] = acc;
    }
    return eta;
}

// F_j[l] = w^l / (1 - w^P) with w = eta_j z, P = p^M; for |w| > 1 rewritten as -u^{P-l}/(1 - u^P), u = 1/w.
std::vector<std::vector<u64>> cell_factors(const TmplSpec& spec, const Zmod& R) {
    const u64 p = spec.p;
    const u64 P = R.m;
    const auto eta = tail_products(spec, R);
    const int r = spec.depth();
    std::vector<std::vector<u64>> F(r, std::vector<u64>(P, 0));
    if (!spec.z) return F;  // g^M(infinity) = 0 termwise
    const Rational& z = *spec.z;
    const long v = is_zero(z) ? 1 : valuation(z, p);
    for (int j = 0; j < r; ++j) {
        if (v >= 0) {
            const u64 w = R.mul(eta[j], R.from_rational(z));
            if (v == 0 && w % p == 1) throw Error(ErrorKind::DomainViolation, "z reduces into the excluded set S");
            const u64 inv = R.inv(R.sub(1 % R.m, R.pow(w, P)));
            u64 x = inv;
            for (u64 l = 0; l < P; ++l) {
                F[j][l] = x;
                x = R.mul(x, w);
            }
        } else {
            const u64 u = R.mul(R.inv(eta[j]), R.from_rational(1 / z));
            const u64 inv = R.inv(R.sub(1 % R.m, R.pow(u, P)));
            // F[l] = -u^{P-l} inv, fill from l = P-1 down
            u64 x = R.mul(u, inv);
            for (u64 l = P; l-- > 0;) {
                F[j][l] = R.sub(0, x);
                x = R.mul(x, u);
            }
        }
    }
    return F;
}

// sum over admissible l of prod F_j[l_j] / prod k_j^{n_j}, k_j = l_1 + ... + l_j; alphas filter k_j mod p.
u64 gM_sum(const TmplSpec& spec, const Zmod& R, const std::vector<int>* alphas) {
    const int r = spec.depth();
    const u64 p = spec.p;
    const u64 P = R.m;
    check_cost(std::pow(static_cast<double>(P), r), "g^M enumeration");
    const auto F = cell_factors(spec, R);
    // k^{-n_j} for k mod P, zero on multiples of p
    std::vector<std::vector<u64>> kinv(r, std::vector<u64>(P, 0));
    for (u64 k = 1; k < P; ++k) {
        if (k % p == 0) continue;
        const u64 ik = R.inv(k);
        for (int j = 0; j < r; ++j) kinv[j][k] = R.pow(ik, static_cast<u64>(spec.n[j]));
    }
    const u64 lo_rest = spec.range == IndexRange::Integral ? 0 : 1;
    u64 total = 0;
    auto rec = [&](auto&& self, int j, u64 k, u64 weight) -> void {
        if (j == r) {
            total = R.add(total, weight);
            return;
        }
        const u64 lo = j == 0 ? 1 : lo_rest;
        for (u64 l = lo; l < P; ++l) {
            if (F[j][l] == 0) continue;
            u64 kj = k + l;
            if (kj >= P) kj -= P;
            if (kj % p == 0) continue;
            if (alphas && kj % p != static_cast<u64>((*alphas)[j])) continue;
            self(self, j + 1, kj, R.mul(weight, R.mul(F[j][l], kinv[j][kj])));
        }
    };
    rec(rec, 0, 0, 1 % R.m);
    return total;
}

}  // namespace

PadicInt tmpl_series(const TmplSpec& spec, long terms) {
    validate(spec);
    const u64 p = spec.p;
    if (!spec.z) throw Error(ErrorKind::DomainViolation, "series needs |z|_p < 1");
    const Rational& z = *spec.z;
    if (is_zero(z)) return PadicInt(p, spec.M, 0);
    const long v = valuation(z, p);
    if (v < 1) throw Error(ErrorKind::DomainViolation, "series needs |z|_p < 1");
    if (terms < 1) throw Error(ErrorKind::InvalidArgument, "series needs at least one term");
    check_cost(static_cast<double>(terms) * spec.depth(), "tmpl_series");
    const int prec = static_cast<int>(std::min<long>(spec.M, (terms + 1) * v));
    Zmod R(upow(p, spec.M));
    const int r = spec.depth();
    std::vector<u64> xi(r);
    for (int j = 0; j < r; ++j) xi[j] = teichmuller_root(spec.order, spec.xi_exps[j], p, spec.M);
    // A_j(k): sum over chains ending with k_j = k; prefix sums carry the chain condition
    std::vector<u64> A(terms + 1, 0);
    for (long k = 1; k <= terms; ++k)
        if (k % static_cast<long>(p) != 0)
            A[k] = R.mul(R.pow(xi[0], k), R.pow(R.inv(static_cast<u64>(k) % R.m), spec.n[0]));
    const bool strict = spec.range == IndexRange::Strict;
    for (int j = 1; j < r; ++j) {
        std::vector<u64> B(terms + 1, 0);
        u64 prefix = 0;
        for (long k = 1; k <= terms; ++k) {
            if (!strict) prefix = R.add(prefix, A[k]);
            if (k % static_cast<long>(p) != 0)
                B[k] = R.mul(prefix,
                             R.mul(R.pow(xi[j], k), R.pow(R.inv(static_cast<u64>(k) % R.m), spec.n[j])));
            if (strict) prefix = R.add(prefix, A[k]);
        }
        A = std::move(B);
    }
    const u64 zr = R.from_rational(z);
    u64 total = 0, zk = 1 % R.m;
    for (long k = 1; k <= terms; ++k) {
        zk = R.mul(zk, zr);
        total = R.add(total, R.mul(A[k], zk));
    }
    return PadicInt(p, prec, total % upow(p, prec));
}

PadicInt tmpl_gM_exact(const TmplSpec& spec) {
    validate(spec);
    Zmod R(upow(spec.p, spec.M));
    return PadicInt(spec.p, spec.M, gM_sum(spec, R, nullptr));
}

PadicInt rigid_tmpl_gM(const TmplSpec& spec) { return tmpl_gM_exact(spec).with_precision(spec.M - 1); }

PadicInt partial_tmpl(const TmplSpec& spec, const std::vector<int>& alphas) {
    validate(spec);
    if (static_cast<int>(alphas.size()) != spec.depth())
        throw Error(ErrorKind::InvalidArgument, "partial_tmpl: one alpha per depth");
    for (int a : alphas)
        if (a <= 0 || static_cast<u64>(a) >= spec.p)
            throw Error(ErrorKind::BadAlpha, "alpha_j must lie in (0, p)");
    Zmod R(upow(spec.p, spec.M));
    return PadicInt(spec.p, spec.M, gM_sum(spec, R, &alphas));
}

PadicInt L_ell_residual(const std::vector<int>& n, int c, u64 p, int M, int N, IndexRange range) {
    const int r = static_cast<int>(n.size());
    if (r < 1) throw Error(ErrorKind::InvalidArgument, "L_ell_residual: empty index");
    for (int x : n)
        if (x < 1) throw Error(ErrorKind::InvalidArgument, "L_ell_residual: n_j must be positive");
    if (c < 2 || (p - 1) % static_cast<u64>(c) != 0) throw Error(ErrorKind::UnsupportedC, "L_ell_residual needs c | p-1");
    check_cost(std::pow(static_cast<double>(c), r) * std::pow(static_cast<double>(p), static_cast<double>(M) * r),
               "L_ell_residual");

    LSpec ls;
    ls.p = p;
    ls.c = c;
    for (int x : n) {
        ls.s.push_back(x);
        ls.k.push_back(-x);
        ls.gammas.push_back(Rational(1));
    }
    const PadicInt lhs = L_value_riemann(ls, N, M);

    TmplSpec ts;
    ts.p = p;
    ts.n = n;
    ts.order = c;
    ts.z = Rational(1);
    ts.M = M;
    ts.range = range;
    ts.xi_exps.assign(r, 0);
    Zmod R(upow(p, M));
    u64 rhs = 0;
    while (true) {
        // xi_j ... xi_r != 1 for every j
        bool ok = true;
        long tail = 0;
        for (int j = r - 1; j >= 0; --j) {
            tail += ts.xi_exps[j];
            if (tail % c == 0) ok = false;
        }
        if (ok) rhs = R.add(rhs, gM_sum(ts, R, nullptr));
        int t = 0;
        while (t < r && ++ts.xi_exps[t] == c) ts.xi_exps[t++] = 0;
        if (t == r) break;
    }
    const int prec = std::min(lhs.precision(), M - 1);
    return (lhs - PadicInt(p, M, rhs)).with_precision(prec);
}

}  // namespace mz
