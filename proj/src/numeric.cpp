#include "multizeta/numeric.hpp"

#include <cmath>
#include <limits>
#include <map>

#include "multizeta/desing.hpp"
#include "multizeta/errors.hpp"

namespace mz {

namespace {

constexpr double kHalfPi = 1.5707963267948966;

// Kahan-compensated complex accumulator
struct KahanSum {
    cplx sum{0, 0}, comp{0, 0};
    void add(cplx x) {
        cplx y = x - comp;
        cplx t = sum + y;
        comp = (t - sum) - y;
        sum = t;
    }
};

cplx cpow_neg(cplx x, cplx s) { return std::exp(-s * std::log(x)); }

void fill_defaults(std::vector<cplx>& v, size_t r) {
    if (v.empty()) v.assign(r, cplx(1, 0));
    if (v.size() != r) throw Error(ErrorKind::InvalidArgument, "numeric: tuple lengths differ");
}

}  // namespace

NumericResult mzf_numeric(const NumericPoint& in) {
    NumericPoint pt = in;
    const size_t r = pt.s.size();
    if (r == 0) throw Error(ErrorKind::InvalidArgument, "numeric: empty s");
    fill_defaults(pt.xis, r);
    fill_defaults(pt.gammas, r);
    if (!(pt.tol > 0)) throw Error(ErrorKind::InvalidArgument, "numeric: tol must be positive");
    double kappa = 1;
    for (const auto& g : pt.gammas) {
        if (!(g.real() > 0)) throw Error(ErrorKind::InvalidArgument, "numeric: gammas need positive real part");
        kappa = std::max(kappa, std::abs(g) / g.real());
    }
    for (const auto& x : pt.xis)
        if (std::abs(std::abs(x) - 1) > 1e-12) throw Error(ErrorKind::InvalidArgument, "numeric: xi must have modulus 1");

    // tau_j = Re(s_j + ... + s_r) - (r - j); the region is tau_j > 0, the margin tau_j >= 1/2
    std::vector<double> tau(r + 1, 0);
    for (size_t j = r; j-- > 0;) tau[j] = tau[j + 1] + pt.s[j].real() - 1;
    for (size_t j = 0; j < r; ++j)
        if (tau[j] < 0.5)
            throw Error(ErrorKind::OutsideRegion, "point is outside the absolute convergence region (or within 1/2 of its boundary)");

    // R_j(q) <= c[j] q^{-tau_j} bounds the absolute tail below a prefix with real part q
    std::vector<double> kfac(r), c(r + 1, 1.0);
    for (size_t j = 0; j < r; ++j) {
        const double sigma = pt.s[j].real();
        kfac[j] = std::pow(kappa, std::max(0.0, -sigma)) * std::exp(std::abs(pt.s[j].imag()) * kHalfPi);
    }
    for (size_t j = r; j-- > 0;) {
        const double e = tau[j] + 1, g = pt.gammas[j].real();
        c[j] = kfac[j] * c[j + 1] * e / (g * (e - 1));
    }

    NumericResult out;
    for (long K = 64;; K *= 2) {
        const double leaves = std::pow(static_cast<double>(K), static_cast<double>(r));
        if (leaves > kNumericBudget) break;
        KahanSum total;
        double err = 0, abs_sum = 0;
        std::vector<cplx> xipow(r);
        auto rec = [&](auto&& self, size_t j, cplx P, cplx weight) -> void {
            const double g = pt.gammas[j].real();
            const double e = tau[j] + 1;
            const double q = P.real();
            err += std::abs(weight) * kfac[j] * c[j + 1] * std::pow(q + K * g, 1 - e) / (g * (e - 1));
            cplx xi = 1;
            for (long m = 1; m <= K; ++m) {
                xi *= pt.xis[j];
                const cplx X = P + static_cast<double>(m) * pt.gammas[j];
                const cplx w = weight * xi * cpow_neg(X, pt.s[j]);
                if (j + 1 == r) {
                    total.add(w);
                    abs_sum += std::abs(w);
                } else {
                    self(self, j + 1, X, w);
                }
            }
        };
        rec(rec, 0, cplx(0, 0), cplx(1, 0));
        out.value = total.sum;
        out.error = err + 8 * std::numeric_limits<double>::epsilon() * abs_sum;
        out.terms = K;
        out.converged = out.error <= pt.tol;
        if (out.converged) break;
    }
    return out;
}

NumericResult desing_numeric_E_series(cplx s1, cplx s2, double tol, cplx g1, cplx g2) {
    if (!(s1.real() > 2) || !(s2.real() > 2))
        throw Error(ErrorKind::OutsideRegion, "E-series needs Re s1 > 2 and Re s2 > 2");
    if (!(g1.real() > 0) || !(g2.real() > 0))
        throw Error(ErrorKind::InvalidArgument, "numeric: gammas need positive real part");
    if (!(tol > 0)) throw Error(ErrorKind::InvalidArgument, "numeric: tol must be positive");
    // Expanding E(y) = sum_n (1 - n y) e^{-n y} in both variables and integrating against the Gamma kernels
    // leaves, with A = n1 g1, B = n2 g2, N1 = A, N2 = A + B:
    //   N1^{-s1} N2^{-s2} [B s1 s2 / N2 + A B s2 (s2+1) / N2^2 - s1 - s2 + 1].
    auto partial = [&](long K) {
        KahanSum total;
        for (long n1 = 1; n1 <= K; ++n1) {
            const cplx A = static_cast<double>(n1) * g1;
            const cplx a1 = cpow_neg(A, s1);
            KahanSum inner;
            for (long n2 = 1; n2 <= K; ++n2) {
                const cplx B = static_cast<double>(n2) * g2;
                const cplx N2 = A + B;
                const cplx bracket = B * s1 * s2 / N2 + A * B * s2 * (s2 + 1.0) / (N2 * N2) - s1 - s2 + 1.0;
                inner.add(cpow_neg(N2, s2) * bracket);
            }
            total.add(a1 * inner.sum);
        }
        return total.sum;
    };
    NumericResult out;
    long K = 128;
    cplx prev = partial(K);
    while (true) {
        if (4.0 * static_cast<double>(K) * static_cast<double>(K) > kNumericBudget) {
            out.value = prev;
            out.terms = K;
            out.converged = false;
            return out;
        }
        const cplx next = partial(2 * K);
        const double diff = std::abs(next - prev);
        K *= 2;
        prev = next;
        if (diff <= tol / 2) {
            out.value = next;
            out.error = diff;
            out.terms = K;
            out.converged = true;
            return out;
        }
        out.error = diff;
    }
}

cplx pochhammer(cplx s, int l) {
    cplx v = 1;
    for (int i = 0; i < l; ++i) v *= s + static_cast<double>(i);
    return v;
}

ThexReport thex_residual(const std::vector<cplx>& s, const std::vector<cplx>& gammas_in, double tol) {
    const int r = static_cast<int>(s.size());
    if (r < 1 || r > 2) throw Error(ErrorKind::InvalidArgument, "thex_residual supports depth 1 and 2");
    std::vector<cplx> gammas = gammas_in;
    fill_defaults(gammas, r);
    const auto table = desing_coeffs(r);

    ThexReport rep;
    const double per = tol / static_cast<double>(2 * table.entries.size());
    std::map<std::vector<int>, NumericResult> cache;
    for (const auto& e : table.entries) {
        cplx coef = e.a.get_d();
        for (int j = 0; j < r; ++j) coef *= pochhammer(s[j], e.l[j]);
        auto it = cache.find(e.m);
        if (it == cache.end()) {
            NumericPoint pt;
            for (int j = 0; j < r; ++j) pt.s.push_back(s[j] + static_cast<double>(e.m[j]));
            pt.gammas = gammas;
            pt.tol = per / std::max(1.0, std::abs(coef));
            it = cache.emplace(e.m, mzf_numeric(pt)).first;
        }
        rep.lhs += coef * it->second.value;
        rep.error += std::abs(coef) * it->second.error;
    }
    if (r == 1) {
        // E(g y) termwise: (n g)^{-s} - s (n g)(n g)^{-s-1}
        NumericPoint pt;
        pt.s = s;
        pt.gammas = gammas;
        pt.tol = tol / (2 * std::max(1.0, std::abs(1.0 - s[0])));
        auto z = mzf_numeric(pt);
        rep.rhs = (1.0 - s[0]) * z.value;
        rep.error += std::abs(1.0 - s[0]) * z.error;
    } else {
        auto E = desing_numeric_E_series(s[0], s[1], tol / 2, gammas[0], gammas[1]);
        rep.rhs = E.value;
        rep.error += E.error;
    }
    rep.residual = std::abs(rep.lhs - rep.rhs);
    return rep;
}

}  // namespace mz
