#include "multizeta/desing.hpp"

#include <algorithm>

#include "multizeta/bernoulli.hpp"
#include "multizeta/twisted_bernoulli.hpp"

namespace mz {

Integer DesingCoeffTable::coeff(const std::vector<int>& l, const std::vector<int>& m) const {
    for (const auto& e : entries)
        if (e.l == l && e.m == m) return e.a;
    return 0;
}

DesingCoeffTable desing_coeffs(int r) {
    if (r < 1) throw Error(ErrorKind::InvalidArgument, "desing_coeffs needs r >= 1");
    // variables: u_1..u_r then v_1..v_r
    const int nv = 2 * r;
    SparsePoly<Integer> G(nv);
    G.add(Exponents(nv, 0), Integer(1));
    for (int j = 0; j < r; ++j) {
        SparsePoly<Integer> factor(nv);
        factor.add(Exponents(nv, 0), Integer(1));
        for (int k = j; k < r; ++k) {
            Exponents e(nv, 0);
            e[k] = 1;
            e[r + k] += 1;
            e[r + j] -= 1;  // - u_k v_k v_j^{-1}
            factor.add(e, Integer(-1));
            if (j > 0) {
                Exponents f(nv, 0);
                f[k] = 1;
                f[r + k] += 1;
                f[r + j - 1] -= 1;  // + u_k v_k v_{j-1}^{-1}
                factor.add(f, Integer(1));
            }
        }
        G = G * factor;
    }
    DesingCoeffTable table;
    table.r = r;
    for (const auto& [e, a] : G.terms()) {
        DesingEntry entry;
        entry.l.assign(e.begin(), e.begin() + r);
        entry.m.assign(e.begin() + r, e.end());
        entry.a = a;
        table.entries.push_back(std::move(entry));
    }
    std::sort(table.entries.begin(), table.entries.end(), [](const DesingEntry& x, const DesingEntry& y) {
        return std::tie(x.m, x.l) < std::tie(y.m, y.l);
    });
    return table;
}

Rational desing_value_nonpos(const std::vector<int>& k, const std::vector<Rational>& gammas) {
    if (k.empty() || k.size() != gammas.size())
        throw Error(ErrorKind::InvalidArgument, "desing_value_nonpos: depth mismatch");
    int total = 0;
    for (int x : k) {
        if (x < 0) throw Error(ErrorKind::InvalidArgument, "desing_value_nonpos needs k_j >= 0");
        total += x;
    }
    Rational acc = 0;
    for (const auto& [m, w] : nu_weights(k, gammas)) {
        Rational term = w;
        for (int mj : m) term *= bernoulli(mj + 1);
        acc += term;
    }
    return (total & 1) ? Rational(-acc) : acc;
}

Rational desing_value_r2_closed(int k, int l, const Rational& g1, const Rational& g2) {
    if (k < 0 || l < 0) throw Error(ErrorKind::InvalidArgument, "desing_value_r2_closed needs k,l >= 0");
    Rational acc = 0;
    for (int nu = 0; nu <= l; ++nu)
        acc += Rational(binomial(l, nu)) * bernoulli(k + nu + 1) * bernoulli(l - nu + 1) * rpow(g1, k + nu) *
               rpow(g2, l - nu);
    return ((k + l) & 1) ? Rational(-acc) : acc;
}

TruncSeries<Rational> desing_genfun_oracle(int r, const std::vector<Rational>& gammas, const std::vector<int>& caps) {
    if (r < 1 || static_cast<int>(gammas.size()) != r || static_cast<int>(caps.size()) != r)
        throw Error(ErrorKind::InvalidArgument, "desing_genfun_oracle: depth mismatch");
    int order = 1;
    for (int x : caps) order += x;
    // numerator ((1-y)e^y - 1)/y^2 = -sum_i (i+1) y^i/(i+2)!, denominator ((e^y-1)/y)^2
    std::vector<Rational> num(order), e1(order);
    for (int i = 0; i < order; ++i) {
        num[i] = -Rational(i + 1) / Rational(factorial(i + 2));
        e1[i] = Rational(1) / Rational(factorial(i + 1));
    }
    std::vector<Rational> den(order, Rational(0));
    for (int i = 0; i < order; ++i)
        for (int j = 0; i + j < order; ++j) den[i + j] += e1[i] * e1[j];
    std::vector<Rational> f = series_divide(num, den, order);
    auto prod = TruncSeries<Rational>::constant(caps, Rational(0), Rational(1));
    for (int j = 0; j < r; ++j) prod = series_mul(prod, substitute_tail_sum(f, gammas[j], j, caps, Rational(0)));
    return prod;
}

Rational desing_value_from_genfun(const TruncSeries<Rational>& series, const std::vector<int>& m) {
    Rational v = series.coeff(m);
    int total = 0;
    for (int x : m) {
        v *= Rational(factorial(x));
        total += x;
    }
    return (total & 1) ? Rational(-v) : v;
}

}  // namespace mz
