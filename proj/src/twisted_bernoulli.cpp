#include "multizeta/twisted_bernoulli.hpp"

#include "multizeta/bernoulli.hpp"

namespace mz {

bool TwistSpec::degenerate() const {
    for (long e : xi_exps)
        if (((e % N) + N) % N == 0) return true;
    return false;
}

std::vector<CycNum> twisted_bernoulli_table(int nmax, const CycNum& xi) {
    if (xi.is_one()) throw Error(ErrorKind::UnityTwist, "twisted Bernoulli numbers need xi != 1");
    const auto& F = xi.field_ptr();
    std::vector<CycNum> out;
    if (nmax < 0) return out;
    CycNum b0 = cyclotomic_invert(CycNum(F, Rational(1)) - xi);
    CycNum factor = xi * b0;  // xi/(1-xi)
    out.push_back(b0);
    for (int n = 1; n <= nmax; ++n) {
        CycNum acc(F);
        for (int k = 1; k <= n; ++k) acc += out[n - k] * Rational(binomial(n, k));
        out.push_back(factor * acc);
    }
    return out;
}

CycNum twisted_bernoulli(int n, const CycNum& xi) {
    if (xi.is_one()) throw Error(ErrorKind::UnityTwist, "twisted Bernoulli numbers need xi != 1");
    if (n < -1) throw Error(ErrorKind::InvalidArgument, "twisted Bernoulli index must be >= -1");
    if (n == -1) return CycNum(xi.field_ptr());
    return twisted_bernoulli_table(n, xi)[n];
}

CycNum twisted_multi_bernoulli(const TwistSpec& spec, const std::vector<int>& n) {
    const int r = spec.depth();
    if (r < 1 || static_cast<int>(n.size()) != r || static_cast<int>(spec.gammas.size()) != r)
        throw Error(ErrorKind::InvalidArgument, "depth mismatch in twisted multiple Bernoulli arguments");
    for (int x : n)
        if (x < 0) throw Error(ErrorKind::InvalidArgument, "indices must be non-negative");
    if (spec.degenerate()) throw Error(ErrorKind::UnityTwist, "degenerate twist (some xi_j = 1)");
    auto F = CycField::get(spec.N);
    const CycNum zero(F);
    TruncSeries<CycNum> prod = TruncSeries<CycNum>::constant(n, zero, CycNum(F, Rational(1)));
    int tail = 0;
    for (int j = r - 1; j >= 0; --j) {
        tail += n[j];
        auto table = twisted_bernoulli_table(tail, CycNum::root(F, spec.xi_exps[j]));
        std::vector<CycNum> f;
        f.reserve(table.size());
        for (int m = 0; m <= tail; ++m) f.push_back(table[m] * (Rational(1) / Rational(factorial(m))));
        prod = series_mul(prod, substitute_tail_sum(f, spec.gammas[j], j, n, zero));
    }
    Integer fact = 1;
    for (int x : n) fact *= factorial(x);
    return prod.coeff(n) * Rational(fact);
}

Rational root_sum_twisted(int n, int c) {
    if (c < 2) throw Error(ErrorKind::InvalidArgument, "root_sum_twisted needs c >= 2");
    if (n < 0) throw Error(ErrorKind::InvalidArgument, "root_sum_twisted needs n >= 0");
    auto F = CycField::get(c);
    CycNum acc(F);
    for (int k = 1; k < c; ++k) acc += twisted_bernoulli(n, CycNum::root(F, k));
    return acc.rational_value();
}

TruncSeries<Rational> tilde_H_coeffs(int r, const std::vector<Rational>& gammas, const Rational& c,
                                     const std::vector<int>& caps) {
    if (r < 1 || static_cast<int>(gammas.size()) != r || static_cast<int>(caps.size()) != r)
        throw Error(ErrorKind::InvalidArgument, "depth mismatch in tilde_H_coeffs");
    int total = 0;
    for (int x : caps) total += x;
    // f[i] = (1 - c^{i+1}) B_{i+1} / (i+1)!
    std::vector<Rational> f;
    for (int i = 0; i <= total; ++i)
        f.push_back((1 - rpow(c, i + 1)) * bernoulli(i + 1) / Rational(factorial(i + 1)));
    auto prod = TruncSeries<Rational>::constant(caps, Rational(0), Rational(1));
    for (int j = 0; j < r; ++j) prod = series_mul(prod, substitute_tail_sum(f, gammas[j], j, caps, Rational(0)));
    return prod;
}

std::map<std::vector<int>, Rational> nu_weights(const std::vector<int>& n, const std::vector<Rational>& gammas) {
    const int r = static_cast<int>(n.size());
    std::map<std::vector<int>, Rational> out;
    std::vector<int> m(r, 0);
    Integer nfact = 1;
    for (int x : n) nfact *= factorial(x);
    // column l receives nu_{jl} from rows j <= l
    auto rec = [&](auto&& self, int l, int j, int left, Rational w) -> void {
        if (l == r) {
            Rational g = w * Rational(nfact);
            for (int i = 0; i < r; ++i) g *= rpow(gammas[i], m[i]);
            out[m] += g;
            return;
        }
        if (j == l) {  // last row of this column takes the remainder
            m[j] += left;
            self(self, l + 1, 0, l + 1 < r ? n[l + 1] : 0, w / Rational(factorial(left)));
            m[j] -= left;
            return;
        }
        for (int v = 0; v <= left; ++v) {
            m[j] += v;
            self(self, l, j + 1, left - v, w / Rational(factorial(v)));
            m[j] -= v;
        }
    };
    if (r > 0) rec(rec, 0, 0, n[0], Rational(1));
    for (auto it = out.begin(); it != out.end();)
        it = sgn(it->second) == 0 ? out.erase(it) : std::next(it);
    return out;
}

}  // namespace mz
