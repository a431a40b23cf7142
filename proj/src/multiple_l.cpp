#include "multizeta/multiple_l.hpp"

#include <map>

#include "multizeta/bernoulli.hpp"
#include "multizeta/cyclotomic.hpp"
#include "multizeta/measure.hpp"
#include "multizeta/twisted_bernoulli.hpp"

namespace mz {

namespace {

void require_p_integral(const std::vector<Rational>& gammas, u64 p) {
    for (const auto& g : gammas)
        if (valuation(g, p) < 0)
            throw Error(ErrorKind::PreconditionViolation, "gamma " + g.get_str() + " is not p-integral");
}

void require_c(int c, u64 p) {
    if (!is_odd_prime(p)) throw Error(ErrorKind::InvalidArgument, "p must be an odd prime");
    if (c < 2 || c % static_cast<long>(p) == 0)
        throw Error(ErrorKind::InvalidArgument, "c must be an integer >= 2 prime to p");
}

long mod_nonneg(long a, long m) { return ((a % m) + m) % m; }

}  // namespace

PadicInt L_value_riemann(const LSpec& spec, int N, int M) {
    const int r = spec.depth();
    if (r < 1 || static_cast<int>(spec.k.size()) != r || static_cast<int>(spec.gammas.size()) != r)
        throw Error(ErrorKind::InvalidArgument, "L_value_riemann: depth mismatch");
    require_c(spec.c, spec.p);
    require_p_integral(spec.gammas, spec.p);
    const u64 p = spec.p;
    const int prec = std::min(N, M);
    if (valuation(spec.gammas[0], p) > 0) return PadicInt(p, prec, 0);  // empty region

    Zmod R(upow(p, M));
    Region region;
    region.r = r;
    for (const auto& g : spec.gammas) region.gammas.push_back(R.from_rational(g));
    // omega only depends on the class mod p
    std::vector<u64> omega(p, 0);
    for (u64 x = 1; x < p; ++x) omega[x] = teichmuller_residue(x, p, M);
    const long order = static_cast<long>(p - 1);
    auto integrand = [&](const std::vector<u64>& a) -> u64 {
        u64 v = 1 % R.m, X = 0;
        for (int j = 0; j < r; ++j) {
            X = R.add(X, R.mul(a[j] % R.m, region.gammas[j]));
            const long s = spec.s[j];
            u64 xs = s <= 0 ? R.pow(X, static_cast<u64>(-s)) : R.pow(R.inv(X), static_cast<u64>(s));
            u64 w = R.pow(omega[X % p], static_cast<u64>(mod_nonneg(spec.k[j] + s, order)));
            v = R.mul(v, R.mul(xs, w));
        }
        return v;
    };
    std::vector<MeasureSpec> specs{MeasureSpec::c_average(p, M, spec.c)};
    return integrate_riemann(integrand, region, specs, N, M);
}

Rational L_value_nonpos_closed(const std::vector<int>& n, const std::vector<Rational>& gammas, int c, u64 p) {
    const int r = static_cast<int>(n.size());
    if (r < 1 || static_cast<int>(gammas.size()) != r)
        throw Error(ErrorKind::InvalidArgument, "L_value_nonpos_closed: depth mismatch");
    for (int x : n)
        if (x < 0) throw Error(ErrorKind::InvalidArgument, "closed form needs n_j >= 0");
    require_c(c, p);
    require_p_integral(gammas, p);
    const long P = static_cast<long>(p);

    // gamma_j mod p, to raise p-th roots of unity to the gamma_j-th power
    Zmod Rp(p);
    std::vector<long> gm;
    for (const auto& g : gammas) gm.push_back(static_cast<long>(Rp.from_rational(g)));

    // Collect the rho-twists: subset {i_1 < ... < i_d}, rho_{i} = zeta_p^{b_i};
    // coordinate j is twisted by (prod_{i in I, i >= j} rho_i)^{gamma_j}, weight (-1/p)^d.
    std::map<std::vector<int>, Rational> twists;
    for (unsigned mask = 0; mask < (1u << r); ++mask) {
        std::vector<int> idx;
        for (int i = 0; i < r; ++i)
            if (mask & (1u << i)) idx.push_back(i);
        const int d = static_cast<int>(idx.size());
        const Rational w = rpow(Rational(-1, static_cast<unsigned long>(p)), d);
        std::vector<long> b(d, 0);
        while (true) {
            std::vector<int> e(r, 0);
            for (int j = 0; j < r; ++j) {
                long acc = 0;
                for (int t = 0; t < d; ++t)
                    if (idx[t] >= j) acc += b[t];
                e[j] = static_cast<int>(mod_nonneg(acc * gm[j], P));
            }
            twists[e] += w;
            int t = 0;
            while (t < d && ++b[t] == P) b[t++] = 0;
            if (t == d) break;
        }
    }

    int total = 0;
    for (int x : n) total += x;
    auto F = CycField::get(static_cast<int>(P * c));
    // V[e][m] = sum_{xi^c=1, xi!=1} B_m(zeta_p^e xi)
    std::map<int, std::vector<CycNum>> V;
    auto column = [&](int e) -> const std::vector<CycNum>& {
        auto it = V.find(e);
        if (it != V.end()) return it->second;
        std::vector<CycNum> acc(total + 1, CycNum(F));
        for (int a = 1; a < c; ++a) {
            auto table = twisted_bernoulli_table(total, CycNum::root(F, static_cast<long>(c) * e + P * a));
            for (int m = 0; m <= total; ++m) acc[m] += table[m];
        }
        return V.emplace(e, std::move(acc)).first->second;
    };

    const auto W = nu_weights(n, gammas);
    CycNum result(F);
    for (const auto& [e, w] : twists) {
        if (sgn(w) == 0) continue;
        // contract the weight tensor one coordinate at a time, last coordinate first
        std::map<std::vector<int>, CycNum> level;
        {
            const auto& col = column(e[r - 1]);
            for (const auto& [m, wm] : W) {
                std::vector<int> prefix(m.begin(), m.end() - 1);
                auto it = level.find(prefix);
                CycNum term = col[m[r - 1]] * wm;
                if (it == level.end())
                    level.emplace(std::move(prefix), std::move(term));
                else
                    it->second += term;
            }
        }
        for (int j = r - 2; j >= 0; --j) {
            const auto& col = column(e[j]);
            std::map<std::vector<int>, CycNum> next;
            for (const auto& [m, val] : level) {
                std::vector<int> prefix(m.begin(), m.end() - 1);
                CycNum term = val * col[m[j]];
                auto it = next.find(prefix);
                if (it == next.end())
                    next.emplace(std::move(prefix), std::move(term));
                else
                    it->second += term;
            }
            level = std::move(next);
        }
        if (!level.empty()) result += level.begin()->second * w;
    }
    Rational value = result.rational_value();
    if (valuation(value, p) < 0)
        throw Error(ErrorKind::NonIntegralValue, "closed-form value " + value.get_str() + " is not p-integral");
    return value;
}

TruncSeries<Rational> L_genfun_special(int r, const Rational& gamma1, const std::vector<Rational>& gammas_rest,
                                       const Rational& c, u64 p, const std::vector<int>& caps) {
    if (r < 1 || static_cast<int>(gammas_rest.size()) != r - 1 || static_cast<int>(caps.size()) != r)
        throw Error(ErrorKind::InvalidArgument, "L_genfun_special: depth mismatch");
    if (valuation(gamma1, p) != 0) throw Error(ErrorKind::PreconditionViolation, "gamma_1 must be a p-adic unit");
    for (const auto& g : gammas_rest)
        if (valuation(g, p) < 1) throw Error(ErrorKind::PreconditionViolation, "gamma_j (j>=2) must lie in pZ_p");
    if (valuation(c, p) != 0) throw Error(ErrorKind::PreconditionViolation, "c must be a p-adic unit");
    int total = 0;
    for (int x : caps) total += x;
    const Rational P(static_cast<unsigned long>(p));
    std::vector<Rational> first, rest;
    for (int m = 0; m <= total; ++m) {
        Rational base = (1 - rpow(c, m + 1)) * bernoulli(m + 1) / (m + 1) / Rational(factorial(m));
        rest.push_back(base);
        first.push_back((1 - rpow(P, m)) * base);
    }
    auto prod = substitute_tail_sum(first, gamma1, 0, caps, Rational(0));
    for (int j = 1; j < r; ++j) prod = series_mul(prod, substitute_tail_sum(rest, gammas_rest[j - 1], j, caps, Rational(0)));
    return prod;
}

Rational L_value_genfun(const std::vector<int>& n, const std::vector<Rational>& gammas, const Rational& c, u64 p) {
    const int r = static_cast<int>(n.size());
    if (r < 1 || static_cast<int>(gammas.size()) != r) throw Error(ErrorKind::InvalidArgument, "depth mismatch");
    std::vector<Rational> rest(gammas.begin() + 1, gammas.end());
    auto series = L_genfun_special(r, gammas[0], rest, c, p, n);
    Rational v = series.coeff(n);
    for (int x : n) v *= Rational(factorial(x));
    return v;
}

Rational calB(int n, const Rational& gamma, const Rational& c) {
    if (n < 1) throw Error(ErrorKind::InvalidArgument, "calB needs n >= 1");
    return (1 - rpow(c, n + 1)) * bernoulli(n + 1) * rpow(gamma, n) / (n + 1);
}

Rational calB(const std::vector<int>& n, const std::vector<Rational>& gammas, const Rational& c) {
    const int r = static_cast<int>(n.size());
    if (r < 1 || static_cast<int>(gammas.size()) != r) throw Error(ErrorKind::InvalidArgument, "depth mismatch");
    for (int x : n)
        if (x < 1) throw Error(ErrorKind::InvalidArgument, "multi-index calB needs n_j >= 1");
    int total = 0;
    for (int x : n) total += x;
    auto prod = TruncSeries<Rational>::constant(n, Rational(0), Rational(1));
    for (int j = 0; j < r; ++j) {
        std::vector<Rational> f(total + 1, Rational(0));  // H_1(t) = sum_{m>=1} calB(m) t^m/m!
        for (int m = 1; m <= total; ++m) f[m] = calB(m, gammas[j], c) / Rational(factorial(m));
        prod = series_mul(prod, substitute_tail_sum(f, Rational(1), j, n, Rational(0)));
    }
    Rational v = prod.coeff(n);
    for (int x : n) v *= Rational(factorial(x));
    return v;
}

long kummer_check(const std::vector<int>& m, const std::vector<int>& n, const std::vector<int>& l,
                  const std::vector<Rational>& gammas, int c, u64 p) {
    const size_t r = n.size();
    if (m.size() != r || l.size() != r || gammas.size() != r)
        throw Error(ErrorKind::InvalidArgument, "kummer_check: depth mismatch");
    for (size_t j = 0; j < r; ++j) {
        if (l[j] < 1) throw Error(ErrorKind::PreconditionViolation, "l_j must be >= 1");
        Integer mod = Integer(static_cast<unsigned long>(p - 1)) * ipow(Integer(static_cast<unsigned long>(p)), l[j] - 1);
        Integer diff = Integer(m[j]) - Integer(n[j]);
        if (diff % mod != 0)
            throw Error(ErrorKind::PreconditionViolation, "m_j is not congruent to n_j mod (p-1)p^{l_j-1}");
    }
    Rational a = L_value_nonpos_closed(m, gammas, c, p);
    Rational b = L_value_nonpos_closed(n, gammas, c, p);
    return valuation(Rational(a - b), p);
}

Rational functional_relation_residual(const std::vector<int>& n, const std::vector<long>& k,
                                      const std::vector<Rational>& gammas, int c, u64 p) {
    const int r = static_cast<int>(n.size());
    if (r < 2 || static_cast<int>(k.size()) != r || static_cast<int>(gammas.size()) != r)
        throw Error(ErrorKind::InvalidArgument, "functional_relation_residual needs r >= 2 and matching tuples");
    long ksum = 0;
    for (long x : k) ksum += x;
    if (mod_nonneg(ksum - r, 2) == 0)
        throw Error(ErrorKind::ParityViolation, "k_1+...+k_r must not be congruent to r mod 2");
    for (int j = 0; j < r; ++j)
        if (mod_nonneg(k[j] - n[j], static_cast<long>(p - 1)) != 0)
            throw Error(ErrorKind::PreconditionViolation, "k_j must be congruent to n_j mod p-1");
    require_p_integral(gammas, p);
    for (int j = 1; j < r; ++j)
        if (valuation(gammas[j], p) < 1) throw Error(ErrorKind::PreconditionViolation, "gamma_j (j>=2) must lie in pZ_p");

    Rational residual = L_value_nonpos_closed(n, gammas, c, p);
    const Rational half = make_rational(1 - c, 2);
    const unsigned full = (1u << r) - 1;
    for (unsigned mask = 1; mask < full; mask += 2) {  // subsets containing index 0, proper
        std::vector<int> J;
        for (int i = 0; i < r; ++i)
            if (mask & (1u << i)) J.push_back(i);
        std::vector<int> block_n;
        std::vector<Rational> block_g;
        for (size_t mu = 0; mu < J.size(); ++mu) {
            int end = mu + 1 < J.size() ? J[mu + 1] : r;
            int s = 0;
            for (int l = J[mu]; l < end; ++l) s += n[l];
            block_n.push_back(s);
            block_g.push_back(gammas[J[mu]]);
        }
        residual += rpow(half, r - static_cast<long>(J.size())) * L_value_nonpos_closed(block_n, block_g, c, p);
    }
    return residual;
}

}  // namespace mz
