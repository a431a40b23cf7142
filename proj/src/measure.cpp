#include "multizeta/measure.hpp"

#include <atomic>
#include <cctype>
#include <cmath>

#include "multizeta/errors.hpp"

namespace mz {

namespace {
std::atomic<double> g_max_tuples{1e7};
}

void set_max_tuples(double n) { g_max_tuples = n; }
double max_tuples() { return g_max_tuples; }

void check_cost(double tuples, const char* what) {
    if (tuples > g_max_tuples)
        throw Error(ErrorKind::CostCeiling, std::string(what) + " would enumerate " + std::to_string(tuples) +
                                                " tuples (ceiling " + std::to_string(g_max_tuples.load()) + ")");
}

MeasureSpec MeasureSpec::single_root(u64 p, int M, u64 xi) {
    if (!is_odd_prime(p)) throw Error(ErrorKind::InvalidArgument, "p must be an odd prime");
    Zmod R(upow(p, M));
    xi %= R.m;
    if (xi % p == 1 % p || R.pow(xi, p - 1) != 1)
        throw Error(ErrorKind::DegenerateCell, "single-root measure needs a Teichmuller root xi != 1");
    MeasureSpec s;
    s.kind = Kind::SingleRoot;
    s.p = p;
    s.M = M;
    s.xi = xi;
    return s;
}

MeasureSpec MeasureSpec::c_average(u64 p, int M, int c) {
    if (!is_odd_prime(p)) throw Error(ErrorKind::InvalidArgument, "p must be an odd prime");
    if (c < 2 || (p - 1) % static_cast<u64>(c) != 0)
        throw Error(ErrorKind::UnsupportedC, "the Riemann-sum integrator needs c | p-1");
    MeasureSpec s;
    s.kind = Kind::CAverage;
    s.p = p;
    s.M = M;
    s.c = c;
    return s;
}

namespace {
std::vector<u64> roots_of(const MeasureSpec& spec) {
    if (spec.kind == MeasureSpec::Kind::SingleRoot) return {spec.xi};
    return nontrivial_roots_of_unity(spec.c, spec.p, spec.M);
}
}  // namespace

std::vector<u64> measure_cells(const MeasureSpec& spec, int N) {
    if (N < 0) throw Error(ErrorKind::InvalidArgument, "level must be >= 0");
    Zmod R(upow(spec.p, spec.M));
    const u64 pN = upow(spec.p, N);
    check_cost(static_cast<double>(pN), "measure_cells");
    std::vector<u64> out(pN, 0);
    for (u64 xi : roots_of(spec)) {
        u64 denom = R.sub(1 % R.m, R.pow(xi, pN));
        if (denom % spec.p == 0) throw Error(ErrorKind::DegenerateCell, "1 - xi^{p^N} is not a unit");
        u64 inv = R.inv(denom);
        u64 x = inv;  // xi^j / (1 - xi^{p^N})
        for (u64 j = 0; j < pN; ++j) {
            out[j] = R.add(out[j], x);
            x = R.mul(x, xi);
        }
    }
    return out;
}

PadicInt measure_cell(const MeasureSpec& spec, u64 j, int N) {
    Zmod R(upow(spec.p, spec.M));
    const u64 pN = upow(spec.p, N);
    if (j >= pN) throw Error(ErrorKind::InvalidArgument, "cell index out of range");
    u64 acc = 0;
    for (u64 xi : roots_of(spec)) {
        u64 denom = R.sub(1 % R.m, R.pow(xi, pN));
        if (denom % spec.p == 0) throw Error(ErrorKind::DegenerateCell, "1 - xi^{p^N} is not a unit");
        acc = R.add(acc, R.mul(R.pow(xi, j), R.inv(denom)));
    }
    return PadicInt(spec.p, spec.M, acc);
}

PadicInt integrate_riemann(const CellIntegrand& f, const Region& region, const std::vector<MeasureSpec>& specs, int N,
                           int M) {
    const int r = region.r;
    if (r < 1 || specs.empty()) throw Error(ErrorKind::InvalidArgument, "integrate_riemann: empty region");
    if (region.restricted && static_cast<int>(region.gammas.size()) != r)
        throw Error(ErrorKind::InvalidArgument, "integrate_riemann: gamma count must equal r");
    const u64 p = specs[0].p;
    check_cost(std::pow(static_cast<double>(p), static_cast<double>(N) * r), "integrate_riemann");
    std::vector<std::vector<u64>> cells;
    for (int j = 0; j < r; ++j) {
        MeasureSpec s = specs[std::min<size_t>(j, specs.size() - 1)];
        s.M = M;
        cells.push_back(measure_cells(s, N));
    }
    Zmod R(upow(p, M));
    const u64 pN = upow(p, N);
    std::vector<u64> a(r, 0);
    u64 total = 0;
    auto rec = [&](auto&& self, int j, u64 partial_mod_p, u64 weight) -> void {
        if (j == r) {
            total = R.add(total, R.mul(weight, f(a) % R.m));
            return;
        }
        const u64 g = region.restricted ? region.gammas[j] % p : 0;
        for (u64 x = 0; x < pN; ++x) {
            u64 part = (partial_mod_p + (x % p) * g) % p;
            if (region.restricted && part == 0) continue;
            if (cells[j][x] == 0) continue;
            a[j] = x;
            self(self, j + 1, part, R.mul(weight, cells[j][x]));
        }
    };
    rec(rec, 0, 0, 1 % R.m);
    const int prec = std::min(M, N);
    return PadicInt(p, prec, total % upow(p, prec));
}

MonomialIntegrand MonomialIntegrand::parse(const std::string& text) {
    MonomialIntegrand out;
    std::string t;
    for (char ch : text)
        if (!std::isspace(static_cast<unsigned char>(ch))) t += ch;
    if (t.empty() || t == "1") return out;
    size_t pos = 0;
    auto fail = [&]() { throw Error(ErrorKind::InvalidArgument, "cannot parse integrand '" + text + "'"); };
    while (pos < t.size()) {
        if (t[pos] != 'x') fail();
        ++pos;
        size_t idx = 1;
        if (pos < t.size() && std::isdigit(static_cast<unsigned char>(t[pos]))) {
            size_t start = pos;
            while (pos < t.size() && std::isdigit(static_cast<unsigned char>(t[pos]))) ++pos;
            idx = std::stoul(t.substr(start, pos - start));
            if (idx == 0) fail();
        }
        long e = 1;
        if (pos < t.size() && t[pos] == '^') {
            ++pos;
            size_t start = pos;
            if (pos < t.size() && t[pos] == '-') ++pos;
            while (pos < t.size() && std::isdigit(static_cast<unsigned char>(t[pos]))) ++pos;
            if (pos == start || (pos == start + 1 && t[start] == '-')) fail();
            e = std::stol(t.substr(start, pos - start));
        }
        if (out.exps.size() < idx) out.exps.resize(idx, 0);
        out.exps[idx - 1] += e;
        if (pos < t.size()) {
            if (t[pos] != '*') fail();
            ++pos;
        }
    }
    return out;
}

CellIntegrand MonomialIntegrand::bind(u64 p, int M) const {
    Zmod R(upow(p, M));
    std::vector<long> e = exps;
    return [R, e](const std::vector<u64>& a) -> u64 {
        u64 v = 1 % R.m;
        for (size_t j = 0; j < e.size(); ++j) {
            if (j >= a.size()) throw Error(ErrorKind::InvalidArgument, "integrand uses more variables than the region");
            if (e[j] >= 0)
                v = R.mul(v, R.pow(a[j], e[j]));
            else
                v = R.mul(v, R.pow(R.inv(a[j] % R.m), -e[j]));
        }
        return v;
    };
}

}  // namespace mz
