#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <random>

#include "../oracles.hpp"
#include "doctest.h"
#include "multizeta/errors.hpp"
#include "multizeta/bernoulli.hpp"
#include "multizeta/multiple_l.hpp"
#include "multizeta/twisted_bernoulli.hpp"

using namespace mz;

namespace {
LSpec nonpos(u64 p, int c, const std::vector<int>& n, const std::vector<Rational>& g) {
    LSpec s;
    s.p = p;
    s.c = c;
    for (int x : n) {
        s.s.push_back(-x);
        s.k.push_back(x);
    }
    s.gammas = g;
    return s;
}
}  // namespace

TEST_CASE("L_value_riemann: examples") {
    CHECK(L_value_riemann(nonpos(5, 2, {1}, {Rational(1)}), 3, 3).congruent(PadicInt(5, 3, 1)));
    auto v = L_value_riemann(nonpos(5, 2, {1, 0}, {Rational(1), Rational(5)}), 3, 3);
    CHECK(v.congruent(rational_to_padic(Rational(1, 2), 5, 3)));
    CHECK(L_value_riemann(nonpos(5, 2, {1, 1}, {Rational(5), Rational(1)}), 3, 3).is_zero());
    CHECK_THROWS_AS(L_value_riemann(nonpos(5, 3, {1}, {Rational(1)}), 2, 2), Error);
}

TEST_CASE("L_value_nonpos_closed: Kubota-Leopoldt and the depth-2 (1,1) value") {
    for (u64 p : {3, 5, 7})
        for (int c : {2, 3, 4}) {
            if (c % static_cast<int>(p) == 0) continue;
            for (int n = 0; n <= 5; ++n)
                CHECK(L_value_nonpos_closed({n}, {Rational(1)}, c, p) == oracle::kubota_leopoldt(n, c, p));
        }
    for (int c : {2, 3}) {
        const Rational eta(5);
        const Rational v = L_value_nonpos_closed({1, 1}, {Rational(1), eta}, c, 5);
        CHECK(v == oracle::pair11_value(c, 5, eta));
        CHECK(v != 0);
    }
    CHECK_THROWS_AS(L_value_nonpos_closed({1}, {Rational(1)}, 5, 5), Error);
    CHECK_THROWS_AS(L_value_nonpos_closed({1}, {Rational(1)}, 1, 5), Error);
}

TEST_CASE("closed form and generating function match the single-sum depth-2 formula") {
    const u64 p = 5;
    for (int c : {2, 3})
        for (Rational eta : {Rational(5), Rational(10), Rational(-5, 3)})
            for (int k1 = 0; k1 <= 3; ++k1)
                for (int k2 = 0; k2 <= 3; ++k2) {
                    const Rational expect = oracle::L2_val(k1, k2, eta, c, p);
                    CHECK(L_value_nonpos_closed({k1, k2}, {Rational(1), eta}, c, p) == expect);
                    CHECK(L_value_genfun({k1, k2}, {Rational(1), eta}, Rational(c), p) == expect);
                }
}

TEST_CASE("L_genfun_special: depth-3 coefficients and the vanishing constant term") {
    const u64 p = 5;
    const Rational e1(5), e2(-10);
    auto s = L_genfun_special(3, Rational(1), {e1, e2}, Rational(2), p, {2, 2, 2});
    CHECK(s.coeff({0, 0, 0}) == 0);
    for (int a = 0; a <= 2; ++a)
        for (int b = 0; b <= 2; ++b)
            for (int d = 0; d <= 2; ++d) {
                Rational v = s.coeff({a, b, d}) * Rational(factorial(a) * factorial(b) * factorial(d));
                CHECK(v == oracle::tri_val(a, b, d, e1, e2, 2, p));
            }
}

TEST_CASE("closed form at non-unit gamma_1 and general gamma") {
    // gamma_1 in pZ_p: the function is identically zero
    CHECK(L_value_nonpos_closed({1, 2}, {Rational(5), Rational(1)}, 2, 5) == 0);
    // arbitrary p-integral gammas: the exact value reduces to the Riemann sums
    const std::vector<Rational> g{Rational(2, 3), Rational(1)};
    for (auto n : std::vector<std::vector<int>>{{1, 0}, {1, 2}, {2, 1}}) {
        const Rational exact = L_value_nonpos_closed(n, g, 2, 5);
        CHECK(L_value_riemann(nonpos(5, 2, n, g), 2, 2).congruent(rational_to_padic(exact, 5, 2)));
    }
}

TEST_CASE("route agreement at level 2") {
    const u64 p = 5;
    for (auto g : std::vector<std::vector<Rational>>{{Rational(1)}, {Rational(1), Rational(1)}, {Rational(1), Rational(5)}})
        for (int n1 = 0; n1 <= 3; ++n1)
            for (int n2 = 0; n2 <= (g.size() == 2 ? 3 : 0); ++n2) {
                std::vector<int> n{n1};
                if (g.size() == 2) n.push_back(n2);
                const Rational exact = L_value_nonpos_closed(n, g, 2, p);
                PadicInt rs = L_value_riemann(nonpos(p, 2, n, g), 2, 3);
                CHECK(rs.precision() == 2);
                CHECK(rs.congruent(rational_to_padic(exact, p, 2)));
            }
}

TEST_CASE("calB: scalar examples and parity vanishing") {
    CHECK(calB(2, Rational(7), Rational(3)) == 0);
    CHECK(calB(1, Rational(1), Rational(2)) == Rational(-1, 4));
    const std::vector<Rational> g{Rational(1), Rational(5), Rational(-10)};
    for (int r = 1; r <= 3; ++r) {
        std::vector<Rational> gr(g.begin(), g.begin() + r);
        std::vector<int> n(r, 1);
        for (;;) {
            int s = 0;
            for (int x : n) s += x;
            if ((s - r) % 2 != 0) CHECK(calB(n, gr, Rational(3)) == 0);
            int j = 0;
            while (j < r && ++n[j] > 5) n[j++] = 1;
            if (j == r) break;
        }
    }
}

TEST_CASE("calB: depth-2 subset decomposition against tilde-H") {
    for (Rational c : {Rational(2), Rational(3), Rational(5, 2)}) {
        const Rational g1(1), g2(5), h = (c - 1) / 2;
        auto H = tilde_H_coeffs(2, {g1, g2}, c, {3, 3});
        for (int n1 = 1; n1 <= 3; ++n1)
            for (int n2 = 1; n2 <= 3; ++n2) {
                Rational expect = H.coeff({n1, n2}) * Rational(factorial(n1) * factorial(n2)) - h * calB(n1 + n2, g1, c);
                CHECK(calB({n1, n2}, {g1, g2}, c) == expect);
            }
    }
}

TEST_CASE("kummer_check: examples and randomized instances") {
    CHECK(kummer_check({2}, {2}, {1}, {Rational(1)}, 3, 5) >= kInfiniteValuation);
    CHECK(kummer_check({6}, {2}, {1}, {Rational(1)}, 3, 5) >= 1);
    CHECK_THROWS_AS(kummer_check({3}, {2}, {1}, {Rational(1)}, 3, 5), Error);
    std::mt19937 rng(23);
    std::uniform_int_distribution<int> small(0, 3), shift(1, 2);
    const u64 p = 5;
    for (int trial = 0; trial < 10; ++trial) {
        std::vector<int> n{small(rng), small(rng)}, m = n, l{1, 1};
        m[trial % 2] += 4 * shift(rng);
        long v = kummer_check(m, n, l, {Rational(1), Rational(5)}, 2, p);
        CHECK(v >= 1);
    }
}

TEST_CASE("functional_relation_residual: depth 2 and 3 vanish; preconditions") {
    const u64 p = 5;
    for (auto n : std::vector<std::vector<int>>{{1, 2}, {2, 1}, {0, 1}, {3, 2}})
        CHECK(functional_relation_residual(n, std::vector<long>(n.begin(), n.end()), {Rational(1), Rational(5)}, 2, p) == 0);
    for (auto n : std::vector<std::vector<int>>{{0, 1, 1}, {1, 1, 2}, {2, 2, 2}})
        CHECK(functional_relation_residual(n, std::vector<long>(n.begin(), n.end()),
                                           {Rational(1), Rational(5), Rational(10)}, 3, p) == 0);
    CHECK_THROWS_AS(functional_relation_residual({1, 1}, {1, 1}, {Rational(1), Rational(5)}, 2, p), Error);
    CHECK_THROWS_AS(functional_relation_residual({1, 2}, {1, 2}, {Rational(1), Rational(1)}, 2, p), Error);
}

TEST_CASE("depth-1 odd characters vanish") {
    // omega^k with k odd: L_p(-n, omega^n) for n even is (1 - p^n)(1 - c^{n+1}) B_{n+1}/(n+1) = 0
    for (int n = 2; n <= 8; n += 2) CHECK(L_value_nonpos_closed({n}, {Rational(1)}, 2, 7) == 0);
}

TEST_CASE("continuity in c: congruent c give congruent values") {
    // one power of p is lost on the pole branch, where n_1+...+n_r+1 = 0 mod p-1
    const u64 p = 5;
    auto loss = [&](const std::vector<int>& n) {
        int s = 1;
        for (int x : n) s += x;
        return s % static_cast<int>(p - 1) == 0 ? 1 : 0;
    };
    const std::vector<std::vector<int>> tuples{{1}, {2}, {3}, {1, 2}, {2, 2}, {2, 3}, {0, 1, 1}, {1, 1, 1}};
    auto gammas = [](size_t r) {
        std::vector<Rational> g{Rational(1)};
        for (size_t j = 1; j < r; ++j) g.push_back(Rational(5 * static_cast<long>(j)));
        return g;
    };
    for (auto [c, c2] : std::vector<std::pair<int, int>>{{2, 7}, {3, 8}})
        for (const auto& n : tuples) {
            if (n.size() > 2) continue;
            const Rational d = L_value_nonpos_closed(n, gammas(n.size()), c, p) - L_value_nonpos_closed(n, gammas(n.size()), c2, p);
            CHECK(valuation(d, p) >= 1 - loss(n));
        }
    for (auto [c, c2, k] : std::vector<std::tuple<int, int, int>>{{2, 27, 2}, {3, 28, 2}, {4, 129, 3}, {2, 627, 4}})
        for (const auto& n : tuples) {
            const Rational d = L_value_genfun(n, gammas(n.size()), Rational(c), p) - L_value_genfun(n, gammas(n.size()), Rational(c2), p);
            CHECK(valuation(d, p) >= k - loss(n));
        }
}
