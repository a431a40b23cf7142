#pragma once

#include <vector>

#include "multizeta/padic.hpp"
#include "multizeta/rational.hpp"
#include "multizeta/series.hpp"

namespace mz {

struct LSpec {
    u64 p = 5;
    int c = 2;
    std::vector<long> s;  // argument tuple
    std::vector<long> k;  // character exponents (omega^{k_j})
    std::vector<Rational> gammas;

    int depth() const { return static_cast<int>(s.size()); }
};

// Riemann sums of the defining integral at level N; precision min(N, M). Needs c | p-1.
PadicInt L_value_riemann(const LSpec& spec, int N, int M);

// L_{p,r}((-n_j); (omega^{n_j}); (gamma_j); c) exactly, via twisted multiple Bernoulli sums in Q(zeta_{pc}).
Rational L_value_nonpos_closed(const std::vector<int>& n, const std::vector<Rational>& gammas, int c, u64 p);

// Product generating function for gamma_1 a unit and gamma_j in pZ_p (j >= 2); coefficient * prod n! = L value.
TruncSeries<Rational> L_genfun_special(int r, const Rational& gamma1, const std::vector<Rational>& gammas_rest,
                                       const Rational& c, u64 p, const std::vector<int>& caps);
Rational L_value_genfun(const std::vector<int>& n, const std::vector<Rational>& gammas, const Rational& c, u64 p);

// (1 - c^{n+1}) B_{n+1} gamma^n / (n+1)
Rational calB(int n, const Rational& gamma, const Rational& c);
// n_1!...n_r! [t^n] prod_j H_1(t_j + ... + t_r; gamma_j; c), H_1 = tilde-H_1 - (c-1)/2
Rational calB(const std::vector<int>& n, const std::vector<Rational>& gammas, const Rational& c);

// ord_p(L(-m) - L(-n)) for m_j = n_j mod (p-1)p^{l_j-1}; kInfiniteValuation when equal.
long kummer_check(const std::vector<int>& m, const std::vector<int>& n, const std::vector<int>& l,
                  const std::vector<Rational>& gammas, int c, u64 p);

// LHS minus the subset-sum side of the parity functional relation, evaluated at s = -n.
Rational functional_relation_residual(const std::vector<int>& n, const std::vector<long>& k,
                                      const std::vector<Rational>& gammas, int c, u64 p);

}  // namespace mz
