#pragma once

#include <vector>

#include "multizeta/cyclotomic.hpp"
#include "multizeta/series.hpp"

namespace mz {

// Depth-r twist data: xi_j = zeta_N^{exps[j]} in Q(zeta_N), gamma_j rational.
struct TwistSpec {
    int N = 1;
    std::vector<long> xi_exps;
    std::vector<Rational> gammas;

    int depth() const { return static_cast<int>(xi_exps.size()); }
    bool degenerate() const;  // some xi_j == 1
};

// B_n(xi) from 1/(1 - xi e^t) = sum B_n(xi) t^n/n!; n >= -1 (B_{-1} = 0). UnityTwist if xi == 1.
CycNum twisted_bernoulli(int n, const CycNum& xi);
// All of B_0(xi)..B_nmax(xi) in one recurrence pass.
std::vector<CycNum> twisted_bernoulli_table(int nmax, const CycNum& xi);

// n_1!...n_r! [t^n] prod_j 1/(1 - xi_j exp(gamma_j (t_j+...+t_r))), via truncated series products.
CycNum twisted_multi_bernoulli(const TwistSpec& spec, const std::vector<int>& n);

// sum_{xi^c=1, xi!=1} B_n(xi), checked to be rational.
Rational root_sum_twisted(int n, int c);

// Expansion of prod_j sum_{m>=1} (1-c^m) B_m (gamma_j (t_j+..+t_r))^{m-1}/m! up to caps.
TruncSeries<Rational> tilde_H_coeffs(int r, const std::vector<Rational>& gammas, const Rational& c,
                                     const std::vector<int>& caps);

// Weighted nu-matrix sum shared by the closed forms:
//   prod_l n_l! * sum over (nu_{jl})_{j<=l} with column sums n_l of prod_j col(j, m_j) gamma_j^{m_j} / prod nu!,
// where m_j = sum_{l>=j} nu_{jl}. Returns the map m -> integer weight * prod gamma_j^{m_j}.
std::map<std::vector<int>, Rational> nu_weights(const std::vector<int>& n, const std::vector<Rational>& gammas);

}  // namespace mz
