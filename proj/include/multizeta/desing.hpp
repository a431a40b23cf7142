#pragma once

#include <vector>

#include "multizeta/rational.hpp"
#include "multizeta/series.hpp"

namespace mz {

struct DesingEntry {
    std::vector<int> l;  // exponents of u_1..u_r (become Pochhammer orders)
    std::vector<int> m;  // exponents of v_1..v_r (become argument shifts), sum m = 0
    Integer a;
};

struct DesingCoeffTable {
    int r = 0;
    std::vector<DesingEntry> entries;  // sorted by (m, l)

    Integer coeff(const std::vector<int>& l, const std::vector<int>& m) const;
};

// Expansion of G = prod_j (1 - (u_j v_j + ... + u_r v_r)(v_j^{-1} - v_{j-1}^{-1})), v_0^{-1} = 0.
DesingCoeffTable desing_coeffs(int r);

// zeta^des_r((-k_j); (gamma_j)) by the finite nu-matrix sum.
Rational desing_value_nonpos(const std::vector<int>& k, const std::vector<Rational>& gammas);

// Single-sum depth-2 closed form.
Rational desing_value_r2_closed(int k, int l, const Rational& g1, const Rational& g2);

// prod_j ((1-y_j)e^{y_j}-1)/(e^{y_j}-1)^2 with y_j = gamma_j (t_j+...+t_r), truncated at caps.
TruncSeries<Rational> desing_genfun_oracle(int r, const std::vector<Rational>& gammas, const std::vector<int>& caps);

// (-1)^{sum m} prod m_j! * [t^m] of the oracle series.
Rational desing_value_from_genfun(const TruncSeries<Rational>& series, const std::vector<int>& m);

}  // namespace mz
