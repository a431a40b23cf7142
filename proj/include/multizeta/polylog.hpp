#pragma once

#include <optional>
#include <vector>

#include "multizeta/padic.hpp"
#include "multizeta/rational.hpp"

namespace mz {

// Which index set the l_j (j >= 2) run over. Integral: [0, p^M), the cells of the measure, so the
// series side uses chains 0 < k_1 <= ... <= k_r. Strict: (0, p^M) and 0 < k_1 < ... < k_r.
enum class IndexRange { Integral, Strict };

struct TmplSpec {
    u64 p = 5;
    std::vector<int> n;         // weights, all >= 1
    int order = 1;              // xi_j = zeta^{xi_exps[j]}, zeta the Teichmuller root of this order (order | p-1)
    std::vector<long> xi_exps;
    std::optional<Rational> z;  // nullopt is the point at infinity
    int M = 3;
    IndexRange range = IndexRange::Integral;

    int depth() const { return static_cast<int>(n.size()); }
};

// The root zeta_order^e as a residue mod p^M.
u64 teichmuller_root(int order, long e, u64 p, int M);

// Truncated power series for |z|_p < 1, chains capped at k_r <= terms; precision min(M, (terms+1) v(z)).
PadicInt tmpl_series(const TmplSpec& spec, long terms);

// g^M exactly modulo p^M (no precision discount).
PadicInt tmpl_gM_exact(const TmplSpec& spec);
// g^M as an approximation of the rigid TMPL, reported to M-1 digits.
PadicInt rigid_tmpl_gM(const TmplSpec& spec);

// g^M restricted to l_1 + ... + l_j = alpha_j mod p; exact mod p^M.
PadicInt partial_tmpl(const TmplSpec& spec, const std::vector<int>& alphas);

// L at s = n, k = -n, gamma = 1 by Riemann sums (level N), minus the xi-tuple sum of g^M at z = 1.
PadicInt L_ell_residual(const std::vector<int>& n, int c, u64 p, int M, int N,
                        IndexRange range = IndexRange::Integral);

}  // namespace mz
