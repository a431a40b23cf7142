#pragma once

#include <complex>
#include <vector>

namespace mz {

using cplx = std::complex<double>;

struct NumericPoint {
    std::vector<cplx> s;
    std::vector<cplx> xis;     // roots of unity; empty means all 1
    std::vector<cplx> gammas;  // Re > 0; empty means all 1
    double tol = 1e-8;
};

struct NumericResult {
    cplx value;
    double error = 0;  // rigorous for mzf_numeric, a doubling estimate for the E-series
    long terms = 0;    // per-axis truncation of the final pass
    bool converged = false;
};

// Largest number of summed terms per evaluation before giving up (reported as not converged).
constexpr double kNumericBudget = 2e7;

// The nested Lerch-type series sum_{m >= 1} prod_j xi_j^{m_j} (m_1 g_1 + ... + m_j g_j)^{-s_j}.
// OutsideRegion unless Re(s_j + ... + s_r) >= r - j + 1.5 for every j.
NumericResult mzf_numeric(const NumericPoint& pt);

// Depth-2 desingularized value by termwise integration of E(g1 y1 ...) E(...); Re s1, Re s2 > 2.
NumericResult desing_numeric_E_series(cplx s1, cplx s2, double tol, cplx g1 = 1.0, cplx g2 = 1.0);

// (s)_l
cplx pochhammer(cplx s, int l);

struct ThexReport {
    cplx lhs;  // Pochhammer combination of shifted mzf values
    cplx rhs;  // E-series value
    double residual = 0;
    double error = 0;  // combined error budget of both sides
};

// Compares the desingularization identity at s (depth 1 or 2).
ThexReport thex_residual(const std::vector<cplx>& s, const std::vector<cplx>& gammas, double tol);

}  // namespace mz
