#pragma once

#include <functional>
#include <vector>

#include "multizeta/padic.hpp"

namespace mz {

// Tuple-count ceiling shared by every enumerating routine (CLI overrides it from the environment).
void set_max_tuples(double n);
double max_tuples();
void check_cost(double tuples, const char* what);

struct MeasureSpec {
    enum class Kind { SingleRoot, CAverage };
    Kind kind = Kind::CAverage;
    u64 p = 3;
    int M = 1;   // working precision of the cell values
    u64 xi = 0;  // SingleRoot: Teichmuller root residue mod p^M
    int c = 2;   // CAverage

    static MeasureSpec single_root(u64 p, int M, u64 xi);
    static MeasureSpec c_average(u64 p, int M, int c);  // UnsupportedC unless c | p-1
};

// m(j + p^N Z_p), as a residue mod p^M.
PadicInt measure_cell(const MeasureSpec& spec, u64 j, int N);

// All cell values of one level at once (index j in [0, p^N)).
std::vector<u64> measure_cells(const MeasureSpec& spec, int N);

struct Region {
    int r = 1;
    std::vector<u64> gammas;  // residues mod p^M
    bool restricted = true;   // keep only cells with p not dividing any partial sum a_1 g_1 + ... + a_j g_j
};

// f receives the cell representatives a_1..a_r and returns a residue mod p^M.
using CellIntegrand = std::function<u64(const std::vector<u64>&)>;

// sum over admissible cells of f(a) prod_j m_j(a_j + p^N Z_p); precision min(M, N).
PadicInt integrate_riemann(const CellIntegrand& f, const Region& region, const std::vector<MeasureSpec>& specs,
                           int N, int M);

// Integrand prod_j x_j^{e_j} (negative exponents need units), parsed from "x^2", "x1^2*x2^-1", "1".
struct MonomialIntegrand {
    std::vector<long> exps;
    static MonomialIntegrand parse(const std::string& text);
    CellIntegrand bind(u64 p, int M) const;
};

}  // namespace mz
