#pragma once

#include <cstdint>
#include <string>

#include "multizeta/rational.hpp"

namespace mz {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

// Arithmetic in Z/mZ for m < 2^62; the hot loops of the integrators run on this.
struct Zmod {
    u64 m = 1;

    Zmod() = default;
    explicit Zmod(u64 modulus) : m(modulus) {}

    u64 add(u64 a, u64 b) const {
        u64 s = a + b;
        return s >= m ? s - m : s;
    }
    u64 sub(u64 a, u64 b) const { return a >= b ? a - b : a + m - b; }
    u64 mul(u64 a, u64 b) const { return static_cast<u64>((static_cast<u128>(a) * b) % m); }
    u64 pow(u64 a, u64 e) const;
    u64 inv(u64 a) const;  // NonUnit if gcd(a, m) != 1
    u64 from_signed(long long x) const;
    u64 from_rational(const Rational& q) const;  // denominator must be invertible
};

u64 upow(u64 p, int e);  // p^e, throws InvalidArgument if it does not fit below 2^62
bool is_odd_prime(u64 p);

// residue * p^{-shift}, known modulo p^{precision - shift}.
class PadicInt {
public:
    PadicInt() = default;
    PadicInt(u64 p, int precision, u64 residue, int shift = 0);

    static PadicInt from_integer(long long x, u64 p, int precision);

    u64 p() const { return p_; }
    int precision() const { return M_; }
    u64 residue() const { return res_; }
    int shift() const { return shift_; }
    u64 modulus() const { return upow(p_, M_); }
    int absolute_precision() const { return M_ - shift_; }

    bool is_unit() const { return shift_ == 0 && res_ % p_ != 0; }
    bool is_zero() const { return res_ == 0; }
    // ord_p of the value, capped at absolute precision when the residue is 0
    long valuation() const;

    PadicInt operator-() const;
    friend PadicInt operator+(const PadicInt& a, const PadicInt& b);
    friend PadicInt operator-(const PadicInt& a, const PadicInt& b) { return a + (-b); }
    friend PadicInt operator*(const PadicInt& a, const PadicInt& b);
    PadicInt inverse() const;  // units only (NonUnit otherwise)
    PadicInt pow(long e) const;  // negative e needs a unit
    PadicInt with_precision(int M) const;  // only lowers precision

    // equality of the represented values at the common absolute precision
    bool congruent(const PadicInt& o) const;
    std::string to_string() const;

private:
    void normalize();
    u64 p_ = 3;
    int M_ = 1;
    u64 res_ = 0;
    int shift_ = 0;
};

PadicInt teichmuller(const PadicInt& x);
// <x>^{-s} omega(x)^k with <x> = x/omega(x)
PadicInt unit_character(const PadicInt& x, long s, long k);
PadicInt rational_to_padic(const Rational& q, u64 p, int M);

// Teichmuller representative of the residue class a mod p, in Z/p^M.
u64 teichmuller_residue(u64 a, u64 p, int M);
// A generator of (Z/p)^x.
u64 primitive_root(u64 p);
// The c-1 non-trivial c-th roots of unity in Z_p (c | p-1), as residues mod p^M.
std::vector<u64> nontrivial_roots_of_unity(int c, u64 p, int M);

}  // namespace mz
