#pragma once

#include <memory>
#include <vector>

#include "multizeta/rational.hpp"

namespace mz {

// Q(zeta_N) presented as Q[X]/Phi_N.
class CycField {
public:
    static std::shared_ptr<const CycField> get(int N);  // cached, immutable

    int N() const { return N_; }
    int degree() const { return static_cast<int>(phi_.size()) - 1; }
    const std::vector<Integer>& phi() const { return phi_; }  // low degree first, monic

    explicit CycField(int N);

private:
    int N_;
    std::vector<Integer> phi_;
};

// Integer coefficients of Phi_N (low degree first), computed as (X^N-1)/prod_{d|N,d<N} Phi_d.
std::vector<Integer> cyclotomic_polynomial(int N);

class CycNum {
public:
    CycNum() = default;
    explicit CycNum(std::shared_ptr<const CycField> field);  // zero
    CycNum(std::shared_ptr<const CycField> field, const Rational& q);
    CycNum(std::shared_ptr<const CycField> field, std::vector<Rational> coeffs);  // any length; reduced

    static CycNum root(std::shared_ptr<const CycField> field, long k);  // zeta_N^k

    const CycField& field() const { return *field_; }
    const std::shared_ptr<const CycField>& field_ptr() const { return field_; }
    const std::vector<Rational>& coeffs() const { return c_; }

    bool is_zero() const;
    bool is_one() const;
    bool is_rational() const;
    Rational rational_value() const;  // throws NonRationalSum unless is_rational()

    CycNum operator-() const;
    CycNum& operator+=(const CycNum& o);
    CycNum& operator-=(const CycNum& o);
    CycNum& operator*=(const CycNum& o);
    CycNum& operator*=(const Rational& q);

    friend CycNum operator+(CycNum a, const CycNum& b) { return a += b; }
    friend CycNum operator-(CycNum a, const CycNum& b) { return a -= b; }
    friend CycNum operator*(CycNum a, const CycNum& b) { return a *= b; }
    friend CycNum operator*(CycNum a, const Rational& q) { return a *= q; }
    friend CycNum operator*(const Rational& q, CycNum a) { return a *= q; }
    friend bool operator==(const CycNum& a, const CycNum& b);
    friend bool operator!=(const CycNum& a, const CycNum& b) { return !(a == b); }

    CycNum pow(long e) const;
    // The automorphism zeta -> zeta^k, gcd(k, N) = 1.
    CycNum galois(long k) const;

private:
    void check_same(const CycNum& o) const;
    std::shared_ptr<const CycField> field_;
    std::vector<Rational> c_;
};

CycNum cyclotomic_invert(const CycNum& a);  // ZeroInversion on 0

inline bool is_zero(const CycNum& a) { return a.is_zero(); }

}  // namespace mz
