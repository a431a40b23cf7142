#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace mz {

using Integer = mpz_class;
using Rational = mpq_class;  // gmpxx keeps mpq values canonical after every operator

Rational make_rational(long num, long den = 1);
Rational parse_rational(const std::string& s);  // "a", "-a/b"
std::string to_string(const Rational& q);

Rational rpow(const Rational& base, long e);  // e may be negative for nonzero base
Integer ipow(const Integer& base, unsigned long e);
Integer factorial(unsigned n);
Integer binomial(unsigned n, unsigned k);

inline bool is_zero(const Rational& q) { return sgn(q) == 0; }
inline bool is_zero(const Integer& z) { return sgn(z) == 0; }

// p-adic valuation; returns a large sentinel for zero.
constexpr long kInfiniteValuation = 1L << 40;
long valuation(const Integer& x, unsigned long p);
long valuation(const Rational& q, unsigned long p);

// Parses "1,2,-3" style tuples (used by the CLI and the Python layer).
std::vector<long> parse_int_list(const std::string& s);
std::vector<Rational> parse_rational_list(const std::string& s);

}  // namespace mz
