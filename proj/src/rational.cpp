#include "multizeta/rational.hpp"

#include <mutex>
#include <sstream>

#include "multizeta/errors.hpp"

namespace mz {

const char* kind_name(ErrorKind k) {
    switch (k) {
        case ErrorKind::ZeroInversion: return "ZeroInversion";
        case ErrorKind::CapMismatch: return "CapMismatch";
        case ErrorKind::UnityTwist: return "UnityTwist";
        case ErrorKind::NonRationalSum: return "NonRationalSum";
        case ErrorKind::NonUnit: return "NonUnit";
        case ErrorKind::DegenerateCell: return "DegenerateCell";
        case ErrorKind::UnsupportedC: return "UnsupportedC";
        case ErrorKind::NonIntegralValue: return "NonIntegralValue";
        case ErrorKind::PreconditionViolation: return "PreconditionViolation";
        case ErrorKind::ParityViolation: return "ParityViolation";
        case ErrorKind::DomainViolation: return "DomainViolation";
        case ErrorKind::BadAlpha: return "BadAlpha";
        case ErrorKind::OutsideRegion: return "OutsideRegion";
        case ErrorKind::CostCeiling: return "CostCeiling";
        case ErrorKind::InvalidArgument: return "InvalidArgument";
    }
    return "Unknown";
}

Rational make_rational(long num, long den) {
    if (den == 0) throw Error(ErrorKind::ZeroInversion, "zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

Rational parse_rational(const std::string& s) {
    Rational q;
    std::string t;
    for (char ch : s)
        if (ch != ' ') t += ch;
    if (t.empty() || q.set_str(t, 10) != 0)
        throw Error(ErrorKind::InvalidArgument, "not a rational: '" + s + "'");
    if (q.get_den() == 0) throw Error(ErrorKind::ZeroInversion, "zero denominator in '" + s + "'");
    q.canonicalize();
    return q;
}

std::string to_string(const Rational& q) { return q.get_str(); }

Integer ipow(const Integer& base, unsigned long e) {
    Integer r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

Rational rpow(const Rational& base, long e) {
    if (e >= 0) {
        Rational r(ipow(base.get_num(), e), ipow(base.get_den(), e));
        r.canonicalize();
        return r;
    }
    if (sgn(base) == 0) throw Error(ErrorKind::ZeroInversion, "0 to a negative power");
    Rational inv = 1 / base;
    return rpow(inv, -e);
}

Integer factorial(unsigned n) {
    static std::mutex mu;
    static std::vector<Integer> cache{Integer(1)};
    std::lock_guard<std::mutex> lock(mu);
    while (cache.size() <= n) cache.push_back(cache.back() * static_cast<unsigned long>(cache.size()));
    return cache[n];
}

Integer binomial(unsigned n, unsigned k) {
    if (k > n) return 0;
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

long valuation(const Integer& x, unsigned long p) {
    if (x == 0) return kInfiniteValuation;
    Integer y = abs(x);
    long v = 0;
    while (mpz_divisible_ui_p(y.get_mpz_t(), p)) {
        mpz_divexact_ui(y.get_mpz_t(), y.get_mpz_t(), p);
        ++v;
    }
    return v;
}

long valuation(const Rational& q, unsigned long p) {
    if (sgn(q) == 0) return kInfiniteValuation;
    return valuation(q.get_num(), p) - valuation(q.get_den(), p);
}

namespace {
std::vector<std::string> split_commas(const std::string& s) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) throw Error(ErrorKind::InvalidArgument, "empty entry in list '" + s + "'");
        out.push_back(item);
    }
    if (out.empty() || s.back() == ',') throw Error(ErrorKind::InvalidArgument, "empty entry in list '" + s + "'");
    return out;
}
}  // namespace

std::vector<long> parse_int_list(const std::string& s) {
    std::vector<long> out;
    for (const auto& item : split_commas(s)) {
        size_t pos = 0;
        long v = 0;
        try {
            v = std::stol(item, &pos);
        } catch (const std::exception&) {
            throw Error(ErrorKind::InvalidArgument, "not an integer: '" + item + "'");
        }
        if (pos != item.size()) throw Error(ErrorKind::InvalidArgument, "not an integer: '" + item + "'");
        out.push_back(v);
    }
    return out;
}

std::vector<Rational> parse_rational_list(const std::string& s) {
    std::vector<Rational> out;
    for (const auto& item : split_commas(s)) out.push_back(parse_rational(item));
    return out;
}

}  // namespace mz
