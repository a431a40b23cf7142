#include "multizeta/cyclotomic.hpp"

#include <map>
#include <mutex>

#include "multizeta/errors.hpp"

namespace mz {

namespace {

using QPoly = std::vector<Rational>;  // low degree first

void trim(QPoly& a) {
    while (!a.empty() && sgn(a.back()) == 0) a.pop_back();
}

// a = q*b + r over Q; b nonzero and trimmed
void poly_divmod(QPoly a, const QPoly& b, QPoly& q, QPoly& r) {
    trim(a);
    q.assign(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, Rational(0));
    const Rational lead = b.back();
    while (a.size() >= b.size() && !a.empty()) {
        size_t shift = a.size() - b.size();
        Rational f = a.back() / lead;
        q[shift] = f;
        for (size_t i = 0; i < b.size(); ++i) a[i + shift] -= f * b[i];
        a.pop_back();
        trim(a);
    }
    r = std::move(a);
}

QPoly poly_mul(const QPoly& a, const QPoly& b) {
    if (a.empty() || b.empty()) return {};
    QPoly out(a.size() + b.size() - 1, Rational(0));
    for (size_t i = 0; i < a.size(); ++i) {
        if (sgn(a[i]) == 0) continue;
        for (size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    }
    return out;
}

QPoly poly_sub(const QPoly& a, const QPoly& b) {
    QPoly out(std::max(a.size(), b.size()), Rational(0));
    for (size_t i = 0; i < a.size(); ++i) out[i] += a[i];
    for (size_t i = 0; i < b.size(); ++i) out[i] -= b[i];
    trim(out);
    return out;
}

// Common-denominator form: value = nums / den.
void to_integral(const std::vector<Rational>& c, std::vector<Integer>& nums, Integer& den) {
    den = 1;
    for (const auto& x : c) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), x.get_den_mpz_t());
    nums.resize(c.size());
    for (size_t i = 0; i < c.size(); ++i) nums[i] = c[i].get_num() * (den / c[i].get_den());
}

}  // namespace

std::vector<Integer> cyclotomic_polynomial(int N) {
    if (N < 1) throw Error(ErrorKind::InvalidArgument, "cyclotomic conductor must be >= 1");
    static std::mutex mu;
    static std::map<int, std::vector<Integer>> cache;
    {
        std::lock_guard<std::mutex> lock(mu);
        auto it = cache.find(N);
        if (it != cache.end()) return it->second;
    }
    // X^N - 1
    std::vector<Integer> num(N + 1, Integer(0));
    num[0] = -1;
    num[N] = 1;
    for (int d = 1; d < N; ++d) {
        if (N % d) continue;
        std::vector<Integer> den = cyclotomic_polynomial(d);
        // exact division by a monic integer polynomial
        std::vector<Integer> q(num.size() - den.size() + 1, Integer(0));
        for (int i = static_cast<int>(num.size()) - 1; i >= static_cast<int>(den.size()) - 1; --i) {
            Integer f = num[i];
            size_t shift = i - (den.size() - 1);
            q[shift] = f;
            if (f != 0)
                for (size_t k = 0; k < den.size(); ++k) num[k + shift] -= f * den[k];
        }
        for (size_t k = 0; k + 1 < den.size(); ++k)
            if (num[k] != 0) throw Error(ErrorKind::InvalidArgument, "cyclotomic division not exact");
        num = std::move(q);
    }
    std::lock_guard<std::mutex> lock(mu);
    cache.emplace(N, num);
    return num;
}

CycField::CycField(int N) : N_(N), phi_(cyclotomic_polynomial(N)) {}

std::shared_ptr<const CycField> CycField::get(int N) {
    static std::mutex mu;
    static std::map<int, std::shared_ptr<const CycField>> cache;
    {
        std::lock_guard<std::mutex> lock(mu);
        auto it = cache.find(N);
        if (it != cache.end()) return it->second;
    }
    auto f = std::make_shared<const CycField>(N);
    std::lock_guard<std::mutex> lock(mu);
    return cache.emplace(N, f).first->second;
}

namespace {

// Reduce an arbitrary-length coefficient vector modulo X^N - 1 and then Phi_N.
std::vector<Rational> reduce(const CycField& F, std::vector<Rational> a) {
    const int N = F.N();
    const int d = F.degree();
    if (static_cast<int>(a.size()) > N) {
        for (size_t i = N; i < a.size(); ++i) a[i % N] += a[i];
        a.resize(N);
    }
    const auto& phi = F.phi();
    for (int i = static_cast<int>(a.size()) - 1; i >= d; --i) {
        if (sgn(a[i]) == 0) continue;
        Rational f = a[i];
        int shift = i - d;
        for (int k = 0; k <= d; ++k)
            if (phi[k] != 0) a[k + shift] -= f * phi[k];
    }
    a.resize(d, Rational(0));
    return a;
}

}  // namespace

CycNum::CycNum(std::shared_ptr<const CycField> field)
    : field_(std::move(field)), c_(field_->degree(), Rational(0)) {}

CycNum::CycNum(std::shared_ptr<const CycField> field, const Rational& q) : CycNum(std::move(field)) {
    c_[0] = q;
}

CycNum::CycNum(std::shared_ptr<const CycField> field, std::vector<Rational> coeffs)
    : field_(std::move(field)), c_(reduce(*field_, std::move(coeffs))) {}

CycNum CycNum::root(std::shared_ptr<const CycField> field, long k) {
    const long N = field->N();
    long e = ((k % N) + N) % N;
    std::vector<Rational> v(e + 1, Rational(0));
    v[e] = 1;
    return CycNum(std::move(field), std::move(v));
}

bool CycNum::is_zero() const {
    for (const auto& x : c_)
        if (sgn(x) != 0) return false;
    return true;
}

bool CycNum::is_one() const { return is_rational() && c_[0] == 1; }

bool CycNum::is_rational() const {
    for (size_t i = 1; i < c_.size(); ++i)
        if (sgn(c_[i]) != 0) return false;
    return true;
}

Rational CycNum::rational_value() const {
    if (!is_rational()) throw Error(ErrorKind::NonRationalSum, "cyclotomic value is not rational");
    return c_.empty() ? Rational(0) : c_[0];
}

void CycNum::check_same(const CycNum& o) const {
    if (!field_ || !o.field_ || field_->N() != o.field_->N())
        throw Error(ErrorKind::InvalidArgument, "cyclotomic operands live in different fields");
}

CycNum CycNum::operator-() const {
    CycNum r = *this;
    for (auto& x : r.c_) x = -x;
    return r;
}

CycNum& CycNum::operator+=(const CycNum& o) {
    check_same(o);
    for (size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
    return *this;
}

CycNum& CycNum::operator-=(const CycNum& o) {
    check_same(o);
    for (size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
    return *this;
}

CycNum& CycNum::operator*=(const Rational& q) {
    for (auto& x : c_) x *= q;
    return *this;
}

CycNum& CycNum::operator*=(const CycNum& o) {
    check_same(o);
    const int d = field_->degree();
    if (d == 1) {
        c_[0] *= o.c_[0];
        return *this;
    }
    // Integer schoolbook product followed by reduction by the monic Phi_N keeps gcds out of the inner loop.
    std::vector<Integer> a, b;
    Integer da, db;
    to_integral(c_, a, da);
    to_integral(o.c_, b, db);
    std::vector<Integer> prod(2 * d - 1, Integer(0));
    for (int i = 0; i < d; ++i) {
        if (a[i] == 0) continue;
        for (int j = 0; j < d; ++j)
            if (b[j] != 0) prod[i + j] += a[i] * b[j];
    }
    const auto& phi = field_->phi();
    for (int i = 2 * d - 2; i >= d; --i) {
        if (prod[i] == 0) continue;
        Integer f = prod[i];
        int shift = i - d;
        for (int k = 0; k <= d; ++k)
            if (phi[k] != 0) prod[k + shift] -= f * phi[k];
    }
    Integer den = da * db;
    for (int i = 0; i < d; ++i) {
        c_[i] = Rational(prod[i], den);
        c_[i].canonicalize();
    }
    return *this;
}

bool operator==(const CycNum& a, const CycNum& b) {
    a.check_same(b);
    return a.c_ == b.c_;
}

CycNum CycNum::pow(long e) const {
    if (e < 0) return cyclotomic_invert(*this).pow(-e);
    CycNum result(field_, Rational(1));
    CycNum base = *this;
    while (e > 0) {
        if (e & 1) result *= base;
        e >>= 1;
        if (e) base *= base;
    }
    return result;
}

CycNum CycNum::galois(long k) const {
    const long N = field_->N();
    std::vector<Rational> v(N, Rational(0));
    for (size_t i = 0; i < c_.size(); ++i) {
        long e = ((static_cast<long>(i) * k) % N + N) % N;
        v[e] += c_[i];
    }
    return CycNum(field_, std::move(v));
}

CycNum cyclotomic_invert(const CycNum& a) {
    if (a.is_zero()) throw Error(ErrorKind::ZeroInversion, "inverse of zero in Q(zeta_N)");
    const auto& F = a.field();
    QPoly phi;
    for (const auto& x : F.phi()) phi.emplace_back(x);
    // extended Euclid: track s with s*a = r (mod phi)
    QPoly r0 = phi, r1 = a.coeffs();
    trim(r1);
    QPoly s0, s1{Rational(1)};
    while (!(r1.size() == 1)) {
        QPoly q, r;
        poly_divmod(r0, r1, q, r);
        QPoly s2 = poly_sub(s0, poly_mul(q, s1));
        r0 = std::move(r1);
        r1 = std::move(r);
        s0 = std::move(s1);
        s1 = std::move(s2);
        if (r1.empty()) throw Error(ErrorKind::ZeroInversion, "element is not invertible modulo Phi_N");
    }
    Rational inv = 1 / r1[0];
    for (auto& x : s1) x *= inv;
    return CycNum(a.field_ptr(), std::move(s1));
}

}  // namespace mz
