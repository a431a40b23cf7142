#include "multizeta/padic.hpp"

#include "multizeta/errors.hpp"

namespace mz {

u64 Zmod::pow(u64 a, u64 e) const {
    u64 r = 1 % m;
    a %= m;
    while (e) {
        if (e & 1) r = mul(r, a);
        a = mul(a, a);
        e >>= 1;
    }
    return r;
}

u64 Zmod::inv(u64 a) const {
    // extended Euclid on signed 128-bit to stay clear of overflow
    __int128 t = 0, nt = 1, r = m, nr = a % m;
    while (nr != 0) {
        __int128 q = r / nr;
        __int128 tmp = t - q * nt;
        t = nt;
        nt = tmp;
        tmp = r - q * nr;
        r = nr;
        nr = tmp;
    }
    if (r != 1) throw Error(ErrorKind::NonUnit, "element is not invertible modulo " + std::to_string(m));
    if (t < 0) t += m;
    return static_cast<u64>(t);
}

u64 Zmod::from_signed(long long x) const {
    long long r = x % static_cast<long long>(m);
    return r < 0 ? static_cast<u64>(r + static_cast<long long>(m)) : static_cast<u64>(r);
}

u64 Zmod::from_rational(const Rational& q) const {
    Integer mm;
    mpz_set_ui(mm.get_mpz_t(), m);
    Integer num = q.get_num() % mm;
    if (num < 0) num += mm;
    Integer den = q.get_den() % mm;
    u64 n = mpz_get_ui(num.get_mpz_t());
    u64 d = mpz_get_ui(den.get_mpz_t());
    return mul(n, inv(d));
}

u64 upow(u64 p, int e) {
    if (e < 0) throw Error(ErrorKind::InvalidArgument, "negative exponent in p^e");
    u64 r = 1;
    for (int i = 0; i < e; ++i) {
        if (r > (u64(1) << 62) / p) throw Error(ErrorKind::InvalidArgument, "p^M exceeds the 62-bit residue range");
        r *= p;
    }
    return r;
}

bool is_odd_prime(u64 p) {
    if (p < 3 || p % 2 == 0) return false;
    for (u64 d = 3; d * d <= p; d += 2)
        if (p % d == 0) return false;
    return true;
}

PadicInt::PadicInt(u64 p, int precision, u64 residue, int shift) : p_(p), M_(precision), shift_(shift) {
    if (!is_odd_prime(p)) throw Error(ErrorKind::InvalidArgument, "p must be an odd prime");
    if (precision < 0 || shift < 0) throw Error(ErrorKind::InvalidArgument, "precision and shift must be >= 0");
    res_ = residue % upow(p, precision);
    normalize();
}

PadicInt PadicInt::from_integer(long long x, u64 p, int precision) {
    Zmod R(upow(p, precision));
    return PadicInt(p, precision, R.from_signed(x));
}

void PadicInt::normalize() {
    while (shift_ > 0 && M_ > 0 && res_ % p_ == 0) {
        res_ /= p_;
        --shift_;
        --M_;
    }
}

long PadicInt::valuation() const {
    if (res_ == 0) return absolute_precision();
    long v = 0;
    u64 r = res_;
    while (r % p_ == 0) {
        r /= p_;
        ++v;
    }
    return v - shift_;
}

PadicInt PadicInt::operator-() const {
    PadicInt r = *this;
    u64 mod = modulus();
    r.res_ = res_ == 0 ? 0 : mod - res_;
    return r;
}

namespace {
void check_same_prime(const PadicInt& a, const PadicInt& b) {
    if (a.p() != b.p()) throw Error(ErrorKind::InvalidArgument, "p-adic operands have different primes");
}
}  // namespace

PadicInt operator+(const PadicInt& a, const PadicInt& b) {
    check_same_prime(a, b);
    const int v = std::max(a.shift_, b.shift_);
    const int A = std::min(a.absolute_precision(), b.absolute_precision());
    const int M = std::max(A + v, 0);
    Zmod R(upow(a.p_, M));
    u64 ra = R.mul(a.res_ % R.m, upow(a.p_, v - a.shift_) % R.m);
    u64 rb = R.mul(b.res_ % R.m, upow(b.p_, v - b.shift_) % R.m);
    return PadicInt(a.p_, M, R.add(ra, rb), v);
}

PadicInt operator*(const PadicInt& a, const PadicInt& b) {
    check_same_prime(a, b);
    const int M = std::min(a.M_, b.M_);
    Zmod R(upow(a.p_, M));
    return PadicInt(a.p_, M, R.mul(a.res_ % R.m, b.res_ % R.m), a.shift_ + b.shift_);
}

PadicInt PadicInt::inverse() const {
    if (!is_unit()) throw Error(ErrorKind::NonUnit, "inverse of a non-unit");
    Zmod R(modulus());
    return PadicInt(p_, M_, R.inv(res_));
}

PadicInt PadicInt::pow(long e) const {
    if (e < 0) return inverse().pow(-e);
    PadicInt result(p_, M_, 1);
    PadicInt base = *this;
    while (e > 0) {
        if (e & 1) result = result * base;
        e >>= 1;
        if (e) base = base * base;
    }
    return result;
}

PadicInt PadicInt::with_precision(int M) const {
    if (M >= M_) return *this;
    return PadicInt(p_, M, res_, shift_);
}

bool PadicInt::congruent(const PadicInt& o) const { return (*this - o).is_zero(); }

std::string PadicInt::to_string() const {
    std::string s = std::to_string(res_) + " mod " + std::to_string(p_) + "^" + std::to_string(M_);
    if (shift_) s += " * " + std::to_string(p_) + "^-" + std::to_string(shift_);
    return s;
}

u64 teichmuller_residue(u64 a, u64 p, int M) {
    Zmod R(upow(p, M));
    u64 x = a % R.m;
    if (x % p == 0) throw Error(ErrorKind::NonUnit, "Teichmuller lift of a non-unit");
    for (int i = 0; i <= M; ++i) {
        u64 y = R.pow(x, p);
        if (y == x) return x;
        x = y;
    }
    return x;
}

PadicInt teichmuller(const PadicInt& x) {
    if (!x.is_unit()) throw Error(ErrorKind::NonUnit, "Teichmuller character of a non-unit");
    return PadicInt(x.p(), x.precision(), teichmuller_residue(x.residue(), x.p(), x.precision()));
}

PadicInt unit_character(const PadicInt& x, long s, long k) {
    PadicInt w = teichmuller(x);
    PadicInt bracket = x * w.inverse();
    return bracket.pow(-s) * w.pow(k);
}

PadicInt rational_to_padic(const Rational& q, u64 p, int M) {
    if (sgn(q) == 0) return PadicInt(p, M, 0);
    long v = valuation(q, p);
    int shift = 0;
    Rational u = q;
    if (v < 0) {
        shift = static_cast<int>(-v);
        u *= Rational(ipow(Integer(static_cast<unsigned long>(p)), shift));
    }
    Zmod R(upow(p, M));
    return PadicInt(p, M, R.from_rational(u), shift);
}

u64 primitive_root(u64 p) {
    std::vector<u64> factors;
    u64 n = p - 1;
    for (u64 d = 2; d * d <= n; ++d)
        if (n % d == 0) {
            factors.push_back(d);
            while (n % d == 0) n /= d;
        }
    if (n > 1) factors.push_back(n);
    Zmod R(p);
    for (u64 g = 2; g < p; ++g) {
        bool ok = true;
        for (u64 q : factors)
            if (R.pow(g, (p - 1) / q) == 1) ok = false;
        if (ok) return g;
    }
    return 1;  // p = 2 never reaches here (odd primes only)
}

std::vector<u64> nontrivial_roots_of_unity(int c, u64 p, int M) {
    if (c < 2 || (p - 1) % static_cast<u64>(c) != 0)
        throw Error(ErrorKind::UnsupportedC, "c must divide p-1 so that mu_c lies in Z_p");
    Zmod R(upow(p, M));
    u64 g = teichmuller_residue(primitive_root(p), p, M);
    u64 zeta = R.pow(g, (p - 1) / c);
    std::vector<u64> out;
    u64 x = zeta;
    for (int k = 1; k < c; ++k) {
        out.push_back(x);
        x = R.mul(x, zeta);
    }
    return out;
}

}  // namespace mz
