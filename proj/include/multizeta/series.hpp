#pragma once

#include <map>
#include <vector>

#include "multizeta/errors.hpp"
#include "multizeta/rational.hpp"

namespace mz {

using Exponents = std::vector<int>;

// Sparse multivariate (Laurent) polynomial; the one product engine shared by the series code and
// the G-polynomial expansion, which needs negative exponents.
template <class S>
class SparsePoly {
public:
    SparsePoly() = default;
    explicit SparsePoly(int nvars) : nvars_(nvars) {}

    int nvars() const { return nvars_; }
    const std::map<Exponents, S>& terms() const { return terms_; }

    void add(const Exponents& e, const S& v) {
        auto it = terms_.find(e);
        if (it == terms_.end()) {
            if (!is_zero(v)) terms_.emplace(e, v);
            return;
        }
        it->second += v;
        if (is_zero(it->second)) terms_.erase(it);
    }

    S coeff(const Exponents& e, const S& zero) const {
        auto it = terms_.find(e);
        return it == terms_.end() ? zero : it->second;
    }

    // keep(e) decides which product exponents survive (truncation hook)
    template <class Keep>
    SparsePoly mul(const SparsePoly& o, Keep keep) const {
        SparsePoly out(nvars_);
        Exponents e(nvars_);
        for (const auto& [ea, va] : terms_)
            for (const auto& [eb, vb] : o.terms_) {
                for (int i = 0; i < nvars_; ++i) e[i] = ea[i] + eb[i];
                if (!keep(e)) continue;
                out.add(e, va * vb);
            }
        return out;
    }

    SparsePoly operator*(const SparsePoly& o) const {
        return mul(o, [](const Exponents&) { return true; });
    }

    SparsePoly& operator+=(const SparsePoly& o) {
        for (const auto& [e, v] : o.terms_) add(e, v);
        return *this;
    }

private:
    int nvars_ = 0;
    std::map<Exponents, S> terms_;
};

// Power series in t_1..t_r truncated at per-variable caps.
template <class S>
class TruncSeries {
public:
    TruncSeries(std::vector<int> caps, S zero) : caps_(std::move(caps)), zero_(std::move(zero)), poly_(caps_.size()) {}

    static TruncSeries constant(std::vector<int> caps, const S& zero, const S& value) {
        TruncSeries s(std::move(caps), zero);
        s.add(Exponents(s.nvars(), 0), value);
        return s;
    }

    int nvars() const { return static_cast<int>(caps_.size()); }
    const std::vector<int>& caps() const { return caps_; }
    const std::map<Exponents, S>& coeffs() const { return poly_.terms(); }
    const S& zero() const { return zero_; }

    bool within_caps(const Exponents& e) const {
        for (size_t i = 0; i < caps_.size(); ++i)
            if (e[i] < 0 || e[i] > caps_[i]) return false;
        return true;
    }

    void add(const Exponents& e, const S& v) {
        if (within_caps(e)) poly_.add(e, v);
    }

    S coeff(const Exponents& e) const { return poly_.coeff(e, zero_); }

    TruncSeries operator*(const TruncSeries& o) const { return series_mul(*this, o); }

    TruncSeries& operator+=(const TruncSeries& o) {
        if (o.caps_ != caps_) throw Error(ErrorKind::CapMismatch, "series caps differ");
        poly_ += o.poly_;
        return *this;
    }

    template <class T>
    friend TruncSeries<T> series_mul(const TruncSeries<T>& a, const TruncSeries<T>& b);

private:
    std::vector<int> caps_;
    S zero_;
    SparsePoly<S> poly_;
};

template <class S>
TruncSeries<S> series_mul(const TruncSeries<S>& a, const TruncSeries<S>& b) {
    if (a.caps_ != b.caps_) throw Error(ErrorKind::CapMismatch, "series caps differ");
    TruncSeries<S> out(a.caps_, a.zero_);
    const auto& caps = a.caps_;
    out.poly_ = a.poly_.mul(b.poly_, [&](const Exponents& e) {
        for (size_t i = 0; i < caps.size(); ++i)
            if (e[i] > caps[i]) return false;
        return true;
    });
    return out;
}

// Sum_m f[m] * (gamma * (t_j + ... + t_r))^m expanded multinomially inside the caps (j is 0-based).
template <class S>
TruncSeries<S> substitute_tail_sum(const std::vector<S>& f, const Rational& gamma, int j,
                                   const std::vector<int>& caps, const S& zero) {
    const int r = static_cast<int>(caps.size());
    TruncSeries<S> out(caps, zero);
    Exponents e(r, 0);
    // enumerate exponents on t_j..t_r within caps
    std::vector<Rational> gpow{Rational(1)};
    auto rec = [&](auto&& self, int idx, int total, Rational weight /* 1/prod e! */) -> void {
        if (idx == r) {
            if (total >= static_cast<int>(f.size()) || is_zero(f[total])) return;
            while (static_cast<int>(gpow.size()) <= total) gpow.push_back(gpow.back() * gamma);
            Rational w = weight * Rational(factorial(total)) * gpow[total];
            S term = f[total];
            term *= w;
            out.add(e, term);
            return;
        }
        for (int k = 0; k <= caps[idx]; ++k) {
            e[idx] = k;
            self(self, idx + 1, total + k, weight / Rational(factorial(k)));
        }
        e[idx] = 0;
    };
    rec(rec, j, 0, Rational(1));
    return out;
}

// Univariate power-series quotient a/b to `order` terms (b[0] invertible).
std::vector<Rational> series_divide(const std::vector<Rational>& a, const std::vector<Rational>& b, int order);

}  // namespace mz
