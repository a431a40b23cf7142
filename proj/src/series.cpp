#include "multizeta/series.hpp"

namespace mz {

std::vector<Rational> series_divide(const std::vector<Rational>& a, const std::vector<Rational>& b, int order) {
    if (b.empty() || sgn(b[0]) == 0) throw Error(ErrorKind::ZeroInversion, "series divisor has zero constant term");
    std::vector<Rational> q(order, Rational(0));
    const Rational inv0 = 1 / b[0];
    for (int n = 0; n < order; ++n) {
        Rational acc = n < static_cast<int>(a.size()) ? a[n] : Rational(0);
        for (int k = 1; k <= n && k < static_cast<int>(b.size()); ++k) acc -= b[k] * q[n - k];
        q[n] = acc * inv0;
    }
    return q;
}

}  // namespace mz
