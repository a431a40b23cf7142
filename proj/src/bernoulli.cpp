#include "multizeta/bernoulli.hpp"

#include <mutex>
#include <vector>

namespace mz {

Rational bernoulli(unsigned n) {
    static std::mutex mu;
    static std::vector<Rational> cache{Rational(1)};
    std::lock_guard<std::mutex> lock(mu);
    // sum_{k=0}^{m} C(m+1,k) B_k = 0  =>  B_m = -(1/(m+1)) sum_{k<m} C(m+1,k) B_k
    while (cache.size() <= n) {
        unsigned m = static_cast<unsigned>(cache.size());
        Rational acc = 0;
        for (unsigned k = 0; k < m; ++k) {
            if (k > 1 && (k & 1u)) continue;  // odd B_k vanish for k >= 3
            acc += Rational(binomial(m + 1, k)) * cache[k];
        }
        Rational bm = -acc / (m + 1);
        cache.push_back(bm);
    }
    return cache[n];
}

}  // namespace mz
