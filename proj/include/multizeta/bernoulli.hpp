#pragma once

#include "multizeta/rational.hpp"

namespace mz {

// B_n from t/(e^t - 1), so B_1 = -1/2. Grow-only memo, safe to call from several threads.
Rational bernoulli(unsigned n);

}  // namespace mz
