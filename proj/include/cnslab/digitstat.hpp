#pragma once

#include <cstdint>

#include "cnslab/cns.hpp"

namespace cnslab {

/// Digit statistics of one expansion. The defect L - log|gamma|/log|alpha|
/// is the quantity whose boundedness over O_K is the length theorem; its
/// extremes over a sweep stand in for the theorem's constants.
struct DigitStats {
    std::int64_t Z = 0; // nonzero digits
    std::int64_t S = 0; // digit sum
    std::int64_t L = 0; // top exponent
    double defect = 0.0;
};

DigitStats stats(const QuadInt& gamma, const CnsBase& base);

struct KpEnvelope {
    double e1_hat; // min defect over the sweep
    double e2_hat; // max defect
};

/// Defect envelope over all gamma with 0 < norm(gamma) <= n_max. min/max
/// aggregation is order-insensitive, so the result does not depend on the
/// worker count.
KpEnvelope kp_empirical_constants(const CnsBase& base, std::int64_t n_max, int threads = 0);

} // namespace cnslab
