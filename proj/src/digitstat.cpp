#include "cnslab/digitstat.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

#include "cnslab/parallel.hpp"

namespace cnslab {

namespace {

double defect_of(std::int64_t top_exponent, double mod_gamma, const CnsBase& base) {
    return static_cast<double>(top_exponent) -
           std::log(mod_gamma) / std::log(base.mod_alpha());
}

} // namespace

DigitStats stats(const QuadInt& gamma, const CnsBase& base) {
    if (gamma.is_zero()) fail(Errc::zero_input, "stats: gamma = 0");
    const ExpandSummary sum = expand_summary(gamma, base);
    DigitStats out;
    out.Z = sum.nonzero;
    out.S = sum.digit_sum;
    out.L = sum.top_exponent;
    out.defect = defect_of(sum.top_exponent, modulus(gamma), base);
    return out;
}

KpEnvelope kp_empirical_constants(const CnsBase& base, std::int64_t n_max, int threads) {
    const auto pts = lattice_points(base.field(), n_max);
    const int workers = detail::resolve_threads(threads);

    struct Partial {
        double lo = std::numeric_limits<double>::infinity();
        double hi = -std::numeric_limits<double>::infinity();
    };
    std::vector<Partial> parts(static_cast<std::size_t>(workers));

    detail::parallel_chunks(pts.size(), workers, [&](std::size_t c, std::size_t lo, std::size_t hi) {
        Partial& part = parts[c];
        for (std::size_t i = lo; i < hi; ++i) {
            const QuadInt gamma(base.field(), pts[i].a, pts[i].b);
            const ExpandSummary sum = expand_summary(gamma, base);
            const double defect =
                defect_of(sum.top_exponent, std::sqrt(static_cast<double>(pts[i].norm)), base);
            part.lo = std::min(part.lo, defect);
            part.hi = std::max(part.hi, defect);
        }
    });

    KpEnvelope env{std::numeric_limits<double>::infinity(),
                   -std::numeric_limits<double>::infinity()};
    for (const Partial& p : parts) {
        env.e1_hat = std::min(env.e1_hat, p.lo);
        env.e2_hat = std::max(env.e2_hat, p.hi);
    }
    return env;
}

} // namespace cnslab
