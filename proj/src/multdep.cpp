#include "cnslab/multdep.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace cnslab {

namespace {

struct Factorization {
    std::vector<BigInt> primes;        // ascending
    std::vector<std::int64_t> exponents;
};

Factorization factorize(BigInt x, std::uint64_t trial_bound) {
    Factorization f;
    auto record = [&](const BigInt& p, std::int64_t e) {
        f.primes.push_back(p);
        f.exponents.push_back(e);
    };
    std::uint64_t d = 2;
    while (x > 1) {
        if (d > trial_bound || BigInt(d) * d > x) break;
        if (x % d == 0) {
            std::int64_t e = 0;
            do {
                x /= d;
                ++e;
            } while (x % d == 0);
            record(BigInt(d), e);
        }
        d += (d == 2) ? 1 : 2;
    }
    if (x > 1) {
        // No factor <= trial_bound remains, so a cofactor below trial_bound^2
        // is prime; anything larger is uncertified.
        if (x > BigInt(trial_bound) * trial_bound)
            fail(Errc::factorization_incomplete,
                 "cofactor " + x.str() + " has no factor up to " + std::to_string(trial_bound));
        record(x, 1);
    }
    return f;
}

} // namespace

IntDepVerdict int_mult_dep(const BigInt& m, const BigInt& n, std::uint64_t trial_bound) {
    if (m < 2 || n < 2) fail(Errc::domain_error, "int_mult_dep needs m, n >= 2");
    const Factorization fm = factorize(m, trial_bound);
    const Factorization fn = factorize(n, trial_bound);
    if (fm.primes != fn.primes) return {};

    // m^u = n^v needs u*em_i = v*en_i for all i; proportionality is the
    // cross-ratio test against the first component.
    const std::int64_t em0 = fm.exponents[0], en0 = fn.exponents[0];
    for (std::size_t i = 1; i < fm.exponents.size(); ++i)
        if (fm.exponents[i] * en0 != fn.exponents[i] * em0) return {};

    const std::int64_t g = std::gcd(em0, en0);
    return {true, en0 / g, em0 / g};
}

MultDepVerdict mult_dep(const QuadInt& alpha, const QuadInt& beta) {
    if (alpha.field().d != beta.field().d)
        fail(Errc::field_mismatch, "mult_dep operands lie in different fields");
    const BigInt na = norm(alpha), nb = norm(beta);
    if (na < 2 || nb < 2)
        fail(Errc::unit_input, "mult_dep needs both moduli > 1");

    MultDepVerdict verdict;
    const IntDepVerdict norms = int_mult_dep(na, nb);
    if (!norms.dependent) return verdict;

    verdict.uv = {norms.u, norms.v};
    const int w = alpha.field().omega_k;
    const auto uw = static_cast<std::uint64_t>(norms.u) * static_cast<std::uint64_t>(w);
    const auto vw = static_cast<std::uint64_t>(norms.v) * static_cast<std::uint64_t>(w);
    if (pow(alpha, uw) == pow(beta, vw)) {
        verdict.dependent = true;
        verdict.w = w;
    }
    return verdict;
}

std::vector<std::pair<QuadInt, QuadInt>> qi_scan(std::int64_t a_max) {
    if (a_max <= 0) fail(Errc::not_positive, "a_max must be positive");
    const FieldSpec qi = make_field(1);
    std::vector<QuadInt> bases;
    for (std::int64_t a = 1; a <= a_max; ++a) {
        bases.emplace_back(qi, -a, 1);
        bases.emplace_back(qi, -a, -1);
    }
    std::vector<std::pair<QuadInt, QuadInt>> dependent;
    for (std::size_t i = 0; i < bases.size(); ++i)
        for (std::size_t j = i + 1; j < bases.size(); ++j)
            if (mult_dep(bases[i], bases[j]).dependent)
                dependent.emplace_back(bases[i], bases[j]);
    return dependent;
}

std::vector<LebesgueHit> lebesgue_scan(std::int64_t a_max) {
    if (a_max <= 0) fail(Errc::not_positive, "a_max must be positive");
    std::vector<LebesgueHit> hits;
    for (std::int64_t a = 1; a <= a_max; ++a) {
        const std::int64_t value = a * a + 1;
        for (std::int64_t v = 3; (std::int64_t{1} << v) <= value; ++v) {
            const auto seed = static_cast<std::int64_t>(
                std::llround(std::pow(static_cast<double>(value), 1.0 / static_cast<double>(v))));
            for (std::int64_t x = std::max<std::int64_t>(2, seed - 1); x <= seed + 1; ++x) {
                std::int64_t p = 1;
                bool overflow = false;
                for (std::int64_t i = 0; i < v && !overflow; ++i) {
                    if (p > value / x + 1) overflow = true;
                    p *= x;
                }
                if (!overflow && p == value) {
                    hits.push_back({a, x, v});
                    break;
                }
            }
        }
    }
    return hits;
}

} // namespace cnslab
