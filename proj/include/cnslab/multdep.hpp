#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "cnslab/ring.hpp"

namespace cnslab {

struct IntDepVerdict {
    bool dependent = false;
    std::int64_t u = 0; // minimal positive pair with m^u = n^v, valid iff dependent
    std::int64_t v = 0;
};

/// Multiplicative dependence of rational integers m, n >= 2: identical prime
/// support with proportional exponent vectors. Factorization is trial
/// division up to `trial_bound` (default 2^32); a surviving cofactor that
/// cannot be certified prime raises FactorizationIncomplete.
IntDepVerdict int_mult_dep(const BigInt& m, const BigInt& n,
                           std::uint64_t trial_bound = (std::uint64_t{1} << 32));

struct MultDepVerdict {
    bool dependent = false;
    // minimal norm-exponents, present iff the norms are dependent
    std::optional<std::pair<std::int64_t, std::int64_t>> uv;
    // root-of-unity absorption factor, present iff dependent
    std::optional<int> w;
};

/// Exact multiplicative-dependence decision for quadratic integers with
/// norm >= 2: a norm obstruction first, then one exact power comparison
/// alpha^(u*w) == beta^(v*w) with w = omega(K). Any true relation forces the
/// norm exponents to be a multiple of the minimal (u, v), so alpha^u/beta^v
/// is a root of unity of K and w absorbs it.
MultDepVerdict mult_dep(const QuadInt& alpha, const QuadInt& beta);

/// Tests every unordered pair of CNS bases -a+-i, 1 <= a <= a_max, in Q(i);
/// returns the dependent pairs.
std::vector<std::pair<QuadInt, QuadInt>> qi_scan(std::int64_t a_max);

struct LebesgueHit {
    std::int64_t a;
    std::int64_t x;
    std::int64_t v; // a^2 + 1 = x^v with x >= 2, v >= 3
};

/// Brute-force scan for perfect-power values of a^2 + 1; expected empty.
std::vector<LebesgueHit> lebesgue_scan(std::int64_t a_max);

} // namespace cnslab
