#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "cnslab/bounds.hpp"
#include "test_util.hpp"

using namespace cnslab;
using testutil::qi;

namespace {

constexpr double kE = 2.718281828459045;

// Same formulas assembled in log space; an independent expression tree.
double matveev_ref(const MatveevParams& p) {
    const double T = p.T, D = p.D;
    double lg = std::log(3.0) + (T + 4.0) * std::log(30.0) + 5.5 * std::log(T + 1.0) +
                (T + 2.0) * std::log(D) + std::log(std::log(kE * D)) +
                std::log(std::log(kE * T * p.B));
    for (const double a : p.logA) lg += std::log(a);
    return -std::exp(lg);
}

std::vector<double> lvdp_ref(const LvdpParams& p) {
    std::vector<double> out(static_cast<std::size_t>(p.T));
    for (int j = 0; j < p.T; ++j) {
        double lg = std::lgamma(static_cast<double>(p.T)) + std::log(static_cast<double>(p.omega_k));
        for (int i = 0; i < p.T; ++i)
            if (i != j) lg += std::log(static_cast<double>(p.D) * p.heights[i] / p.lambda_d);
        out[static_cast<std::size_t>(j)] = std::exp(lg);
    }
    return out;
}

} // namespace

TEST_CASE("height examples") {
    CHECK(height(qi(1, 0)) == 0.0);
    CHECK(height(qi(3, 0)) == doctest::Approx(std::log(3.0)).epsilon(1e-15));
    CHECK(height(qi(-1, 1)) == doctest::Approx(0.5 * std::log(2.0)).epsilon(1e-15));
    CHECK_ERRC(height(qi(0, 0)), Errc::zero_input);
}

TEST_CASE("height properties over random elements") {
    std::mt19937_64 rng(2024);
    for (const std::int64_t d : {1, 2, 3}) {
        const FieldSpec f = make_field(d);
        for (int i = 0; i < 1000; ++i) {
            const QuadInt x = testutil::random_nonzero(rng, f, 100);
            const QuadInt y = testutil::random_nonzero(rng, f, 100);
            CHECK(check_height_product(x, y));
            CHECK(height(x) == height(conj(x)));
            for (std::uint64_t k = 1; k <= 10; ++k)
                CHECK(height(pow(x, k)) ==
                      doctest::Approx(static_cast<double>(k) * height(x)).epsilon(1e-9));
        }
    }
    // h(2) = h(-1+i) + h(-1-i) with equality
    CHECK(height(qi(2, 0)) ==
          doctest::Approx(height(qi(-1, 1)) + height(qi(-1, -1))).epsilon(1e-12));
    CHECK(check_height_product(qi(-1, 1), qi(-1, -1)));
    CHECK(check_height_product(qi(7, -5), qi(1, 0)));
}

TEST_CASE("poly_height_bound examples") {
    // identity polynomial: equality
    const PolyHeightCheck ident = poly_height_bound({0, 1}, qi(-2, 1));
    CHECK(ident.holds);
    CHECK(ident.bound == doctest::Approx(height(qi(-2, 1))).epsilon(1e-12));
    CHECK(ident.value_height == doctest::Approx(ident.bound).epsilon(1e-12));

    // f = x + 1 at -1+i gives i, height 0
    const PolyHeightCheck shift = poly_height_bound({1, 1}, qi(-1, 1));
    CHECK(shift.holds);
    CHECK(shift.value_height == 0.0);
    CHECK(shift.bound == doctest::Approx(height(qi(-1, 1)) + std::log(2.0)).epsilon(1e-12));

    const PolyHeightCheck affine = poly_height_bound({2, 3}, qi(-2, 1));
    CHECK(affine.holds);

    CHECK_ERRC(poly_height_bound({}, qi(-1, 1)), Errc::zero_polynomial);
    CHECK_ERRC(poly_height_bound({0, 0, 0}, qi(-1, 1)), Errc::zero_polynomial);
    // minimal polynomial of -1+i vanishes there
    CHECK_ERRC(poly_height_bound({2, 2, 1}, qi(-1, 1)), Errc::zero_input);
}

TEST_CASE("poly_height_bound holds for random polynomials") {
    std::mt19937_64 rng(99);
    std::uniform_int_distribution<std::int64_t> coeff(-5, 5);
    std::uniform_int_distribution<int> deg(0, 4);
    const FieldSpec f = make_field(1);
    int checked = 0;
    while (checked < 1000) {
        std::vector<BigInt> coeffs(static_cast<std::size_t>(deg(rng)) + 1);
        for (auto& c : coeffs) c = coeff(rng);
        const QuadInt delta = testutil::random_nonzero(rng, f, 100);
        try {
            const PolyHeightCheck check = poly_height_bound(coeffs, delta);
            CHECK(check.holds);
            ++checked;
        } catch (const Error&) {
            // zero polynomial or f(delta) = 0; resample
        }
    }
}

TEST_CASE("matveev_bound matches an independent expression on a grid") {
    int points = 0;
    for (int T = 1; T <= 5; ++T) {
        for (int D = 1; D <= 4; ++D) {
            for (const double a : {0.16, 0.5, 1.0, 2.5, 7.0}) {
                if (a < 0.16 / D) continue;
                MatveevParams p;
                p.T = T;
                p.D = D;
                p.logA.assign(static_cast<std::size_t>(T), a);
                p.B = 1.0 + 3.0 * T;
                ++points;
                CHECK(matveev_bound(p) == doctest::Approx(matveev_ref(p)).epsilon(1e-12));
            }
        }
    }
    CHECK(points >= 100);
}

TEST_CASE("matveev_bound structure: scaling and monotonicity") {
    MatveevParams p;
    p.T = 3;
    p.D = 2;
    p.logA = {1.0, 1.0, 1.0};
    p.B = kE;
    const double base = matveev_bound(p);
    CHECK(base == doctest::Approx(matveev_ref(p)).epsilon(1e-12));
    // closed form at T=3, D=2, unit logA: -3 * 30^7 * 4^5.5 * 2^5 * log(2e) * log(3eB)
    const double closed = -3.0 * std::pow(30.0, 7.0) * std::pow(4.0, 5.5) * 32.0 *
                          std::log(2.0 * kE) * std::log(3.0 * kE * p.B);
    CHECK(base == doctest::Approx(closed).epsilon(1e-12));

    // doubling B multiplies the value by log(2eTB)/log(eTB)
    MatveevParams p2 = p;
    p2.B = 2.0 * p.B;
    const double ratio = std::log(kE * p.T * p2.B) / std::log(kE * p.T * p.B);
    CHECK(matveev_bound(p2) == doctest::Approx(base * ratio).epsilon(1e-12));
    CHECK(matveev_bound(p2) < base);

    // scaling one logA entry scales the value linearly
    MatveevParams p3 = p;
    p3.logA[1] = 2.5;
    CHECK(matveev_bound(p3) == doctest::Approx(base * 2.5).epsilon(1e-12));
    CHECK(matveev_bound(p3) < base);

    // strictly decreasing in T, D, B on a sampled grid
    for (int T = 1; T <= 4; ++T) {
        MatveevParams lo;
        lo.T = T;
        lo.D = 2;
        lo.logA.assign(static_cast<std::size_t>(T), 0.5);
        lo.B = 10.0;
        MatveevParams hi = lo;
        hi.T = T + 1;
        hi.logA.assign(static_cast<std::size_t>(T) + 1, 0.5);
        CHECK(matveev_bound(hi) < matveev_bound(lo));

        MatveevParams hd = lo;
        hd.D = 3;
        CHECK(matveev_bound(hd) < matveev_bound(lo));

        MatveevParams hb = lo;
        hb.B = 20.0;
        CHECK(matveev_bound(hb) < matveev_bound(lo));
    }

    MatveevParams bad = p;
    bad.logA = {1.0, 0.05, 1.0}; // below 0.16/D
    CHECK_ERRC(matveev_bound(bad), Errc::domain_error);
    bad = p;
    bad.B = 0.5;
    CHECK_ERRC(matveev_bound(bad), Errc::domain_error);
    bad = p;
    bad.logA = {1.0, 1.0};
    CHECK_ERRC(matveev_bound(bad), Errc::domain_error);
}

TEST_CASE("lvdp_exponent_bound examples and reference") {
    // T = 2, equal heights h, D = 2, omega = 2, lambda = 1: each entry 4h
    for (const double h : {0.3, 1.0, 2.5}) {
        LvdpParams p{2, 2, 2, {h, h}, 1.0};
        const auto bounds = lvdp_exponent_bound(p);
        REQUIRE(bounds.size() == 2);
        CHECK(bounds[0] == doctest::Approx(4.0 * h).epsilon(1e-12));
        CHECK(bounds[1] == doctest::Approx(4.0 * h).epsilon(1e-12));
    }

    // a zero height kills every other bound
    const auto degenerate = lvdp_exponent_bound({3, 2, 4, {0.0, 1.0, 2.0}, 0.5});
    CHECK(degenerate[1] == 0.0);
    CHECK(degenerate[2] == 0.0);
    CHECK(degenerate[0] > 0.0);

    // the T = 3, D = 2 shape, against the log-space reference
    int points = 0;
    for (const double h1 : {0.2, 0.7, 1.9}) {
        for (const double h2 : {0.4, 1.3}) {
            for (const double h3 : {0.9, 2.2}) {
                for (const double lambda : {0.25, 1.0, 3.0}) {
                    for (const int omega : {2, 4, 6}) {
                        LvdpParams p{3, 2, omega, {h1, h2, h3}, lambda};
                        const auto got = lvdp_exponent_bound(p);
                        const auto want = lvdp_ref(p);
                        for (std::size_t j = 0; j < 3; ++j)
                            CHECK(got[j] == doctest::Approx(want[j]).epsilon(1e-12));
                        ++points;
                    }
                }
            }
        }
    }
    CHECK(points >= 100);

    CHECK_ERRC(lvdp_exponent_bound({1, 2, 2, {1.0}, 1.0}), Errc::domain_error);
    CHECK_ERRC(lvdp_exponent_bound({2, 2, 2, {1.0, 1.0}, 0.0}), Errc::domain_error);
    CHECK_ERRC(lvdp_exponent_bound({2, 2, 2, {1.0}, 1.0}), Errc::domain_error);
}

TEST_CASE("theorem_bound evaluation and domain") {
    // log log x = e and log log log x = 1 at x = e^(e^e)
    const double x_tower = std::exp(std::exp(kE));
    CHECK(theorem_bound(x_tower, 0.0) == doctest::Approx(kE).epsilon(1e-12));

    // strictly decreasing in C
    const double at0 = theorem_bound(1e6, 0.0);
    const double at1 = theorem_bound(1e6, 1.0);
    CHECK(at0 > at1);
    CHECK(at1 > theorem_bound(1e6, 2.0));

    // e^e ~ 15.154: 15 is out of domain, 16 is just inside
    CHECK_ERRC(theorem_bound(15.0, 0.0), Errc::domain_error);
    CHECK(theorem_bound(16.0, 0.0) > 0.0);
    CHECK_ERRC(theorem_bound(16.0, -1.0), Errc::domain_error);

    // strictly increasing in x above e^(e^e) for C >= 0
    for (const double C : {0.0, 0.5, 2.0}) {
        double prev = theorem_bound(x_tower + 1.0, C);
        for (double x = x_tower * 2.0; x < x_tower * 1e6; x *= 7.0) {
            const double cur = theorem_bound(x, C);
            CHECK(cur > prev);
            prev = cur;
        }
    }
}
