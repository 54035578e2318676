#include "cnslab/bounds.hpp"

#include <cmath>

namespace cnslab {

double height(const QuadInt& gamma) {
    if (gamma.is_zero()) fail(Errc::zero_input, "height of 0 is undefined");
    return 0.5 * std::log(norm(gamma).convert_to<double>());
}

bool check_height_product(const QuadInt& d1, const QuadInt& d2) {
    return height(d1 * d2) <= height(d1) + height(d2) + 1e-9;
}

PolyHeightCheck poly_height_bound(const std::vector<BigInt>& coeffs, const QuadInt& delta) {
    std::size_t deg = coeffs.size();
    while (deg > 0 && coeffs[deg - 1] == 0) --deg;
    if (deg == 0) fail(Errc::zero_polynomial, "poly_height_bound: zero polynomial");

    BigInt length = 0;
    for (const BigInt& c : coeffs) length += abs(c);

    QuadInt value = QuadInt::zero(delta.field());
    for (std::size_t i = deg; i-- > 0;)
        value = value * delta + QuadInt::from_int(delta.field(), coeffs[i]);
    if (value.is_zero()) fail(Errc::zero_input, "f(delta) = 0 has no height");

    PolyHeightCheck out;
    out.bound = static_cast<double>(deg - 1) * height(delta) +
                std::log(length.convert_to<double>());
    out.value_height = height(value);
    out.holds = out.value_height <= out.bound + 1e-9;
    return out;
}

double matveev_bound(const MatveevParams& p) {
    if (p.T < 1 || p.D < 1) fail(Errc::domain_error, "matveev_bound: T, D must be positive");
    if (static_cast<int>(p.logA.size()) != p.T)
        fail(Errc::domain_error, "matveev_bound: need exactly T logA entries");
    if (p.B < 1.0) fail(Errc::domain_error, "matveev_bound: B must be >= 1");
    const double floor = 0.16 / static_cast<double>(p.D);
    for (const double a : p.logA)
        if (a < floor) fail(Errc::domain_error, "matveev_bound: logA entry below 0.16/D");

    const double T = p.T, D = p.D;
    double value = -3.0 * std::pow(30.0, T + 4.0) * std::pow(T + 1.0, 5.5) *
                   std::pow(D, T + 2.0) * std::log(std::exp(1.0) * D);
    for (const double a : p.logA) value *= a;
    value *= std::log(std::exp(1.0) * T * p.B);
    return value;
}

std::vector<double> lvdp_exponent_bound(const LvdpParams& p) {
    if (p.T < 2) fail(Errc::domain_error, "lvdp_exponent_bound: T must be >= 2");
    if (p.D < 1 || p.omega_k < 1)
        fail(Errc::domain_error, "lvdp_exponent_bound: D and omega_K must be positive");
    if (static_cast<int>(p.heights.size()) != p.T)
        fail(Errc::domain_error, "lvdp_exponent_bound: need exactly T heights");
    if (!(p.lambda_d > 0.0)) fail(Errc::domain_error, "lvdp_exponent_bound: lambda_D must be > 0");
    for (const double h : p.heights)
        if (h < 0.0) fail(Errc::domain_error, "lvdp_exponent_bound: heights must be nonnegative");

    double factorial = 1.0;
    for (int i = 2; i < p.T; ++i) factorial *= i;
    const double prefix = factorial * static_cast<double>(p.omega_k);

    std::vector<double> bounds(static_cast<std::size_t>(p.T));
    for (int j = 0; j < p.T; ++j) {
        double prod = prefix;
        for (int i = 0; i < p.T; ++i)
            if (i != j) prod *= static_cast<double>(p.D) * p.heights[i] / p.lambda_d;
        bounds[static_cast<std::size_t>(j)] = prod;
    }
    return bounds;
}

double theorem_bound(double x, double C) {
    const double ee = std::exp(std::exp(1.0));
    if (!(x > ee))
        fail(Errc::domain_error, "theorem_bound needs x > e^e = " + std::to_string(ee));
    const double denom = std::log(std::log(std::log(x))) + C;
    if (!(denom > 0.0))
        fail(Errc::domain_error, "theorem_bound: log log log x + C must be positive");
    return std::log(std::log(x)) / denom;
}

} // namespace cnslab
