#pragma once

#include <cstdint>
#include <vector>

#include "cnslab/ring.hpp"

namespace cnslab {

/// Absolute logarithmic height of a nonzero quadratic integer:
/// (1/2) log N(gamma). Both conjugates share the modulus sqrt(N), and for a
/// rational integer n this is log|n|, so the general height definition
/// collapses to this form.
double height(const QuadInt& gamma);

/// h(d1*d2) <= h(d1) + h(d2) + 1e-9.
bool check_height_product(const QuadInt& d1, const QuadInt& d2);

struct PolyHeightCheck {
    double bound;        // deg(f) h(delta) + log L(f)
    double value_height; // h(f(delta))
    bool holds;          // value_height <= bound + 1e-9
};

/// Height bound for an integer polynomial evaluated at delta; coefficient i
/// multiplies delta^i. Throws ZeroPolynomial for the zero polynomial and
/// ZeroInput when f(delta) = 0.
PolyHeightCheck poly_height_bound(const std::vector<BigInt>& coeffs, const QuadInt& delta);

/// Inputs of the lower bound for a nonzero linear form in T logarithms over
/// a degree-D field. Each logA entry must dominate max(h, |log|/D, 0.16/D);
/// only the 0.16/D floor is checkable here and it is enforced.
struct MatveevParams {
    int T = 1;
    int D = 1;
    std::vector<double> logA;
    double B = 1.0; // max |k_j|
};

/// -3 * 30^(T+4) * (T+1)^5.5 * D^(T+2) * log(eD) * prod logA_j * log(eTB).
double matveev_bound(const MatveevParams& p);

struct LvdpParams {
    int T = 2;
    int D = 1;
    int omega_k = 2;
    std::vector<double> heights; // h(delta_1), ..., h(delta_T)
    double lambda_d = 1.0;       // the D-only constant, caller-supplied
};

/// Small-relation exponent bounds: entry j is
/// (T-1)! * omega_K * prod_{i != j} (D * heights[i] / lambda_D).
std::vector<double> lvdp_exponent_bound(const LvdpParams& p);

/// log log x / (log log log x + C); requires x > e^e and a positive
/// denominator.
double theorem_bound(double x, double C);

} // namespace cnslab
