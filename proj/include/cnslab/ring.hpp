#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <complex>
#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

#include "cnslab/errors.hpp"

namespace cnslab {

using BigInt = boost::multiprecision::cpp_int;

/// An imaginary quadratic field K = Q(sqrt(-d)) together with the data of
/// its ring of integers: O_K = Z[w] with w = sqrt(-d) when d != 3 (mod 4)
/// and w = (1 + sqrt(-d))/2 when d == 3 (mod 4).
struct FieldSpec {
    std::int64_t d = 1;       // squarefree positive
    std::int64_t disc = -4;   // -d if d == 3 (mod 4), else -4d
    bool half_basis = false;  // true iff d == 3 (mod 4)
    int omega_k = 2;          // roots of unity in K: 4 if d=1, 6 if d=3, else 2

    // minimal polynomial of w is x^2 - w_trace*x + w_norm
    std::int64_t w_trace = 0; // 1 in the half basis, 0 otherwise
    std::int64_t w_norm = 1;  // (1+d)/4 in the half basis, d otherwise

    friend bool operator==(const FieldSpec&, const FieldSpec&) = default;
};

/// Validates d (positive, squarefree) and fills in the derived data.
FieldSpec make_field(std::int64_t d);

/// An element a + b*w of O_K, coordinates in arbitrary precision.
/// Immutable after construction; all operations are pure.
class QuadInt {
public:
    QuadInt(FieldSpec field, BigInt a, BigInt b)
        : field_(field), a_(std::move(a)), b_(std::move(b)) {}

    static QuadInt from_int(const FieldSpec& field, BigInt n) {
        return QuadInt(field, std::move(n), 0);
    }
    static QuadInt zero(const FieldSpec& field) { return from_int(field, 0); }
    static QuadInt one(const FieldSpec& field) { return from_int(field, 1); }

    const FieldSpec& field() const noexcept { return field_; }
    const BigInt& a() const noexcept { return a_; }
    const BigInt& b() const noexcept { return b_; }
    bool is_zero() const noexcept { return a_ == 0 && b_ == 0; }
    bool is_rational() const noexcept { return b_ == 0; }

    QuadInt operator-() const { return QuadInt(field_, -a_, -b_); }

    QuadInt operator+(const QuadInt& y) const {
        check_field(y);
        return QuadInt(field_, a_ + y.a_, b_ + y.b_);
    }

    QuadInt operator-(const QuadInt& y) const {
        check_field(y);
        return QuadInt(field_, a_ - y.a_, b_ - y.b_);
    }

    // (a1 + b1 w)(a2 + b2 w) with w^2 = w_trace*w - w_norm
    QuadInt operator*(const QuadInt& y) const {
        check_field(y);
        const BigInt cross = b_ * y.b_;
        return QuadInt(field_,
                       a_ * y.a_ - field_.w_norm * cross,
                       a_ * y.b_ + b_ * y.a_ + field_.w_trace * cross);
    }

    QuadInt operator*(const BigInt& s) const {
        return QuadInt(field_, a_ * s, b_ * s);
    }

    friend bool operator==(const QuadInt& x, const QuadInt& y) {
        return x.field_.d == y.field_.d && x.a_ == y.a_ && x.b_ == y.b_;
    }

private:
    void check_field(const QuadInt& y) const {
        if (field_.d != y.field_.d)
            fail(Errc::field_mismatch, "operands lie in different fields");
    }

    FieldSpec field_;
    BigInt a_, b_;
};

/// N(a + b*w) = a^2 + w_trace*a*b + w_norm*b^2; positive definite,
/// multiplicative, zero only at zero.
BigInt norm(const QuadInt& x);

/// Complex conjugation: a + b*w  ->  (a + w_trace*b) - b*w.
QuadInt conj(const QuadInt& x);

/// x + conj(x) as a rational integer.
BigInt trace(const QuadInt& x);

/// Exact quotient q with q*y = x; throws NotDivisible if x/y leaves O_K.
QuadInt exact_div(const QuadInt& x, const QuadInt& y);

/// k-th power by binary exponentiation, pow(x, 0) = 1.
QuadInt pow(const QuadInt& x, std::uint64_t k);

/// Embedding into C with Im(w) > 0.
std::complex<double> embed_complex(const QuadInt& x);

/// |x| = sqrt(N(x)), computed from the exact integer norm.
double modulus(const QuadInt& x);

/// Lattice point (norm, a, b) of an element; a compact carrier for sweeps.
struct LatticePoint {
    std::int64_t norm;
    std::int64_t a;
    std::int64_t b;

    friend auto operator<=>(const LatticePoint&, const LatticePoint&) = default;
};

/// All (norm, a, b) with 0 < norm <= n_max, sorted ascending. Coordinates at
/// desk scale fit int64 comfortably; n_max beyond 10^15 is rejected.
std::vector<LatticePoint> lattice_points(const FieldSpec& field, std::int64_t n_max);

/// All nonzero x with norm(x) <= n_max, each exactly once, ordered by
/// (norm, a, b) ascending.
std::vector<QuadInt> enumerate_by_norm(const FieldSpec& field, std::int64_t n_max);

/// Canonical text form "a+b*w[d]", e.g. "-1+1*w[1]". The parser accepts
/// exactly the printer's grammar.
std::string to_string(const QuadInt& x);
QuadInt parse_quadint(const std::string& text);

std::ostream& operator<<(std::ostream& os, const QuadInt& x);

/// The sweep order on O_K: by (norm, a, b) ascending.
bool norm_lex_less(const QuadInt& x, const QuadInt& y);

} // namespace cnslab
