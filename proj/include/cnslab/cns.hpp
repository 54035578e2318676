#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "cnslab/ring.hpp"

namespace cnslab {

/// Minimal polynomial x^2 + E x + F of a quadratic integer:
/// E = -trace(alpha), F = norm(alpha). Throws NotQuadratic for rational input.
std::pair<BigInt, BigInt> minimal_poly(const QuadInt& alpha);

struct CnsCheck {
    bool criterion_ok = false; // alpha quadratic, F >= 2 and -1 <= E <= F
    bool ring_match = false;   // E^2 - 4F equals the field discriminant
};

/// Evaluates the base criterion and the ring-match test; never throws on
/// rational alpha (both flags come back false).
CnsCheck is_cns(const QuadInt& alpha);

/// A base alpha for radix expansion with digit set {0, ..., F-1}.
/// Instances from make_base satisfy the full criterion and Z[alpha] = O_K;
/// make_base_unchecked skips validation so that non-bases can be probed by
/// the same digit machinery (brute-force criterion experiments).
class CnsBase {
public:
    const QuadInt& alpha() const noexcept { return alpha_; }
    const FieldSpec& field() const noexcept { return alpha_.field(); }
    std::int64_t E() const noexcept { return E_; }
    std::int64_t F() const noexcept { return F_; }
    std::int64_t digit_max() const noexcept { return F_ - 1; }
    std::int64_t eps_a() const noexcept { return F_ - 1; }
    double mod_alpha() const noexcept { return mod_alpha_; }
    bool validated() const noexcept { return validated_; }

private:
    friend CnsBase make_base(const QuadInt& alpha);
    friend CnsBase make_base_unchecked(const QuadInt& alpha);

    CnsBase(QuadInt alpha, std::int64_t E, std::int64_t F, bool validated);

    QuadInt alpha_;
    std::int64_t E_;
    std::int64_t F_;
    double mod_alpha_;
    bool validated_;
};

/// Validated constructor: throws NotCns when the criterion fails and
/// RingMismatch when E^2 - 4F differs from the field discriminant.
CnsBase make_base(const QuadInt& alpha);

/// Probing constructor: only requires alpha quadratic with F >= 2.
CnsBase make_base_unchecked(const QuadInt& alpha);

struct DigitStep {
    std::int64_t digit;
    QuadInt quotient;
};

/// The unique digit eps in {0,...,F-1} with alpha | (gamma - eps), plus the
/// quotient; gamma = digit + alpha * quotient exactly. Scans all F digits:
/// zero hits raises NoDigit, several raise AmbiguousDigit (impossible for a
/// validated base).
DigitStep digit_step(const QuadInt& gamma, const CnsBase& base);

/// All digits passing the divisibility test at gamma (full scan); size 1
/// exactly when the digit set is a complete residue system at gamma.
std::vector<std::int64_t> digit_candidates(const QuadInt& gamma, const CnsBase& base);

/// Finite expansion gamma = sum digits[i] * alpha^i.
struct DigitString {
    CnsBase base;
    std::vector<std::int64_t> digits; // index = exponent; top digit nonzero unless L = 0

    std::int64_t length() const noexcept {
        return static_cast<std::int64_t>(digits.size()) - 1;
    }
};

/// Iterated digit_step until the quotient vanishes; expand(0) = [0].
/// Throws NonTerminating when the step count exceeds the logarithmic guard
/// (signals an invalid base slipped through).
DigitString expand(const QuadInt& gamma, const CnsBase& base);

/// Exact Horner evaluation of a digit string; digits are range-checked.
QuadInt evaluate(const DigitString& ds);

/// Allocation-free expansion statistics for sweep loops.
struct ExpandSummary {
    std::int64_t nonzero = 0; // Z
    std::int64_t digit_sum = 0; // S
    std::int64_t top_exponent = 0; // L
};
ExpandSummary expand_summary(const QuadInt& gamma, const CnsBase& base);

struct ExhaustiveReport {
    std::int64_t count = 0; // elements checked, including gamma = 0
    bool all_roundtrip = true;
    std::int64_t max_length = 0;
};

/// Expands every gamma with norm(gamma) <= n_max (plus zero), re-evaluates
/// each expansion exactly and checks digit range and the leading digit.
/// The report does not depend on the worker count.
ExhaustiveReport verify_exhaustive(const CnsBase& base, std::int64_t n_max, int threads = 0);

/// All validated CNS bases u + v*i in Q(i) with |u|, |v| <= a_max, sorted by
/// (norm, a, b) of the base.
std::vector<CnsBase> katai_szabo_scan(std::int64_t a_max);

/// JSON wire form {"base":"<text>","d":<int>,"digits":[eps_0,...,eps_L]}.
std::string digitstring_to_json(const DigitString& ds);
DigitString digitstring_from_json(const std::string& text);

/// Human-readable display, most significant digit first: "(e_L ... e_0)_alpha".
std::string digitstring_display(const DigitString& ds);

} // namespace cnslab
