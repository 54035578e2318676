#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "cnslab/cns.hpp"
#include "cnslab/digitstat.hpp"

namespace cnslab {

/// Empirical stand-ins for the length-theorem constants of one base,
/// produced by kp_empirical_constants.
struct KpConstants {
    double e1_hat = 0.0;
    double e2_hat = 0.0;
};

/// Splitting of (alpha-1)*gamma at the p-th nonzero digit:
/// (alpha-1)*gamma = A1*alpha^m_p + A2 exactly, where A1 collects the top p
/// nonzero terms shifted down by m_p and A2 the remaining tail (zero when
/// p = r).
struct Split {
    QuadInt A1;
    QuadInt A2;
    std::int64_t m_p;
};

Split split(const QuadInt& gamma, const CnsBase& base, std::int64_t p);

/// Exact cross-base identity
/// (beta-1)*(A1*alpha^m_p + A2) == (alpha-1)*(B1*beta^l_q + B2),
/// both sides equal to (alpha-1)(beta-1)*gamma.
bool verify_split_identity(const QuadInt& gamma, const CnsBase& baseA, const CnsBase& baseB,
                           std::int64_t p, std::int64_t q);

/// eps_a * |alpha(alpha-1)| / (|alpha| - 1)
double split_c3(const CnsBase& base);
/// |alpha|^(-e2)
double split_c4(const CnsBase& base, double e2_hat);

enum class CaseKind { AllIntervalsHit, GapFound };

struct CaseReport {
    double theta = 0.0;  // c1 * log log |gamma|
    std::int64_t k = 0;  // theta^k <= (log|gamma|/log|alpha| + e1)/2 < theta^(k+1)
    CaseKind kind = CaseKind::AllIntervalsHit;
    std::int64_t s = 0;  // gap interval index, valid iff GapFound
    std::int64_t p = 0;  // m_1 - m_p <= theta^(s-1) < theta^s <= m_1 - m_(p+1)
    std::int64_t q = 0;  // the l-analogue
};

/// Scans the intervals (theta^(s-1), theta^s], s = 1..k, for one containing
/// no exponent gap m_1-m_i or l_1-l_j; reports the first such s with its
/// split indices, or AllIntervalsHit. Requires |gamma| > 16 and c1 > 1.
/// k = 0 (possible for small |gamma| relative to the base) leaves nothing
/// to scan and reports AllIntervalsHit vacuously.
CaseReport case_split(const QuadInt& gamma, const CnsBase& baseA, const CnsBase& baseB,
                      double c1, const KpConstants& kpA);

struct LambdaCheck {
    double lambda_abs = 0.0;
    double rhs = 0.0;
    bool holds = false;
    bool degenerate = false; // Lambda = 0 exactly (the case feeding mult_dep)
};

/// |Lambda| for Lambda = (beta-1)A1 alpha^m_p / ((alpha-1)B1 beta^l_q) - 1,
/// from exact integer quantities, against the gap-case upper bound
/// (c3 d3 / (|(alpha-1)(beta-1)| c4 d4) + c3 / (|alpha-1| c4)) |beta|^(-theta^s)
/// with the empirical e2 in c4, d4. The chain is derived with
/// |alpha| >= |beta|; that ordering is required here.
LambdaCheck lambda_and_bound_check(const QuadInt& gamma, const CnsBase& baseA,
                                   const CnsBase& baseB, const CaseReport& report,
                                   const KpConstants& kpA, const KpConstants& kpB,
                                   double slack = 2.0);

struct BBoundCheck {
    double b_value = 0.0; // max(m_p, l_q)
    double b_bound = 0.0; // (1/log|beta| + max(e2)/log 16) log|gamma|
    bool holds = false;   // b_value <= b_bound + slack
};

/// The exponent-size bound feeding Matveev's B parameter, checked on a
/// GapFound report.
BBoundCheck lfl_b_check(const QuadInt& gamma, const CnsBase& baseA, const CnsBase& baseB,
                        const CaseReport& report, const KpConstants& kpA,
                        const KpConstants& kpB, double slack = 1.0);

/// One row of the two-base digit-statistics sweep.
struct SweepRecord {
    std::int32_t a = 0;
    std::int32_t b = 0;
    std::int64_t norm = 0;
    double abs = 0.0;
    std::int32_t Za = 0, Sa = 0, La = 0;
    std::int32_t Zb = 0, Sb = 0, Lb = 0;
    std::int32_t lhs = 0;     // Za + Zb
    double bound_c0 = 0.0;    // theorem_bound(abs, 0); NaN when abs <= e^e
};

/// One record per gamma with 0 < norm <= n_max, ordered by (norm, a, b).
/// The bases must be multiplicatively independent (DependentBases otherwise).
/// Output is identical for every worker count.
std::vector<SweepRecord> sweep(const FieldSpec& field, const CnsBase& baseA,
                               const CnsBase& baseB, std::int64_t n_max, int threads = 0);

struct EmpiricalCReport {
    double c_emp = 0.0;
    std::optional<std::size_t> argmax; // index into the record vector
};

/// Smallest C >= 0 with Za+Zb >= loglog|gamma|/(logloglog|gamma| + C) across
/// all records with |gamma| > 16; the bound is re-asserted record by record
/// before returning.
EmpiricalCReport empirical_C(const std::vector<SweepRecord>& records);

/// Exact single-digit check for a dependent pair alpha^u = beta^v: every
/// alpha^(u m), m = 1..m_max, must expand with exactly one nonzero digit,
/// equal to 1, at exponent u*m (alpha) resp. v*m (beta).
bool dependent_counterexample_check(const QuadInt& alpha, const QuadInt& beta,
                                    std::int64_t u, std::int64_t v, std::int64_t m_max);

/// CSV: header a,b,norm,abs,Za,Sa,La,Zb,Sb,Lb,lhs,bound_C0; reals with nine
/// significant digits; byte-identical across runs.
void write_sweep_csv(std::ostream& os, const std::vector<SweepRecord>& records);

/// {"C_emp":...,"n_max":...,"argmax_gamma":"a+b*w[d]"}
std::string empirical_c_json(const EmpiricalCReport& report,
                             const std::vector<SweepRecord>& records, const FieldSpec& field,
                             std::int64_t n_max);

} // namespace cnslab
