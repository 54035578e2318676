#include "cnslab/theorem_lab.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>

#include <json.hpp>

#include "cnslab/multdep.hpp"
#include "cnslab/parallel.hpp"

namespace cnslab {

namespace {

// Nonzero digits of gamma: exponents descending with their coefficients.
struct NonzeroTerms {
    std::vector<std::int64_t> exponents; // m_1 > m_2 > ... > m_r
    std::vector<std::int64_t> coeffs;    // a_1, ..., a_r
};

NonzeroTerms nonzero_terms(const QuadInt& gamma, const CnsBase& base) {
    const DigitString ds = expand(gamma, base);
    NonzeroTerms terms;
    for (std::int64_t i = ds.length(); i >= 0; --i) {
        if (ds.digits[static_cast<std::size_t>(i)] != 0) {
            terms.exponents.push_back(i);
            terms.coeffs.push_back(ds.digits[static_cast<std::size_t>(i)]);
        }
    }
    return terms;
}

QuadInt alpha_minus_one(const CnsBase& base) {
    return base.alpha() - QuadInt::one(base.field());
}

Split split_from_terms(const NonzeroTerms& terms, const CnsBase& base, std::int64_t p) {
    const auto r = static_cast<std::int64_t>(terms.exponents.size());
    if (p < 1 || p > r)
        fail(Errc::index_out_of_range,
             "split index p = " + std::to_string(p) + " outside 1.." + std::to_string(r));

    const FieldSpec& f = base.field();
    const QuadInt am1 = alpha_minus_one(base);
    const std::int64_t m_p = terms.exponents[static_cast<std::size_t>(p - 1)];

    QuadInt head = QuadInt::zero(f);
    for (std::int64_t i = 0; i < p; ++i) {
        const auto idx = static_cast<std::size_t>(i);
        head = head + pow(base.alpha(), static_cast<std::uint64_t>(terms.exponents[idx] - m_p)) *
                          BigInt(terms.coeffs[idx]);
    }
    QuadInt tail = QuadInt::zero(f);
    for (std::int64_t i = p; i < r; ++i) {
        const auto idx = static_cast<std::size_t>(i);
        tail = tail + pow(base.alpha(), static_cast<std::uint64_t>(terms.exponents[idx])) *
                          BigInt(terms.coeffs[idx]);
    }
    return {am1 * head, am1 * tail, m_p};
}

} // namespace

Split split(const QuadInt& gamma, const CnsBase& base, std::int64_t p) {
    if (gamma.is_zero()) fail(Errc::zero_input, "split: gamma = 0");
    return split_from_terms(nonzero_terms(gamma, base), base, p);
}

bool verify_split_identity(const QuadInt& gamma, const CnsBase& baseA, const CnsBase& baseB,
                           std::int64_t p, std::int64_t q) {
    const Split sa = split(gamma, baseA, p);
    const Split sb = split(gamma, baseB, q);
    const QuadInt am1 = alpha_minus_one(baseA);
    const QuadInt bm1 = alpha_minus_one(baseB);

    const QuadInt lhs_a = sa.A1 * pow(baseA.alpha(), static_cast<std::uint64_t>(sa.m_p)) + sa.A2;
    const QuadInt lhs_b = sb.A1 * pow(baseB.alpha(), static_cast<std::uint64_t>(sb.m_p)) + sb.A2;
    const QuadInt both = am1 * bm1 * gamma;
    return bm1 * lhs_a == am1 * lhs_b && lhs_a == am1 * gamma && bm1 * lhs_a == both;
}

double split_c3(const CnsBase& base) {
    const QuadInt am1 = alpha_minus_one(base);
    return static_cast<double>(base.eps_a()) * modulus(base.alpha() * am1) /
           (base.mod_alpha() - 1.0);
}

double split_c4(const CnsBase& base, double e2_hat) {
    return std::pow(base.mod_alpha(), -e2_hat);
}

CaseReport case_split(const QuadInt& gamma, const CnsBase& baseA, const CnsBase& baseB,
                      double c1, const KpConstants& kpA) {
    const double mg = modulus(gamma);
    if (!(mg > 16.0))
        fail(Errc::domain_error, "case_split needs |gamma| > 16, got " + std::to_string(mg));
    if (!(c1 > 1.0)) fail(Errc::domain_error, "case_split needs c1 > 1");

    CaseReport report;
    report.theta = c1 * std::log(std::log(mg));

    // theta^k <= (log|gamma|/log|alpha| + e1)/2 < theta^(k+1), k >= 0
    const double half = 0.5 * (std::log(mg) / std::log(baseA.mod_alpha()) + kpA.e1_hat);
    std::int64_t k = 0;
    if (half >= 1.0) {
        k = static_cast<std::int64_t>(std::floor(std::log(half) / std::log(report.theta)));
        while (std::pow(report.theta, static_cast<double>(k + 1)) <= half) ++k;
        while (k > 0 && std::pow(report.theta, static_cast<double>(k)) > half) --k;
    }
    report.k = k;

    const NonzeroTerms ta = nonzero_terms(gamma, baseA);
    const NonzeroTerms tb = nonzero_terms(gamma, baseB);
    std::vector<std::int64_t> gaps;
    for (std::size_t i = 1; i < ta.exponents.size(); ++i)
        gaps.push_back(ta.exponents[0] - ta.exponents[i]);
    for (std::size_t j = 1; j < tb.exponents.size(); ++j)
        gaps.push_back(tb.exponents[0] - tb.exponents[j]);

    for (std::int64_t s = 1; s <= k; ++s) {
        const double lo = std::pow(report.theta, static_cast<double>(s - 1));
        const double hi = std::pow(report.theta, static_cast<double>(s));
        bool hit = false;
        for (const std::int64_t g : gaps) {
            const auto gd = static_cast<double>(g);
            if (lo < gd && gd <= hi) {
                hit = true;
                break;
            }
        }
        if (!hit) {
            report.kind = CaseKind::GapFound;
            report.s = s;
            // largest p with m_1 - m_p <= theta^(s-1); p = 1 always qualifies
            std::int64_t p = 1;
            for (std::size_t i = 1; i < ta.exponents.size(); ++i)
                if (static_cast<double>(ta.exponents[0] - ta.exponents[i]) <= lo)
                    p = static_cast<std::int64_t>(i) + 1;
            std::int64_t q = 1;
            for (std::size_t j = 1; j < tb.exponents.size(); ++j)
                if (static_cast<double>(tb.exponents[0] - tb.exponents[j]) <= lo)
                    q = static_cast<std::int64_t>(j) + 1;
            report.p = p;
            report.q = q;
            return report;
        }
    }
    report.kind = CaseKind::AllIntervalsHit;
    return report;
}

LambdaCheck lambda_and_bound_check(const QuadInt& gamma, const CnsBase& baseA,
                                   const CnsBase& baseB, const CaseReport& report,
                                   const KpConstants& kpA, const KpConstants& kpB,
                                   double slack) {
    if (report.kind != CaseKind::GapFound)
        fail(Errc::not_gap_case, "lambda_and_bound_check needs a GapFound report");
    if (baseA.mod_alpha() < baseB.mod_alpha())
        fail(Errc::domain_error,
             "bound chain assumes |alpha| >= |beta|; swap the bases");

    const Split sa = split(gamma, baseA, report.p);
    const Split sb = split(gamma, baseB, report.q);
    const QuadInt am1 = alpha_minus_one(baseA);
    const QuadInt bm1 = alpha_minus_one(baseB);

    const QuadInt numer = bm1 * sa.A1 * pow(baseA.alpha(), static_cast<std::uint64_t>(sa.m_p));
    const QuadInt denom = am1 * sb.A1 * pow(baseB.alpha(), static_cast<std::uint64_t>(sb.m_p));
    const QuadInt diff = numer - denom;

    LambdaCheck out;
    out.degenerate = diff.is_zero();
    out.lambda_abs =
        out.degenerate
            ? 0.0
            : std::sqrt(norm(diff).convert_to<double>() / norm(denom).convert_to<double>());

    const double c3 = split_c3(baseA), d3 = split_c3(baseB);
    const double c4 = split_c4(baseA, kpA.e2_hat), d4 = split_c4(baseB, kpB.e2_hat);
    const double theta_s = std::pow(report.theta, static_cast<double>(report.s));
    out.rhs = (c3 * d3 / (modulus(am1) * modulus(bm1) * c4 * d4) + c3 / (modulus(am1) * c4)) *
              std::pow(baseB.mod_alpha(), -theta_s);
    out.holds = out.lambda_abs <= slack * out.rhs;
    return out;
}

BBoundCheck lfl_b_check(const QuadInt& gamma, const CnsBase& baseA, const CnsBase& baseB,
                        const CaseReport& report, const KpConstants& kpA,
                        const KpConstants& kpB, double slack) {
    if (report.kind != CaseKind::GapFound)
        fail(Errc::not_gap_case, "lfl_b_check needs a GapFound report");
    const Split sa = split(gamma, baseA, report.p);
    const Split sb = split(gamma, baseB, report.q);

    BBoundCheck out;
    out.b_value = static_cast<double>(std::max(sa.m_p, sb.m_p));
    out.b_bound = (1.0 / std::log(baseB.mod_alpha()) +
                   std::max(kpA.e2_hat, kpB.e2_hat) / std::log(16.0)) *
                  std::log(modulus(gamma));
    out.holds = out.b_value <= out.b_bound + slack;
    return out;
}

namespace {

double bound_at_c0(double abs) {
    const double ee = std::exp(std::exp(1.0));
    if (!(abs > ee)) return std::numeric_limits<double>::quiet_NaN();
    const double ll = std::log(std::log(abs));
    return ll / std::log(ll);
}

} // namespace

std::vector<SweepRecord> sweep(const FieldSpec& field, const CnsBase& baseA,
                               const CnsBase& baseB, std::int64_t n_max, int threads) {
    if (baseA.field().d != field.d || baseB.field().d != field.d)
        fail(Errc::field_mismatch, "sweep bases must lie in the sweep field");
    if (mult_dep(baseA.alpha(), baseB.alpha()).dependent)
        fail(Errc::dependent_bases, "sweep bases " + to_string(baseA.alpha()) + ", " +
                                        to_string(baseB.alpha()) +
                                        " are multiplicatively dependent");

    const auto pts = lattice_points(field, n_max);
    std::vector<SweepRecord> records(pts.size());

    detail::parallel_chunks(pts.size(), threads, [&](std::size_t, std::size_t lo, std::size_t hi) {
        for (std::size_t i = lo; i < hi; ++i) {
            const QuadInt gamma(field, pts[i].a, pts[i].b);
            const ExpandSummary a = expand_summary(gamma, baseA);
            const ExpandSummary b = expand_summary(gamma, baseB);
            SweepRecord& rec = records[i];
            rec.a = static_cast<std::int32_t>(pts[i].a);
            rec.b = static_cast<std::int32_t>(pts[i].b);
            rec.norm = pts[i].norm;
            rec.abs = std::sqrt(static_cast<double>(pts[i].norm));
            rec.Za = static_cast<std::int32_t>(a.nonzero);
            rec.Sa = static_cast<std::int32_t>(a.digit_sum);
            rec.La = static_cast<std::int32_t>(a.top_exponent);
            rec.Zb = static_cast<std::int32_t>(b.nonzero);
            rec.Sb = static_cast<std::int32_t>(b.digit_sum);
            rec.Lb = static_cast<std::int32_t>(b.top_exponent);
            rec.lhs = rec.Za + rec.Zb;
            rec.bound_c0 = bound_at_c0(rec.abs);
        }
    });
    return records;
}

EmpiricalCReport empirical_C(const std::vector<SweepRecord>& records) {
    if (records.empty()) fail(Errc::empty_input, "empirical_C: no records");

    EmpiricalCReport report;
    double best = -std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < records.size(); ++i) {
        const SweepRecord& rec = records[i];
        if (!(rec.abs > 16.0)) continue;
        const double ll = std::log(std::log(rec.abs));
        const double c = ll / static_cast<double>(rec.lhs) - std::log(ll);
        if (c > best) {
            best = c;
            report.argmax = i;
        }
    }
    report.c_emp = report.argmax ? std::max(0.0, best) : 0.0;

    for (const SweepRecord& rec : records) {
        if (!(rec.abs > 16.0)) continue;
        const double ll = std::log(std::log(rec.abs));
        const double bound = ll / (std::log(ll) + report.c_emp);
        if (static_cast<double>(rec.lhs) + 1e-9 < bound)
            fail(Errc::domain_error, "empirical_C self-check failed at " + std::to_string(rec.a) +
                                         "," + std::to_string(rec.b));
    }
    return report;
}

bool dependent_counterexample_check(const QuadInt& alpha, const QuadInt& beta,
                                    std::int64_t u, std::int64_t v, std::int64_t m_max) {
    if (u < 1 || v < 1 || m_max < 1)
        fail(Errc::domain_error, "dependent_counterexample_check needs u, v, m_max >= 1");
    if (!(pow(alpha, static_cast<std::uint64_t>(u)) == pow(beta, static_cast<std::uint64_t>(v))))
        fail(Errc::not_dependent,
             "alpha^u != beta^v for u = " + std::to_string(u) + ", v = " + std::to_string(v));

    const CnsBase baseA = make_base(alpha);
    const CnsBase baseB = make_base(beta);
    for (std::int64_t m = 1; m <= m_max; ++m) {
        const QuadInt gamma = pow(alpha, static_cast<std::uint64_t>(u * m));
        const DigitString da = expand(gamma, baseA);
        const DigitString db = expand(gamma, baseB);
        auto single_one_at = [](const DigitString& ds, std::int64_t index) {
            if (ds.length() != index) return false;
            for (std::int64_t i = 0; i < index; ++i)
                if (ds.digits[static_cast<std::size_t>(i)] != 0) return false;
            return ds.digits.back() == 1;
        };
        if (!single_one_at(da, u * m) || !single_one_at(db, v * m)) return false;
    }
    return true;
}

void write_sweep_csv(std::ostream& os, const std::vector<SweepRecord>& records) {
    os << "a,b,norm,abs,Za,Sa,La,Zb,Sb,Lb,lhs,bound_C0\n";
    char line[256];
    for (const SweepRecord& r : records) {
        std::snprintf(line, sizeof(line), "%d,%d,%lld,%.9g,%d,%d,%d,%d,%d,%d,%d,%.9g\n",
                      r.a, r.b, static_cast<long long>(r.norm), r.abs, r.Za, r.Sa, r.La, r.Zb,
                      r.Sb, r.Lb, r.lhs, r.bound_c0);
        os << line;
    }
}

std::string empirical_c_json(const EmpiricalCReport& report,
                             const std::vector<SweepRecord>& records, const FieldSpec& field,
                             std::int64_t n_max) {
    nlohmann::json j;
    j["C_emp"] = report.c_emp;
    j["n_max"] = n_max;
    std::string argmax_text;
    if (report.argmax) {
        const SweepRecord& rec = records[*report.argmax];
        argmax_text = to_string(QuadInt(field, rec.a, rec.b));
    }
    j["argmax_gamma"] = argmax_text;
    return j.dump();
}

} // namespace cnslab
