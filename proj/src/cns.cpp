#include "cnslab/cns.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include <json.hpp>

#include "cnslab/parallel.hpp"

namespace cnslab {

std::pair<BigInt, BigInt> minimal_poly(const QuadInt& alpha) {
    if (alpha.is_rational())
        fail(Errc::not_quadratic, to_string(alpha) + " is a rational integer");
    return {-trace(alpha), norm(alpha)};
}

CnsCheck is_cns(const QuadInt& alpha) {
    if (alpha.is_zero()) fail(Errc::zero_input, "is_cns: alpha = 0");
    if (alpha.is_rational()) return {false, false};
    const auto [E, F] = minimal_poly(alpha);
    CnsCheck check;
    check.criterion_ok = (F >= 2) && (E >= -1) && (E <= F);
    check.ring_match = (E * E - 4 * F == alpha.field().disc);
    return check;
}

namespace {

std::int64_t to_small(const BigInt& v, const char* what) {
    if (v > std::numeric_limits<std::int64_t>::max() ||
        v < std::numeric_limits<std::int64_t>::min())
        fail(Errc::domain_error, std::string(what) + " exceeds desk-scale range: " + v.str());
    return v.convert_to<std::int64_t>();
}

} // namespace

CnsBase::CnsBase(QuadInt alpha, std::int64_t E, std::int64_t F, bool validated)
    : alpha_(std::move(alpha)),
      E_(E),
      F_(F),
      mod_alpha_(std::sqrt(static_cast<double>(F))),
      validated_(validated) {}

CnsBase make_base(const QuadInt& alpha) {
    if (alpha.is_zero() || alpha.is_rational())
        fail(Errc::not_cns, to_string(alpha) + " is not a quadratic irrational");
    const auto [Eb, Fb] = minimal_poly(alpha);
    const std::int64_t E = to_small(Eb, "base trace");
    const std::int64_t F = to_small(Fb, "base norm");
    if (!(F >= 2 && E >= -1 && E <= F))
        fail(Errc::not_cns, to_string(alpha) + " fails the criterion (E=" + std::to_string(E) +
                                ", F=" + std::to_string(F) + ")");
    if (E * E - 4 * F != alpha.field().disc)
        fail(Errc::ring_mismatch,
             "Z[alpha] is a proper suborder for alpha = " + to_string(alpha) +
                 " (E^2-4F = " + std::to_string(E * E - 4 * F) +
                 ", disc = " + std::to_string(alpha.field().disc) + ")");
    return CnsBase(alpha, E, F, true);
}

CnsBase make_base_unchecked(const QuadInt& alpha) {
    if (alpha.is_zero() || alpha.is_rational())
        fail(Errc::not_quadratic, to_string(alpha) + " is not a quadratic irrational");
    const auto [Eb, Fb] = minimal_poly(alpha);
    const std::int64_t E = to_small(Eb, "base trace");
    const std::int64_t F = to_small(Fb, "base norm");
    if (F < 2)
        fail(Errc::domain_error, "probing base needs |alpha| > 1, got F = " + std::to_string(F));
    return CnsBase(alpha, E, F, false);
}

namespace {

// Per-base data for the digit loop. alpha | (gamma - eps) iff F divides both
// coordinates of (gamma - eps) * conj(alpha); the candidate scan works on the
// coordinate residues mod F, so each eps costs two int64 tests.
struct StepContext {
    explicit StepContext(const CnsBase& base)
        : field(base.field()),
          ca(conj(base.alpha()).a()),
          cb(conj(base.alpha()).b()),
          F(base.F()),
          pa(residue(ca)),
          pb(residue(cb)) {}

    std::int64_t residue(const BigInt& v) const {
        std::int64_t r = (v % F).convert_to<std::int64_t>();
        return r < 0 ? r + F : r;
    }

    // gamma * conj(alpha) in coordinates
    void mul_conj(const BigInt& ga, const BigInt& gb, BigInt& ta, BigInt& tb) const {
        const BigInt cross = gb * cb;
        ta = ga * ca - field.w_norm * cross;
        tb = ga * cb + gb * ca + field.w_trace * cross;
    }

    // Scans all F digits; returns the number of hits and the first hit.
    int scan(std::int64_t ra, std::int64_t rb, std::int64_t& hit) const {
        int hits = 0;
        for (std::int64_t eps = 0; eps < F; ++eps) {
            if ((ra - eps * pa) % F == 0 && (rb - eps * pb) % F == 0) {
                if (hits == 0) hit = eps;
                ++hits;
            }
        }
        return hits;
    }

    FieldSpec field;
    BigInt ca, cb;
    std::int64_t F;
    std::int64_t pa, pb;
};

std::int64_t step_guard(const QuadInt& gamma, const CnsBase& base) {
    const double len_estimate =
        2.0 * std::log1p(modulus(gamma)) / std::log(base.mod_alpha());
    return static_cast<std::int64_t>(std::ceil(len_estimate)) + 64;
}

// One digit step on raw coordinates; returns the digit and replaces (ga, gb)
// by the quotient.
std::int64_t step_core(const StepContext& ctx, BigInt& ga, BigInt& gb, BigInt& ta, BigInt& tb,
                       const QuadInt& origin) {
    ctx.mul_conj(ga, gb, ta, tb);
    std::int64_t hit = -1;
    const int hits = ctx.scan(ctx.residue(ta), ctx.residue(tb), hit);
    if (hits == 0)
        fail(Errc::no_digit, "no digit in {0,...," + std::to_string(ctx.F - 1) +
                                 "} works for " + to_string(QuadInt(ctx.field, ga, gb)) +
                                 " while expanding " + to_string(origin));
    if (hits > 1)
        fail(Errc::ambiguous_digit, "digit set is not a complete residue system at " +
                                        to_string(QuadInt(ctx.field, ga, gb)));
    ga = (ta - hit * ctx.ca) / ctx.F;
    gb = (tb - hit * ctx.cb) / ctx.F;
    return hit;
}

} // namespace

DigitStep digit_step(const QuadInt& gamma, const CnsBase& base) {
    if (gamma.field().d != base.field().d)
        fail(Errc::field_mismatch, "gamma and base lie in different fields");
    const StepContext ctx(base);
    BigInt ga = gamma.a(), gb = gamma.b(), ta, tb;
    const std::int64_t digit = step_core(ctx, ga, gb, ta, tb, gamma);
    return {digit, QuadInt(base.field(), std::move(ga), std::move(gb))};
}

std::vector<std::int64_t> digit_candidates(const QuadInt& gamma, const CnsBase& base) {
    const StepContext ctx(base);
    BigInt ta, tb;
    ctx.mul_conj(gamma.a(), gamma.b(), ta, tb);
    const std::int64_t ra = ctx.residue(ta), rb = ctx.residue(tb);
    std::vector<std::int64_t> hits;
    for (std::int64_t eps = 0; eps < ctx.F; ++eps)
        if ((ra - eps * ctx.pa) % ctx.F == 0 && (rb - eps * ctx.pb) % ctx.F == 0)
            hits.push_back(eps);
    return hits;
}

DigitString expand(const QuadInt& gamma, const CnsBase& base) {
    if (gamma.field().d != base.field().d)
        fail(Errc::field_mismatch, "gamma and base lie in different fields");
    DigitString ds{base, {}};
    if (gamma.is_zero()) {
        ds.digits.push_back(0);
        return ds;
    }
    const StepContext ctx(base);
    const std::int64_t guard = step_guard(gamma, base);
    BigInt ga = gamma.a(), gb = gamma.b(), ta, tb;
    std::int64_t steps = 0;
    while (!(ga == 0 && gb == 0)) {
        if (++steps > guard)
            fail(Errc::non_terminating,
                 "expansion of " + to_string(gamma) + " in base " + to_string(base.alpha()) +
                     " exceeded " + std::to_string(guard) + " steps");
        ds.digits.push_back(step_core(ctx, ga, gb, ta, tb, gamma));
    }
    return ds;
}

ExpandSummary expand_summary(const QuadInt& gamma, const CnsBase& base) {
    ExpandSummary sum;
    if (gamma.is_zero()) return sum;
    const StepContext ctx(base);
    const std::int64_t guard = step_guard(gamma, base);
    BigInt ga = gamma.a(), gb = gamma.b(), ta, tb;
    std::int64_t index = -1;
    while (!(ga == 0 && gb == 0)) {
        if (++index >= guard)
            fail(Errc::non_terminating,
                 "expansion of " + to_string(gamma) + " in base " + to_string(base.alpha()) +
                     " exceeded " + std::to_string(guard) + " steps");
        const std::int64_t digit = step_core(ctx, ga, gb, ta, tb, gamma);
        if (digit != 0) {
            ++sum.nonzero;
            sum.digit_sum += digit;
        }
        sum.top_exponent = index;
    }
    return sum;
}

QuadInt evaluate(const DigitString& ds) {
    const CnsBase& base = ds.base;
    if (ds.digits.empty()) fail(Errc::domain_error, "evaluate: empty digit string");
    for (const std::int64_t d : ds.digits)
        if (d < 0 || d > base.digit_max())
            fail(Errc::digit_out_of_range,
                 "digit " + std::to_string(d) + " outside {0,...," +
                     std::to_string(base.digit_max()) + "}");
    QuadInt acc = QuadInt::zero(base.field());
    for (auto it = ds.digits.rbegin(); it != ds.digits.rend(); ++it)
        acc = acc * base.alpha() + QuadInt::from_int(base.field(), *it);
    return acc;
}

ExhaustiveReport verify_exhaustive(const CnsBase& base, std::int64_t n_max, int threads) {
    const auto pts = lattice_points(base.field(), n_max);
    const int workers = detail::resolve_threads(threads);

    struct Partial {
        std::int64_t count = 0;
        bool ok = true;
        std::int64_t max_length = 0;
    };
    std::vector<Partial> parts(static_cast<std::size_t>(workers));

    detail::parallel_chunks(pts.size(), workers, [&](std::size_t c, std::size_t lo, std::size_t hi) {
        Partial& part = parts[c];
        for (std::size_t i = lo; i < hi; ++i) {
            const QuadInt gamma(base.field(), pts[i].a, pts[i].b);
            const DigitString ds = expand(gamma, base);
            bool good = evaluate(ds) == gamma;
            good = good && (ds.digits.size() == 1 || ds.digits.back() != 0);
            part.ok = part.ok && good;
            part.count += 1;
            part.max_length = std::max(part.max_length, ds.length());
        }
    });

    ExhaustiveReport report;
    {
        // gamma = 0 expands to [0]
        const QuadInt zero = QuadInt::zero(base.field());
        const DigitString ds = expand(zero, base);
        report.all_roundtrip = (ds.digits == std::vector<std::int64_t>{0}) && evaluate(ds) == zero;
        report.count = 1;
    }
    for (const Partial& p : parts) {
        report.count += p.count;
        report.all_roundtrip = report.all_roundtrip && p.ok;
        report.max_length = std::max(report.max_length, p.max_length);
    }
    return report;
}

std::vector<CnsBase> katai_szabo_scan(std::int64_t a_max) {
    if (a_max <= 0) fail(Errc::not_positive, "a_max must be positive");
    const FieldSpec qi = make_field(1);
    std::vector<CnsBase> found;
    for (std::int64_t u = -a_max; u <= a_max; ++u) {
        for (std::int64_t v = -a_max; v <= a_max; ++v) {
            if (u == 0 && v == 0) continue;
            const QuadInt alpha(qi, u, v);
            if (alpha.is_rational()) continue;
            const CnsCheck check = is_cns(alpha);
            if (check.criterion_ok && check.ring_match) found.push_back(make_base(alpha));
        }
    }
    std::sort(found.begin(), found.end(), [](const CnsBase& x, const CnsBase& y) {
        return norm_lex_less(x.alpha(), y.alpha());
    });
    return found;
}

std::string digitstring_to_json(const DigitString& ds) {
    nlohmann::json j;
    j["base"] = to_string(ds.base.alpha());
    j["d"] = ds.base.field().d;
    j["digits"] = ds.digits;
    return j.dump();
}

DigitString digitstring_from_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        fail(Errc::parse_error, std::string("bad DigitString JSON: ") + e.what());
    }
    if (!j.contains("base") || !j.contains("digits"))
        fail(Errc::parse_error, "DigitString JSON needs \"base\" and \"digits\"");
    const QuadInt alpha = parse_quadint(j["base"].get<std::string>());
    if (j.contains("d") && j["d"].get<std::int64_t>() != alpha.field().d)
        fail(Errc::parse_error, "\"d\" disagrees with the base text");
    DigitString ds{make_base(alpha), j["digits"].get<std::vector<std::int64_t>>()};
    if (ds.digits.empty()) fail(Errc::parse_error, "empty digit array");
    return ds;
}

std::string digitstring_display(const DigitString& ds) {
    std::ostringstream os;
    os << "(";
    for (auto it = ds.digits.rbegin(); it != ds.digits.rend(); ++it) {
        if (it != ds.digits.rbegin()) os << " ";
        os << *it;
    }
    os << ")_" << to_string(ds.base.alpha());
    return os.str();
}

} // namespace cnslab
