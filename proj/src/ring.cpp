#include "cnslab/ring.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdlib>
#include <sstream>

#include "cnslab/parallel.hpp"

namespace cnslab {

FieldSpec make_field(std::int64_t d) {
    if (d <= 0) fail(Errc::not_positive, "d must be positive, got " + std::to_string(d));
    for (std::int64_t p = 2; p * p <= d; ++p) {
        if (d % (p * p) == 0)
            fail(Errc::not_squarefree,
                 "d = " + std::to_string(d) + " is divisible by " + std::to_string(p * p));
    }
    FieldSpec f;
    f.d = d;
    f.half_basis = (d % 4 == 3);
    f.disc = f.half_basis ? -d : -4 * d;
    f.omega_k = (d == 1) ? 4 : (d == 3) ? 6 : 2;
    f.w_trace = f.half_basis ? 1 : 0;
    f.w_norm = f.half_basis ? (1 + d) / 4 : d;
    return f;
}

BigInt norm(const QuadInt& x) {
    const FieldSpec& f = x.field();
    BigInt n = x.a() * x.a() + f.w_norm * x.b() * x.b();
    if (f.w_trace != 0) n += x.a() * x.b();
    return n;
}

QuadInt conj(const QuadInt& x) {
    const FieldSpec& f = x.field();
    return QuadInt(f, x.a() + f.w_trace * x.b(), -x.b());
}

BigInt trace(const QuadInt& x) {
    return 2 * x.a() + x.field().w_trace * x.b();
}

QuadInt exact_div(const QuadInt& x, const QuadInt& y) {
    if (y.is_zero()) fail(Errc::domain_error, "exact_div: division by zero");
    const BigInt n = norm(y);
    const QuadInt t = x * conj(y);
    if (t.a() % n != 0 || t.b() % n != 0)
        fail(Errc::not_divisible, to_string(x) + " is not divisible by " + to_string(y));
    return QuadInt(x.field(), t.a() / n, t.b() / n);
}

QuadInt pow(const QuadInt& x, std::uint64_t k) {
    QuadInt result = QuadInt::one(x.field());
    QuadInt base = x;
    while (k > 0) {
        if (k & 1) result = result * base;
        base = base * base;
        k >>= 1;
    }
    return result;
}

std::complex<double> embed_complex(const QuadInt& x) {
    const FieldSpec& f = x.field();
    const double a = x.a().convert_to<double>();
    const double b = x.b().convert_to<double>();
    const double sd = std::sqrt(static_cast<double>(f.d));
    if (f.half_basis) return {a + 0.5 * b, 0.5 * b * sd};
    return {a, b * sd};
}

double modulus(const QuadInt& x) {
    return std::sqrt(norm(x).convert_to<double>());
}

std::vector<LatticePoint> lattice_points(const FieldSpec& field, std::int64_t n_max) {
    std::vector<LatticePoint> out;
    if (n_max <= 0) return out;
    if (n_max > 1'000'000'000'000'000LL)
        fail(Errc::domain_error, "n_max beyond supported enumeration range");

    const std::int64_t d = field.d;
    auto push_if_in_range = [&](std::int64_t a, std::int64_t b) {
        if (a == 0 && b == 0) return;
        std::int64_t n = a * a + field.w_norm * b * b;
        if (field.w_trace != 0) n += a * b;
        if (n <= n_max) out.push_back({n, a, b});
    };

    if (!field.half_basis) {
        // a^2 + d b^2 <= n
        const auto b_max = static_cast<std::int64_t>(
            std::sqrt(static_cast<double>(n_max) / static_cast<double>(d))) + 1;
        for (std::int64_t b = -b_max; b <= b_max; ++b) {
            const std::int64_t rem = n_max - d * b * b;
            if (rem < 0) continue;
            const auto a_max = static_cast<std::int64_t>(std::sqrt(static_cast<double>(rem))) + 1;
            for (std::int64_t a = -a_max; a <= a_max; ++a) push_if_in_range(a, b);
        }
    } else {
        // (a + b/2)^2 + d (b/2)^2 <= n
        const auto b_max = static_cast<std::int64_t>(
            std::sqrt(4.0 * static_cast<double>(n_max) / static_cast<double>(d))) + 1;
        for (std::int64_t b = -b_max; b <= b_max; ++b) {
            const double rem = static_cast<double>(n_max) - 0.25 * static_cast<double>(d * b * b);
            if (rem < 0) continue;
            const double half_width = std::sqrt(rem);
            const auto a_lo = static_cast<std::int64_t>(std::floor(-0.5 * b - half_width)) - 1;
            const auto a_hi = static_cast<std::int64_t>(std::ceil(-0.5 * b + half_width)) + 1;
            for (std::int64_t a = a_lo; a <= a_hi; ++a) push_if_in_range(a, b);
        }
    }

    std::sort(out.begin(), out.end());
    return out;
}

std::vector<QuadInt> enumerate_by_norm(const FieldSpec& field, std::int64_t n_max) {
    const auto pts = lattice_points(field, n_max);
    std::vector<QuadInt> out;
    out.reserve(pts.size());
    for (const auto& p : pts) out.emplace_back(field, p.a, p.b);
    return out;
}

std::string to_string(const QuadInt& x) {
    std::ostringstream os;
    os << x.a().str();
    os << (x.b() < 0 ? "" : "+") << x.b().str();
    os << "*w[" << x.field().d << "]";
    return os.str();
}

namespace {

// "a+b*w[d]" with decimal signed integers; nothing else.
struct TextScanner {
    const std::string& s;
    std::size_t pos = 0;

    bool eof() const { return pos >= s.size(); }
    char peek() const { return s[pos]; }

    std::string signed_int(bool sign_required) {
        std::size_t start = pos;
        if (!eof() && (peek() == '+' || peek() == '-')) {
            ++pos;
        } else if (sign_required) {
            fail(Errc::parse_error, "expected sign at position " + std::to_string(pos) +
                                        " in \"" + s + "\"");
        }
        std::size_t digits = 0;
        while (!eof() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos, ++digits;
        if (digits == 0)
            fail(Errc::parse_error, "expected digits at position " + std::to_string(pos) +
                                        " in \"" + s + "\"");
        return s.substr(start, pos - start);
    }

    void literal(const std::string& lit) {
        if (s.compare(pos, lit.size(), lit) != 0)
            fail(Errc::parse_error, "expected \"" + lit + "\" at position " +
                                        std::to_string(pos) + " in \"" + s + "\"");
        pos += lit.size();
    }
};

// cpp_int's string constructor rejects a leading '+'
std::string strip_plus(const std::string& s) {
    return (!s.empty() && s[0] == '+') ? s.substr(1) : s;
}

} // namespace

QuadInt parse_quadint(const std::string& text) {
    TextScanner sc{text};
    const std::string a_str = strip_plus(sc.signed_int(false));
    const std::string b_str = strip_plus(sc.signed_int(true));
    sc.literal("*w[");
    const std::string d_str = sc.signed_int(false);
    sc.literal("]");
    if (!sc.eof())
        fail(Errc::parse_error, "trailing characters in \"" + text + "\"");
    std::int64_t d = 0;
    try {
        d = std::stoll(d_str);
    } catch (const std::exception&) {
        fail(Errc::parse_error, "field index out of range in \"" + text + "\"");
    }
    return QuadInt(make_field(d), BigInt(a_str), BigInt(b_str));
}

std::ostream& operator<<(std::ostream& os, const QuadInt& x) {
    return os << to_string(x);
}

bool norm_lex_less(const QuadInt& x, const QuadInt& y) {
    const BigInt nx = norm(x), ny = norm(y);
    if (nx != ny) return nx < ny;
    if (x.a() != y.a()) return x.a() < y.a();
    return x.b() < y.b();
}

namespace detail {

int resolve_threads(int requested) {
    if (requested > 0) return requested;
    if (const char* env = std::getenv("CNSLAB_THREADS")) {
        const long v = std::strtol(env, nullptr, 10);
        if (v > 0) return static_cast<int>(std::min(v, 256L));
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw > 0 ? static_cast<int>(hw) : 1;
}

} // namespace detail

} // namespace cnslab
