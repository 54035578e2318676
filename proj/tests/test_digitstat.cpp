#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "cnslab/digitstat.hpp"
#include "test_util.hpp"

using namespace cnslab;
using testutil::qi;

TEST_CASE("stats examples") {
    const CnsBase b = make_base(qi(-1, 1));
    const DigitStats s2 = stats(qi(2, 0), b);
    CHECK(s2.Z == 2);
    CHECK(s2.S == 2);
    CHECK(s2.L == 3);

    for (std::uint64_t k = 0; k <= 10; ++k) {
        const DigitStats sk = stats(pow(b.alpha(), k), b);
        CHECK(sk.Z == 1);
        CHECK(sk.S == 1);
        CHECK(sk.L == static_cast<std::int64_t>(k));
        CHECK(sk.defect == doctest::Approx(0.0).epsilon(1e-9));
    }

    const CnsBase b5 = make_base(qi(-2, 1));
    for (std::int64_t k = 1; k <= b5.digit_max(); ++k) {
        const DigitStats sd = stats(qi(k, 0), b5);
        CHECK(sd.Z == 1);
        CHECK(sd.S == k);
        CHECK(sd.L == 0);
        CHECK(sd.defect <= 1e-12); // -log(k)/log|alpha| <= 0
        CHECK(sd.defect ==
              doctest::Approx(-std::log(static_cast<double>(k)) / std::log(b5.mod_alpha()))
                  .epsilon(1e-9));
    }

    CHECK_ERRC(stats(qi(0, 0), b), Errc::zero_input);
}

TEST_CASE("Z <= S <= (F-1) Z over sweeps") {
    for (const QuadInt& alpha : {qi(-1, 1), qi(-2, 1), qi(-3, 1)}) {
        const CnsBase b = make_base(alpha);
        for (const QuadInt& gamma : enumerate_by_norm(b.field(), 800)) {
            const DigitStats s = stats(gamma, b);
            CHECK(s.Z <= s.S);
            CHECK(s.S <= (b.F() - 1) * s.Z);
            CHECK(s.Z <= s.L + 1);
        }
    }
}

TEST_CASE("kp_empirical_constants: frozen envelope for -1+i at n = 1000") {
    const CnsBase b = make_base(qi(-1, 1));
    const KpEnvelope env = kp_empirical_constants(b, 1000);
    // brute-sweep oracle values
    CHECK(env.e1_hat == doctest::Approx(-1.1421070573025496).epsilon(1e-9));
    CHECK(env.e2_hat == doctest::Approx(5.684850437743702).epsilon(1e-9));
    CHECK(env.e1_hat <= env.e2_hat);
}

TEST_CASE("kp envelope is monotone in n and brackets the alpha-power defect 0") {
    const CnsBase b = make_base(qi(-1, 1));
    KpEnvelope prev{0.0, 0.0};
    bool first = true;
    for (const std::int64_t n : {100, 1000, 10000}) {
        const KpEnvelope env = kp_empirical_constants(b, n);
        CHECK(env.e1_hat <= 0.0); // norm(alpha) = F <= n, defect(alpha) = 0
        CHECK(env.e2_hat >= 0.0);
        if (!first) {
            CHECK(env.e1_hat <= prev.e1_hat);
            CHECK(env.e2_hat >= prev.e2_hat);
        }
        prev = env;
        first = false;
    }
}

TEST_CASE("kp envelope works below F and stays nonpositive on digit-range input") {
    const CnsBase b5 = make_base(qi(-2, 1));
    const KpEnvelope env = kp_empirical_constants(b5, 2);
    CHECK(env.e1_hat <= 0.0);
    CHECK(env.e1_hat <= env.e2_hat);
}

TEST_CASE("kp envelope does not depend on the worker count") {
    const CnsBase b = make_base(qi(-2, 1));
    const KpEnvelope e1 = kp_empirical_constants(b, 5000, 1);
    const KpEnvelope e4 = kp_empirical_constants(b, 5000, 4);
    CHECK(e1.e1_hat == e4.e1_hat);
    CHECK(e1.e2_hat == e4.e2_hat);
}
