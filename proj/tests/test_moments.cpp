#include <doctest.h>

#include <cmath>
#include <cstdint>

#include "snul/moments.hpp"
#include "snul/summation.hpp"

using namespace snul;

namespace {
const double kPiD = 3.14159265358979323846;
}

TEST_CASE("compensated summation beats naive accumulation") {
    CompensatedSum s;
    s.add(1.0);
    s.add(1e-16);
    s.add(1e-16);
    s.add(-1.0);
    CHECK(s.value() == doctest::Approx(2e-16).epsilon(1e-6));
}

TEST_CASE("tau_0 is pi^2 exactly") {
    CHECK(tau_closed(kGoldenRho, 0) == doctest::Approx(kPiD * kPiD).epsilon(1e-15));
    CHECK(tau_closed(kSqrt2, 0) == doctest::Approx(kPiD * kPiD).epsilon(1e-15));
}

TEST_CASE("floor and ceiling forms of the closed moment agree") {
    for (const DD rho : {kGoldenRho, kSqrt2,
                         dd_from_string("0.31830988618379067153776752674502872407")}) {
        for (std::int64_t p = 0; p <= 120; ++p) {
            CHECK(tau_closed(rho, p) ==
                  doctest::Approx(tau_closed_ceil_form(rho, p)).epsilon(1e-13));
        }
    }
}

TEST_CASE("moments are bounded by pi^2 and never vanish") {
    for (std::int64_t p = 1; p <= 400; ++p) {
        const double t = tau_closed(kGoldenRho, p);
        CHECK(std::abs(t) <= kPiD * kPiD * (1.0 + 1e-15));
        CHECK(t != 0.0); // p*rho is never a half-integer for irrational rho
    }
}

TEST_CASE("Fourier series converges to the closed form") {
    const double theta = theta_from_rho(kGoldenRho);
    for (std::int64_t p : {0, 1, 2, 3, 5, 13, 55}) {
        const double closed = tau_closed(kGoldenRho, p);
        const double series = tau_series(theta, p, 2000000);
        // The tail of sum 1/(2m+1)^2 decays like 1/terms.
        CHECK(series == doctest::Approx(closed).epsilon(5e-6));
    }
    CHECK_THROWS_AS(tau_series(theta, 1, 0), Error);
}

TEST_CASE("single merged node carries mass 8") {
    const DiscreteMeasure m = build_measure(theta_from_rho(kGoldenRho), 1);
    REQUIRE(m.nodes.size() == 1);
    CHECK(m.weights[0] == doctest::Approx(8.0));
    CHECK(m.nodes[0] ==
          doctest::Approx(std::cos(0.5 * theta_from_rho(kGoldenRho))).epsilon(1e-15));
    CHECK_THROWS_AS(build_measure(1.0, 0), Error);
}

TEST_CASE("nodes and weights of the truncated measure") {
    const double theta = theta_from_rho(kGoldenRho);
    const DiscreteMeasure m = build_measure(theta, 100);
    REQUIRE(m.nodes.size() == 100);
    for (std::int64_t k = 1; k <= 100; ++k) {
        const double half = double(k) - 0.5;
        CHECK(m.nodes[k - 1] == doctest::Approx(std::cos(half * theta)).epsilon(1e-15));
        CHECK(m.weights[k - 1] == doctest::Approx(2.0 / (half * half)).epsilon(1e-15));
        CHECK(std::abs(m.nodes[k - 1]) <= 1.0);
    }
}

TEST_CASE("truncation at K = 20000 loses one part in 1e5 of the mass") {
    const DiscreteMeasure m = build_measure(theta_from_rho(kGoldenRho), 20000);
    const double mass = m.total_mass();
    // Frozen from an independent 30-digit computation.
    CHECK(mass == doctest::Approx(9.8695044010893794522).epsilon(1e-14));
    CHECK(kPiD * kPiD - mass == doctest::Approx(9.99999999792e-5).epsilon(1e-8));
}

TEST_CASE("truncated Chebyshev moments match the closed form") {
    // T_p at the node cos((k-1/2)theta) is cos(p(k-1/2)theta); the
    // truncated sums sit within ~5e-9 of the closed values for p >= 1
    // (the tail oscillates), frozen cross-check values included.
    const double theta = theta_from_rho(kGoldenRho);
    const DiscreteMeasure m = build_measure(theta, 20000);
    const struct { std::int64_t p; double closed; } rows[] = {
        {1, 2.32989754968818807}, {2, -5.20980930171298247},
        {3, -6.98969264906456422}, {5, 8.08972105373777687},
        {8, -8.76957599641614596},
    };
    for (const auto& r : rows) {
        CHECK(tau_closed(kGoldenRho, r.p) == doctest::Approx(r.closed).epsilon(1e-15));
        CompensatedSum sum;
        for (std::size_t k = 0; k < m.nodes.size(); ++k)
            sum.add(m.weights[k] * std::cos(double(r.p) * (double(k) + 0.5) * theta));
        CHECK(sum.value() == doctest::Approx(r.closed).epsilon(5e-8));
    }
}
