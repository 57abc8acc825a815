#include <doctest.h>

#include <cmath>

#include "snul/dd.hpp"

using namespace snul;

TEST_CASE("double-double arithmetic keeps extended precision") {
    const DD third = DD(1.0) / DD(3.0);
    const DD one = third * DD(3.0);
    CHECK(std::abs(to_double(one - DD(1.0))) < 1e-31);

    // (1 + 1e-20) - 1 survives in a DD but not in a double.
    const DD tiny = DD(1.0) + DD(1e-20);
    CHECK(to_double(tiny - DD(1.0)) == doctest::Approx(1e-20).epsilon(1e-12));
}

TEST_CASE("floor, ceil, frac on double-doubles") {
    const DD x = dd_from_string("2.75");
    CHECK(to_double(dd_floor(x)) == 2.0);
    CHECK(to_double(dd_ceil(x)) == 3.0);
    CHECK(to_double(dd_frac(x)) == 0.75);

    const DD neg = dd_from_string("-0.25");
    CHECK(to_double(dd_floor(neg)) == -1.0);
    CHECK(to_double(dd_ceil(neg)) == 0.0);
    CHECK(to_double(dd_frac(neg)) == 0.75);

    // Exact integer: frac is exactly zero even in the low word.
    const DD five = dd_from_string("5");
    CHECK(dd_frac(five) == DD(0.0));
}

TEST_CASE("decimal parsing round-trips through rendering") {
    const DD rho = dd_from_string("1.61803398874989484820458683436563811772");
    CHECK(dd_to_string(rho, 21) == "1.61803398874989484820");

    CHECK(to_double(dd_from_string("2e-3")) == doctest::Approx(0.002).epsilon(1e-15));
    CHECK(to_double(dd_from_string("-1.5E2")) == -150.0);
    CHECK(dd_to_string(DD(0.0), 19) == "0");
    CHECK_THROWS_AS(dd_from_string("1.2.3"), Error);
    CHECK_THROWS_AS(dd_from_string(""), Error);
    CHECK_THROWS_AS(dd_from_string("abc"), Error);
}

TEST_CASE("golden ratio constant satisfies rho^2 = rho + 1") {
    const DD r = kGoldenRho;
    CHECK(std::abs(to_double(r * r - r - DD(1.0))) < 1e-30);
}

TEST_CASE("sqrt2 constant squares to 2") {
    CHECK(std::abs(to_double(kSqrt2 * kSqrt2 - DD(2.0))) < 1e-30);
}

TEST_CASE("theta reduction uses period 4*pi, not 2*pi") {
    // rho and rho + 2 give the same theta; rho + 1 does not.
    const double t0 = theta_from_rho(dd_from_string("0.3"));
    const double t2 = theta_from_rho(dd_from_string("2.3"));
    const double t1 = theta_from_rho(dd_from_string("1.3"));
    CHECK(t0 == doctest::Approx(t2).epsilon(1e-14));
    CHECK(std::abs(t1 - t0) > 1.0);
    // The half-angle cosines, the quantities that matter, agree only
    // under the 4*pi reduction.
    CHECK(std::cos(0.5 * t2) == doctest::Approx(std::cos(0.5 * t0)).epsilon(1e-12));
    CHECK(std::cos(0.5 * t1) != doctest::Approx(std::cos(0.5 * t0)).epsilon(1e-3));
}
