#include <doctest.h>

#include <cmath>
#include <random>

#include "snul/diffop.hpp"

using namespace snul;

namespace {

// B is kept away from values that make the root ratio a root of unity
// (e.g. B = -1/2 here gives q^3 = 1 and the divided difference of x^3k
// drops two degrees instead of one).
const Conic kConic{1.0, -0.37, 1.0, 0.1, -0.2, -0.75};

Polynomial random_poly(std::mt19937& rng, int deg) {
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    std::vector<double> c(static_cast<std::size_t>(deg) + 1);
    for (double& v : c) v = u(rng);
    if (c.back() == 0.0) c.back() = 1.0;
    return Polynomial(std::move(c));
}

void check_poly_close(const Polynomial& a, const Polynomial& b, double tol) {
    const std::size_t n = std::max(a.coeffs().size(), b.coeffs().size());
    double scale = 1.0;
    for (std::size_t i = 0; i < n; ++i)
        scale = std::max({scale, std::abs(a[i]), std::abs(b[i])});
    for (std::size_t i = 0; i < n; ++i)
        CHECK(std::abs(a[i] - b[i]) < tol * scale);
}

} // namespace

TEST_CASE("divided difference of low powers") {
    // D(1) = 0, D(x) = 1, D(x^2) = sigma(x) = -2(Bx+D)/A.
    CHECK(divided_difference(kConic, Polynomial{3.0}).is_zero());
    const Polynomial dx = divided_difference(kConic, Polynomial{0.0, 1.0});
    CHECK(dx.degree() == 0);
    CHECK(dx[0] == doctest::Approx(1.0));
    const Polynomial dx2 = divided_difference(kConic, Polynomial{0.0, 0.0, 1.0});
    CHECK(dx2.degree() == 1);
    CHECK(dx2[0] == doctest::Approx(-2.0 * kConic.D / kConic.A));
    CHECK(dx2[1] == doctest::Approx(-2.0 * kConic.B / kConic.A));
}

TEST_CASE("mean of low powers") {
    // M(1) = 1, M(x) = sigma/2, M(x^2) = sigma^2/2 - pi.
    const Polynomial m1 = mean(kConic, Polynomial{1.0});
    CHECK(m1.degree() == 0);
    CHECK(m1[0] == doctest::Approx(1.0));
    const Polynomial mx = mean(kConic, Polynomial{0.0, 1.0});
    CHECK(mx[1] == doctest::Approx(-kConic.B / kConic.A));
    CHECK(mx[0] == doctest::Approx(-kConic.D / kConic.A));
    const Polynomial sigma{-2.0 * kConic.D / kConic.A, -2.0 * kConic.B / kConic.A};
    const Polynomial pi{kConic.F / kConic.A, 2.0 * kConic.E / kConic.A,
                        kConic.C / kConic.A};
    const Polynomial expect = 0.5 * (sigma * sigma) - pi;
    const Polynomial mx2 = mean(kConic, Polynomial{0.0, 0.0, 1.0});
    check_poly_close(mx2, expect, 1e-14);
}

TEST_CASE("degrees: D lowers by one, M preserves") {
    for (int k = 1; k <= 30; ++k) {
        const Polynomial xk = Polynomial::monomial(k);
        CHECK(divided_difference(kConic, xk).degree() == k - 1);
        CHECK(mean(kConic, xk).degree() == k);
    }
}

TEST_CASE("both operators are linear") {
    std::mt19937 rng(7);
    const Polynomial f = random_poly(rng, 6);
    const Polynomial g = random_poly(rng, 9);
    const Polynomial lhs_d = divided_difference(kConic, 2.0 * f + (-3.0) * g);
    const Polynomial rhs_d = 2.0 * divided_difference(kConic, f) +
                             (-3.0) * divided_difference(kConic, g);
    check_poly_close(lhs_d, rhs_d, 1e-13);
    const Polynomial lhs_m = mean(kConic, 2.0 * f + (-3.0) * g);
    const Polynomial rhs_m = 2.0 * mean(kConic, f) + (-3.0) * mean(kConic, g);
    check_poly_close(lhs_m, rhs_m, 1e-13);
}

TEST_CASE("pointwise oracle agrees with the exact coefficients") {
    std::mt19937 rng(11);
    std::uniform_real_distribution<double> ux(-1.5, 1.5);
    for (int trial = 0; trial < 20; ++trial) {
        const Polynomial f = random_poly(rng, 8);
        const double x = ux(rng);
        const auto [dd_val, m_val] = pointwise_check(kConic, f, x);
        CHECK(divided_difference(kConic, f).eval(x) ==
              doctest::Approx(dd_val).epsilon(1e-9).scale(1.0));
        CHECK(mean(kConic, f).eval(x) ==
              doctest::Approx(m_val).epsilon(1e-9).scale(1.0));
    }
}

TEST_CASE("product rules") {
    // D(fg) = (Df)(Mg) + (Mf)(Dg)
    // M(fg) = (Mf)(Mg) + (sigma^2/4 - pi)(Df)(Dg)
    std::mt19937 rng(13);
    const Polynomial f = random_poly(rng, 5);
    const Polynomial g = random_poly(rng, 7);
    const Polynomial fg = f * g;

    const Polynomial df = divided_difference(kConic, f);
    const Polynomial dg = divided_difference(kConic, g);
    const Polynomial mf = mean(kConic, f);
    const Polynomial mg = mean(kConic, g);

    check_poly_close(divided_difference(kConic, fg), df * mg + mf * dg, 1e-12);

    const Polynomial sigma{-2.0 * kConic.D / kConic.A, -2.0 * kConic.B / kConic.A};
    const Polynomial pi{kConic.F / kConic.A, 2.0 * kConic.E / kConic.A,
                        kConic.C / kConic.A};
    const Polynomial half_gap_sq = 0.25 * (sigma * sigma) - pi;
    check_poly_close(mean(kConic, fg), mf * mg + half_gap_sq * (df * dg), 1e-12);
}

TEST_CASE("A = 0 is rejected") {
    CHECK_THROWS_AS(divided_difference(Conic{0, 1, 1, 0, 0, 1}, Polynomial{0.0, 1.0}),
                    LinearInY);
    CHECK_THROWS_AS(mean(Conic{0, 1, 1, 0, 0, 1}, Polynomial{0.0, 1.0}), LinearInY);
}
