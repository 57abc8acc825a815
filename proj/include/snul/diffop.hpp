#pragma once

#include <complex>
#include <utility>

#include "snul/conic.hpp"
#include "snul/errors.hpp"
#include "snul/polynomial.hpp"

namespace snul {

namespace detail {

// sigma(x) = phi1 + phi2 = -2(Bx+D)/A, pi(x) = phi1*phi2 = (Cx^2+2Ex+F)/A.
inline std::pair<Polynomial, Polynomial> symmetric_data(const Conic& c) {
    if (c.A == 0.0) throw LinearInY("divided difference: A = 0");
    Polynomial sigma{-2.0 * c.D / c.A, -2.0 * c.B / c.A};
    Polynomial pi{c.F / c.A, 2.0 * c.E / c.A, c.C / c.A};
    return {std::move(sigma), std::move(pi)};
}

} // namespace detail

// Exact action of the divided-difference operator on a polynomial:
// D(x^k) = h_{k-1}(phi1, phi2), the complete homogeneous symmetric
// polynomial, built by h_j = sigma*h_{j-1} - pi*h_{j-2}. Lowers the
// degree by one whenever the leading coefficient survives.
inline Polynomial divided_difference(const Conic& c, const Polynomial& f) {
    auto [sigma, pi] = detail::symmetric_data(c);
    Polynomial result;
    Polynomial h_prev;        // h_{-1} = 0
    Polynomial h_cur{1.0};    // h_0 = 1
    const auto& coeffs = f.coeffs();
    for (std::size_t k = 1; k < coeffs.size(); ++k) {
        if (coeffs[k] != 0.0) result += coeffs[k] * h_cur;
        Polynomial h_next = sigma * h_cur - pi * h_prev;
        h_prev = std::move(h_cur);
        h_cur = std::move(h_next);
    }
    return result;
}

// Mean operator M(x^k) = (phi1^k + phi2^k)/2 via Newton's power-sum
// recurrence p_k = sigma*p_{k-1} - pi*p_{k-2}, p_0 = 2, p_1 = sigma.
inline Polynomial mean(const Conic& c, const Polynomial& f) {
    auto [sigma, pi] = detail::symmetric_data(c);
    Polynomial result;
    Polynomial p_prev{2.0};
    Polynomial p_cur = sigma;
    const auto& coeffs = f.coeffs();
    if (!coeffs.empty() && coeffs[0] != 0.0) result += Polynomial{coeffs[0]};
    for (std::size_t k = 1; k < coeffs.size(); ++k) {
        if (coeffs[k] != 0.0) result += (0.5 * coeffs[k]) * p_cur;
        Polynomial p_next = sigma * p_cur - pi * p_prev;
        p_prev = std::move(p_cur);
        p_cur = std::move(p_next);
    }
    return result;
}

// Numerical oracle: evaluates (f(phi2)-f(phi1))/(phi2-phi1) and
// (f(phi1)+f(phi2))/2 straight from the companion roots.
inline std::pair<double, double> pointwise_check(const Conic& c,
                                                 const Polynomial& f, double x) {
    auto [phi1, phi2] = companion_roots(c, x);
    const std::complex<double> gap = phi2 - phi1;
    if (std::abs(gap) == 0.0)
        throw CoincidentRoots("pointwise_check: phi1 == phi2");
    const std::complex<double> f1 = f.eval(phi1);
    const std::complex<double> f2 = f.eval(phi2);
    // For real conics the roots are real or conjugate; both quotient and
    // mean of a real polynomial are real either way.
    return {((f2 - f1) / gap).real(), (0.5 * (f1 + f2)).real()};
}

} // namespace snul
