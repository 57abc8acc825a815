#pragma once

#include <cmath>
#include <cstdint>
#include <functional>
#include <utility>
#include <vector>

#include "snul/conic.hpp"
#include "snul/errors.hpp"
#include "snul/moments.hpp"
#include "snul/polynomial.hpp"
#include "snul/summation.hpp"

namespace snul {

// Data of the difference equation W * (D S) = 2 V * (M S) + U for the
// Stieltjes function of the measure.
struct DifferenceEquationData {
    Polynomial W;
    Polynomial V;
    Polynomial U;
};

// Running vector of the fourth-order product recurrence:
// (Upsilon_n, chi_n, Theta_n, Theta_{n-1}).
struct ThetaTriple {
    double upsilon = 0.0;
    double chi = 0.0;
    double theta_big = 0.0;
    double theta_prev = 0.0;
};

// One step of the product-of-solutions recurrences:
//   a_{n+1} Upsilon_{n+1} = (y1-b_n) Theta_n - a_n chi_n
//   a_{n+1} chi_{n+1}     = (y2-b_n) Theta_n - a_n Upsilon_n
//   a_{n+1}^2 Theta_{n+1} = (y1-b_n)(y2-b_n) Theta_n
//                           - a_n[(y1-b_n) Upsilon_n + (y2-b_n) chi_n]
//                           + a_n^2 Theta_{n-1}
inline ThetaTriple theta_advance(const ThetaTriple& t, double a_n, double a_next,
                                 double b_n, double y1, double y2) {
    if (!(a_next > 0.0)) throw Error("theta_advance: a_next must be positive");
    const double u = y1 - b_n;
    const double v = y2 - b_n;
    ThetaTriple out;
    out.upsilon = (u * t.theta_big - a_n * t.chi) / a_next;
    out.chi = (v * t.theta_big - a_n * t.upsilon) / a_next;
    out.theta_big = (u * v * t.theta_big - a_n * (u * t.upsilon + v * t.chi) +
                     a_n * a_n * t.theta_prev) /
                    (a_next * a_next);
    out.theta_prev = t.theta_big;
    return out;
}

struct PearsonResult {
    std::int64_t k_start = 0;
    std::vector<double> masses;
    // True when gamma vanished inside the range (ratio hit zero), which
    // truncates the support there.
    bool terminated_early = false;
};

// Propagates jump masses along a lattice by the Pearson-type relation
// beta mu(y_{k+1}) + gamma mu(y_k) = 0, ingested as the single ratio
// r(k) = gamma/beta at index k:  mu(y_{k+1}) = -r(k) mu(y_k).
// masses[i] is mu(y_{k_start + i}), i = 0..k_end-k_start.
inline PearsonResult pearson_masses(const std::function<double(std::int64_t)>& ratio,
                                    std::int64_t k_start, std::int64_t k_end,
                                    double seed_mass, bool allow_signed = false) {
    if (!(k_start < k_end)) throw Error("pearson_masses: k_start < k_end required");
    if (!(seed_mass > 0.0)) throw Error("pearson_masses: seed mass must be positive");
    PearsonResult res;
    res.k_start = k_start;
    res.masses.push_back(seed_mass);
    for (std::int64_t k = k_start; k < k_end; ++k) {
        const double r = ratio(k);
        if (!std::isfinite(r))
            throw ZeroDivision("pearson_masses: beta vanishes at k = " +
                               std::to_string(k));
        if (r == 0.0) {
            // gamma(x_k, y_k) = 0: the support stops at y_k.
            res.terminated_early = true;
            break;
        }
        const double next = -r * res.masses.back();
        if (!allow_signed && !(next > 0.0))
            throw SignViolation("pearson_masses: nonpositive mass at k = " +
                                std::to_string(k + 1));
        res.masses.push_back(next);
    }
    return res;
}

namespace detail {

inline double stieltjes_sum(const DiscreteMeasure& m, double y) {
    CompensatedSum s;
    const double tol = 1e-14 * (1.0 + std::abs(y));
    for (std::size_t k = 0; k < m.nodes.size(); ++k) {
        if (std::abs(y - m.nodes[k]) < tol)
            throw PoleAtNode("stieltjes_residual: ordinate hits a node");
        s.add(m.weights[k] / (y - m.nodes[k]));
    }
    return s.value();
}

} // namespace detail

// Residual W(x) (D S)(x) - 2 V(x) (M S)(x) - U(x) with S the Cauchy
// transform of the measure and D, M applied pointwise through the
// companion ordinates. Vanishes identically iff the measure satisfies
// the difference equation with this data.
inline double stieltjes_residual(const Conic& conic, const DifferenceEquationData& data,
                                 const DiscreteMeasure& measure, double x) {
    auto [phi1c, phi2c] = companion_roots(conic, x);
    if (std::abs(phi2c - phi1c) == 0.0)
        throw CoincidentRoots("stieltjes_residual: phi1 == phi2");
    const double phi1 = phi1c.real();
    const double phi2 = phi2c.real();
    const double s1 = detail::stieltjes_sum(measure, phi1);
    const double s2 = detail::stieltjes_sum(measure, phi2);
    const double ds = (s2 - s1) / (phi2 - phi1);
    const double ms = 0.5 * (s1 + s2);
    return data.W.eval(x) * ds - 2.0 * data.V.eval(x) * ms - data.U.eval(x);
}

// Residual of the first-order difference relation
//   W_n (D p_n) = Omega_n (M p_n) - a_n Theta_n (M p_{n-1}),
// given the values of p_n and p_{n-1} at (phi1, phi2) in the order
// companion_roots returns them.
inline double difference_relation_residual(const Conic& conic, const Polynomial& Wn,
                                           const Polynomial& Omegan,
                                           const Polynomial& Thetan, double a_n,
                                           std::pair<double, double> pn_vals,
                                           std::pair<double, double> pn1_vals,
                                           double x) {
    auto [phi1c, phi2c] = companion_roots(conic, x);
    const double gap = (phi2c - phi1c).real();
    if (gap == 0.0)
        throw CoincidentRoots("difference_relation_residual: phi1 == phi2");
    const double dpn = (pn_vals.second - pn_vals.first) / gap;
    const double mpn = 0.5 * (pn_vals.first + pn_vals.second);
    const double mpn1 = 0.5 * (pn1_vals.first + pn1_vals.second);
    return Wn.eval(x) * dpn - Omegan.eval(x) * mpn + a_n * Thetan.eval(x) * mpn1;
}

} // namespace snul
