#pragma once

#include <cmath>
#include <cstdint>
#include <limits>
#include <map>
#include <vector>

#include "snul/dd.hpp"
#include "snul/diophantine.hpp"
#include "snul/errors.hpp"
#include "snul/moments.hpp"
#include "snul/summation.hpp"

namespace snul {

// Orthonormal three-term recurrence data,
//   a_{n+1} p_{n+1}(x) = (x - b_n) p_n(x) - a_n p_{n-1}(x),
// with a[i] = a_{i+1} and b[i] = b_i. gamma_ratio[n] = 1/(2^n a_1...a_n),
// the quantity the big table compares against the closed formula.
struct RecurrenceCoeffs {
    std::vector<double> a;
    std::vector<double> b;
    std::vector<double> gamma_ratio;
    double mu0 = 0.0; // total mass, fixes p_0 = 1/sqrt(mu0)
};

// Discretized Stieltjes procedure: b_n = <x p_n, p_n>,
// a_{n+1} = ||(x - b_n) p_n - a_n p_{n-1}||, inner products against the
// discrete measure with fixed-order compensated sums.
// Returns a_1..a_N and b_0..b_N.
inline RecurrenceCoeffs stieltjes_recurrence(const DiscreteMeasure& m,
                                             std::int64_t N) {
    if (N < 1) throw Error("stieltjes_recurrence: N >= 1 required");
    const std::size_t n_nodes = m.nodes.size();
    if (static_cast<std::int64_t>(n_nodes) <= N)
        throw MeasureTooSmall("stieltjes_recurrence: need more than N nodes");

    RecurrenceCoeffs rc;
    rc.mu0 = m.total_mass();
    rc.gamma_ratio.push_back(1.0);

    const double p0 = 1.0 / std::sqrt(rc.mu0);
    std::vector<double> p_prev(n_nodes, 0.0);
    std::vector<double> p_cur(n_nodes, p0);

    double a_n = 0.0;
    for (std::int64_t n = 0;; ++n) {
        CompensatedSum bs;
        for (std::size_t k = 0; k < n_nodes; ++k)
            bs.add(m.weights[k] * m.nodes[k] * p_cur[k] * p_cur[k]);
        const double b_n = bs.value();
        rc.b.push_back(b_n);
        if (n == N) break;

        std::vector<double> t(n_nodes);
        CompensatedSum norm2;
        for (std::size_t k = 0; k < n_nodes; ++k) {
            t[k] = (m.nodes[k] - b_n) * p_cur[k] - a_n * p_prev[k];
            norm2.add(m.weights[k] * t[k] * t[k]);
        }
        const double a_next = std::sqrt(norm2.value());
        if (!(a_next > 0.0) || !std::isfinite(a_next))
            throw LossOfOrthogonality("stieltjes_recurrence: a_n <= 0 or NaN at n = " +
                                      std::to_string(n + 1));
        rc.a.push_back(a_next);
        rc.gamma_ratio.push_back(rc.gamma_ratio.back() / (2.0 * a_next));
        for (std::size_t k = 0; k < n_nodes; ++k) {
            p_prev[k] = p_cur[k];
            p_cur[k] = t[k] / a_next;
        }
        a_n = a_next;
    }
    return rc;
}

// Values p_0(x)..p_n(x) of the orthonormal polynomials by the recurrence.
inline std::vector<double> orthonormal_values(const RecurrenceCoeffs& rc,
                                              std::int64_t n, double x) {
    if (n > static_cast<std::int64_t>(rc.a.size()))
        throw Error("orthonormal_values: not enough recurrence coefficients");
    std::vector<double> p(static_cast<std::size_t>(n) + 1);
    p[0] = 1.0 / std::sqrt(rc.mu0);
    double prev = 0.0;
    for (std::int64_t k = 0; k < n; ++k) {
        const double next =
            ((x - rc.b[k]) * p[k] - (k > 0 ? rc.a[k - 1] : 0.0) * prev) / rc.a[k];
        prev = p[k];
        p[k + 1] = next;
    }
    return p;
}

// Second-kind function q_n(x) = sum_k w_k p_n(t_k)/(x - t_k).
inline double second_kind(const DiscreteMeasure& m, const RecurrenceCoeffs& rc,
                          std::int64_t n, double x) {
    const double tol = 1e-14 * (1.0 + std::abs(x));
    // p_n on every node, streamed through the recurrence.
    CompensatedSum sum;
    for (std::size_t k = 0; k < m.nodes.size(); ++k) {
        const double t = m.nodes[k];
        if (std::abs(x - t) < tol)
            throw PoleAtNode("second_kind: x coincides with a node");
        double p_prev = 0.0;
        double p_cur = 1.0 / std::sqrt(rc.mu0);
        for (std::int64_t j = 0; j < n; ++j) {
            const double next =
                ((t - rc.b[j]) * p_cur - (j > 0 ? rc.a[j - 1] : 0.0) * p_prev) / rc.a[j];
            p_prev = p_cur;
            p_cur = next;
        }
        sum.add(p_cur * m.weights[k] / (x - t));
    }
    return sum.value();
}

// q_0..q_n at a point off the support. q_n is the recessive solution of
// the shared three-term recurrence, so neither forward recurrence nor
// direct summation reaches it to full relative accuracy at large n.
// Instead the ratios t_k = q_k/q_{k-1} come from the downward continued
// fraction t_k = a_k / ((x - b_k) - a_{k+1} t_{k+1}), anchored at the
// directly summed q_0 (whose terms share one sign off the support). The
// start error at the top index is damped by the squared dominant-to-
// recessive ratio per step, so surplus coefficients in rc (beyond n) buy
// accuracy at index n; callers wanting many exact digits at n should
// supply coefficients well past n.
inline std::vector<double> second_kind_all(const DiscreteMeasure& m,
                                           const RecurrenceCoeffs& rc,
                                           std::int64_t n, double x) {
    const std::int64_t M = static_cast<std::int64_t>(rc.a.size());
    if (n > M) throw Error("second_kind_all: not enough recurrence coefficients");
    std::vector<double> q(static_cast<std::size_t>(n) + 1);
    q[0] = second_kind(m, rc, 0, x);
    if (n == 0) return q;
    std::vector<double> t(static_cast<std::size_t>(M) + 1, 0.0);
    for (std::int64_t k = M; k >= 1; --k) {
        const double denom =
            (x - rc.b[k]) - (k < M ? rc.a[k] * t[k + 1] : 0.0);
        if (denom == 0.0)
            throw ZeroDivision("second_kind_all: continued fraction breakdown");
        t[k] = rc.a[k - 1] / denom;
    }
    for (std::int64_t k = 1; k <= n; ++k) q[k] = q[k - 1] * t[k];
    return q;
}

// Sparse combination of Chebyshev T polynomials; degrees distinct.
struct ChebyshevCombo {
    std::vector<std::pair<std::int64_t, double>> terms;

    // Evaluation at y = cos(phi): T_d(cos phi) = cos(d phi).
    double eval_angle(double phi) const {
        double r = 0.0;
        for (const auto& [d, c] : terms) r += c * std::cos(double(d) * phi);
        return r;
    }

    double eval(double y) const {
        if (std::abs(y) <= 1.0) return eval_angle(std::acos(y));
        double r = 0.0;
        for (const auto& [d, c] : terms) {
            // T_d(y) by the recurrence, stable enough for |y| modestly > 1.
            double t0 = 1.0, t1 = y;
            if (d == 0) { r += c; continue; }
            for (std::int64_t k = 1; k < d; ++k) {
                const double t2 = 2.0 * y * t1 - t0;
                t0 = t1;
                t1 = t2;
            }
            r += c * t1;
        }
        return r;
    }
};

namespace detail {

inline double floor_parity_sign(DD rho, std::int64_t p) {
    const DD fl = dd_floor(DD(double(p)) * rho);
    const double parity = std::fmod(std::abs(to_double(fl)), 2.0);
    return (parity == 0.0) ? 1.0 : -1.0;
}

} // namespace detail

// Explicit orthonormal polynomial of the dense discrete measure:
// p_0 = 1/pi and, for n >= 1,
//   p_n = [ (eps+iota) T_n
//           - (-1)^floor(xi rho) iota T_|n-xi|
//           + (-1)^floor(eta rho) eps T_|n-eta| ]
//         / sqrt(2 pi^2 eps_{2n} iota_{2n} (eps+iota)),
// with xi, eta, eps, iota taken at index 2n-1. Coinciding degrees merge.
inline ChebyshevCombo explicit_pn(DD rho, std::int64_t n) {
    ChebyshevCombo combo;
    if (n == 0) {
        combo.terms.push_back({0, 1.0 / to_double(kPi)});
        return combo;
    }
    const ApproxState odd = state_at(rho, 2 * n - 1);
    const ApproxState even = state_at(rho, 2 * n);
    const double eps1 = to_double(odd.eps);
    const double iota1 = to_double(odd.iota);
    const double eps2 = to_double(even.eps);
    const double iota2 = to_double(even.iota);
    const double pi = to_double(kPi);
    const double denom = std::sqrt(2.0 * pi * pi * eps2 * iota2 * (eps1 + iota1));

    std::map<std::int64_t, double> by_degree;
    by_degree[n] += (eps1 + iota1) / denom;
    by_degree[std::abs(n - odd.xi)] -=
        detail::floor_parity_sign(rho, odd.xi) * iota1 / denom;
    by_degree[std::abs(n - odd.eta)] +=
        detail::floor_parity_sign(rho, odd.eta) * eps1 / denom;

    for (const auto& [d, c] : by_degree)
        if (c != 0.0) combo.terms.push_back({d, c});
    return combo;
}

// Predicted leading-coefficient ratio
// sqrt((eps_{2n-1}+iota_{2n-1}) / (8 eps_{2n} iota_{2n})) = 1/(2^n a_1...a_n).
inline double leading_coeff_formula(DD rho, std::int64_t n) {
    if (n < 1) throw Error("leading_coeff_formula: n >= 1 required");
    const ApproxState odd = state_at(rho, 2 * n - 1);
    const ApproxState even = state_at(rho, 2 * n);
    return std::sqrt(to_double(odd.eps + odd.iota) /
                     (8.0 * to_double(even.eps) * to_double(even.iota)));
}

struct TableRow {
    std::int64_t n = 0;
    double a_n = std::numeric_limits<double>::quiet_NaN();
    double b_n = std::numeric_limits<double>::quiet_NaN();
    double eps_2n1 = std::numeric_limits<double>::quiet_NaN();
    double iota_2n1 = std::numeric_limits<double>::quiet_NaN();
    double eps_2n = std::numeric_limits<double>::quiet_NaN();
    double iota_2n = std::numeric_limits<double>::quiet_NaN();
    double computed = std::numeric_limits<double>::quiet_NaN();
    double predicted = std::numeric_limits<double>::quiet_NaN();
    double rel_err = std::numeric_limits<double>::quiet_NaN();
};

struct TableReport {
    std::vector<TableRow> rows;
};

// Reproduces the 9-column table: Stieltjes coefficients on the K-node
// truncation next to the closed-form prediction from the diophantine data.
inline TableReport verify_table(DD rho, std::int64_t K, std::int64_t N) {
    TableReport report;
    const double theta = theta_from_rho(rho);
    const DiscreteMeasure measure = build_measure(theta, K);

    TableRow row0;
    row0.n = 0;
    if (N == 0) {
        // Degenerate single-row report: b_0 = tau_1/tau_0 on the truncation.
        CompensatedSum num;
        for (std::size_t k = 0; k < measure.nodes.size(); ++k)
            num.add(measure.weights[k] * measure.nodes[k]);
        row0.b_n = num.value() / measure.total_mass();
        report.rows.push_back(row0);
        return report;
    }

    const RecurrenceCoeffs rc = stieltjes_recurrence(measure, N);
    row0.b_n = rc.b[0];
    report.rows.push_back(row0);

    for (std::int64_t n = 1; n <= N; ++n) {
        TableRow row;
        row.n = n;
        row.a_n = rc.a[n - 1];
        row.b_n = rc.b[n];
        const ApproxState odd = state_at(rho, 2 * n - 1);
        const ApproxState even = state_at(rho, 2 * n);
        row.eps_2n1 = to_double(odd.eps);
        row.iota_2n1 = to_double(odd.iota);
        row.eps_2n = to_double(even.eps);
        row.iota_2n = to_double(even.iota);
        row.computed = rc.gamma_ratio[n];
        row.predicted = leading_coeff_formula(rho, n);
        row.rel_err = std::abs(row.computed - row.predicted) / std::abs(row.predicted);
        report.rows.push_back(row);
    }
    return report;
}

} // namespace snul
