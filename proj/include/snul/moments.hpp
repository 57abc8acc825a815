#pragma once

#include <cmath>
#include <cstdint>
#include <vector>

#include "snul/dd.hpp"
#include "snul/errors.hpp"
#include "snul/summation.hpp"

namespace snul {

// Truncated version of the dense discrete measure with jumps
// mu(y_k) = 1/(k-1/2)^2 at y_k = cos((k-1/2) theta). The two-sided index
// window k = -K+1..K pairs k with 1-k on the same geometric point
// (cos is even), so the constructor merges each pair into a single node
// of doubled mass: K nodes cos((k-1/2) theta), weights 2/(k-1/2)^2.
struct DiscreteMeasure {
    std::vector<double> nodes;
    std::vector<double> weights;
    double theta = 0.0;
    std::int64_t K = 0;

    double total_mass() const {
        CompensatedSum s;
        for (double w : weights) s.add(w);
        return s.value();
    }
};

// Chebyshev moment tau_p of the full (untruncated) measure in closed
// form: 2 pi^2 (-1)^floor(p rho) (floor(p rho) + 1/2 - p rho).
inline double tau_closed(DD rho, std::int64_t p) {
    const DD prho = DD(double(p)) * rho;
    const DD fl = dd_floor(prho);
    const double parity = std::fmod(std::abs(to_double(fl)), 2.0);
    const double sign = (parity == 0.0) ? 1.0 : -1.0;
    const double pi = to_double(kPi);
    return 2.0 * pi * pi * sign * to_double(fl + DD(0.5) - prho);
}

// Equivalent ceiling form (14''): -2 pi^2 (-1)^ceil(p rho) (ceil(p rho) - 1/2 - p rho).
inline double tau_closed_ceil_form(DD rho, std::int64_t p) {
    const DD prho = DD(double(p)) * rho;
    const DD cl = dd_ceil(prho);
    const double parity = std::fmod(std::abs(to_double(cl)), 2.0);
    const double sign = (parity == 0.0) ? 1.0 : -1.0;
    const double pi = to_double(kPi);
    return -2.0 * pi * pi * sign * to_double(cl - DD(0.5) - prho);
}

// Truncated Fourier form 8 * sum_{m=0}^{terms-1} cos((2m+1) p theta/2)/(2m+1)^2,
// summed in fixed ascending-m order with compensation.
inline double tau_series(double theta, std::int64_t p, std::int64_t terms) {
    if (terms < 1) throw Error("tau_series: terms >= 1 required");
    const double half = 0.5 * double(p) * theta;
    CompensatedSum sum;
    for (std::int64_t m = 0; m < terms; ++m) {
        const double odd = double(2 * m + 1);
        sum.add(std::cos(odd * half) / (odd * odd));
    }
    return 8.0 * sum.value();
}

inline DiscreteMeasure build_measure(double theta, std::int64_t K) {
    if (K < 1) throw Error("build_measure: K >= 1 required");
    DiscreteMeasure m;
    m.theta = theta;
    m.K = K;
    m.nodes.reserve(static_cast<std::size_t>(K));
    m.weights.reserve(static_cast<std::size_t>(K));
    for (std::int64_t k = 1; k <= K; ++k) {
        const double half = double(k) - 0.5;
        m.nodes.push_back(std::cos(half * theta));
        m.weights.push_back(2.0 / (half * half));
    }
    return m;
}

} // namespace snul
