#pragma once

#include <cstdint>
#include <vector>

#include "snul/dd.hpp"
#include "snul/errors.hpp"

namespace snul {

// Best-approximation state for rho = theta/(2*pi): at index j,
//   xi   minimizes frac(p*rho)        over p = 1..j (attained value eps),
//   eta  minimizes 1 - frac(p*rho)    over p = 1..j (attained value iota).
// New denominators appear at j = xi + eta (sum-of-last-two update).
struct ApproxState {
    DD rho;
    std::int64_t j = 1;
    std::int64_t xi = 1;
    std::int64_t eta = 1;
    DD eps;
    DD iota;
    bool last_event_was_xi = false; // which side the event at index j renewed
};

inline ApproxState approx_init(DD rho) {
    const DD f = dd_frac(rho);
    if (f == DD(0.0)) throw IntegerRho("approx_init: frac(rho) = 0");
    ApproxState s;
    s.rho = rho;
    s.j = 1;
    s.xi = 1;
    s.eta = 1;
    s.eps = f;
    s.iota = DD(1.0) - f;
    return s;
}

// Advances to the next event index l = xi + eta. eps/iota are recomputed
// from frac(denominator * rho) rather than carried by subtraction alone;
// the subtractive form is what the update rule states and tests cross-check
// it, but recomputation stops cancellation drift.
inline ApproxState approx_advance(const ApproxState& s) {
    if (s.eps == s.iota)
        throw TieBreak("approx_advance: eps == iota (rational rho?)");
    ApproxState n = s;
    const std::int64_t ell = s.xi + s.eta;
    n.j = ell;
    if (s.eps > s.iota) {
        n.xi = ell;
        n.eps = dd_frac(DD(double(ell)) * s.rho);
        n.last_event_was_xi = true;
    } else {
        n.eta = ell;
        n.iota = DD(1.0) - dd_frac(DD(double(ell)) * s.rho);
        n.last_event_was_xi = false;
    }
    return n;
}

// State carried forward to an arbitrary index j >= 1 (between events the
// previous xi, eta, eps, iota persist).
inline ApproxState state_at(DD rho, std::int64_t j) {
    ApproxState s = approx_init(rho);
    while (s.xi + s.eta <= j) s = approx_advance(s);
    s.j = j;
    return s;
}

struct BruteforceResult {
    std::int64_t xi = 1;
    std::int64_t eta = 1;
    DD eps;
    DD iota;
};

// Direct argmin scan over p = 1..j; the oracle for approx_advance.
inline BruteforceResult approx_bruteforce(DD rho, std::int64_t j) {
    BruteforceResult r;
    r.eps = dd_frac(rho);
    r.iota = DD(1.0) - r.eps;
    for (std::int64_t p = 2; p <= j; ++p) {
        const DD f = dd_frac(DD(double(p)) * rho);
        if (f < r.eps) {
            r.eps = f;
            r.xi = p;
        }
        const DD g = DD(1.0) - f;
        if (g < r.iota) {
            r.iota = g;
            r.eta = p;
        }
    }
    return r;
}

// Verifies, for N = 1..2n-1 with xi = xi_{2n-1} and eta = eta_{2n-1}:
//   floor(N rho) - floor(xi rho)  == floor((N - xi) rho)
//   floor(N rho) - floor(eta rho) == ceil((N - eta) rho)
inline bool floor_identities_check(DD rho, std::int64_t n) {
    if (n < 1) throw Error("floor_identities_check: n >= 1 required");
    const ApproxState s = state_at(rho, 2 * n - 1);
    const double fxi = to_double(dd_floor(DD(double(s.xi)) * rho));
    const double feta = to_double(dd_floor(DD(double(s.eta)) * rho));
    for (std::int64_t N = 1; N <= 2 * n - 1; ++N) {
        const double fN = to_double(dd_floor(DD(double(N)) * rho));
        const double lhs_xi = fN - fxi;
        const double rhs_xi = to_double(dd_floor(DD(double(N - s.xi)) * rho));
        if (lhs_xi != rhs_xi) return false;
        const double lhs_eta = fN - feta;
        const double rhs_eta = to_double(dd_ceil(DD(double(N - s.eta)) * rho));
        if (lhs_eta != rhs_eta) return false;
    }
    return true;
}

} // namespace snul
