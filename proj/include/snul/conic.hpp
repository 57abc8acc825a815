#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <utility>
#include <vector>

#include "snul/errors.hpp"

namespace snul {

// Coefficients of A y^2 + 2 B x y + C x^2 + 2 D y + 2 E x + F = 0,
// stored exactly as given.
struct Conic {
    double A = 0, B = 0, C = 0, D = 0, E = 0, F = 0;

    double eval(double x, double y) const {
        return A * y * y + 2 * B * x * y + C * x * x + 2 * D * y + 2 * E * x + F;
    }

    // Largest absolute monomial magnitude; the natural scale for
    // "this point lies on the conic" residuals.
    double eval_scale(double x, double y) const {
        double m = std::abs(F);
        m = std::max(m, std::abs(A * y * y));
        m = std::max(m, std::abs(2 * B * x * y));
        m = std::max(m, std::abs(C * x * x));
        m = std::max(m, std::abs(2 * D * y));
        m = std::max(m, std::abs(2 * E * x));
        return std::max(m, 1.0);
    }
};

enum class LatticeKind { Hyperbolic, Trigonometric, QLinear, Parabolic, Uniform };

inline const char* to_string(LatticeKind k) {
    switch (k) {
        case LatticeKind::Hyperbolic: return "hyperbolic";
        case LatticeKind::Trigonometric: return "trigonometric";
        case LatticeKind::QLinear: return "q-linear";
        case LatticeKind::Parabolic: return "parabolic";
        case LatticeKind::Uniform: return "uniform";
    }
    return "?";
}

// Classified lattice geometry. `conic` holds the classifier's sign
// normalization (A >= 0); the zero-set is unchanged.
struct LatticeSpec {
    LatticeKind kind = LatticeKind::Hyperbolic;
    Conic conic;
    double x_c = 0.0, y_c = 0.0;
    double F_tilde = 0.0;
    std::complex<double> zeta_sqrtA{0.0, 0.0};
    std::complex<double> zeta_sqrtC{0.0, 0.0};
    std::complex<double> q{1.0, 0.0};
    double theta = 0.0;          // trigonometric case only, in (0, 2*pi)
    bool non_generic = false;    // q landed on +-1 for a centered conic
    // The +-1/2 shift in the q-linear and parabolic parametrizations is
    // a free choice; both signs satisfy the conic.
    int orientation = +1;
    double qlinear_scale = 1.0;  // the free factor X in x - x_c = X sqrt(A) q^s
};

struct LatticePoint {
    double s = 0.0;
    double x = 0.0;
    double y = 0.0;
};

// Canonical root of q + 1/q = 4B^2/(AC) - 2 with |q| >= 1,
// ties broken towards Im q >= 0.
inline std::complex<double> q_from_conic(const Conic& c) {
    const double ac = c.A * c.C;
    if (ac == 0.0) throw DegenerateConic("q_from_conic: AC = 0");
    const double t = 4.0 * c.B * c.B / ac - 2.0;
    if (std::abs(t) <= 2.0) {
        // Conjugate pair on the unit circle; pick the upper half plane.
        return {t / 2.0, std::sqrt(std::max(0.0, 4.0 - t * t)) / 2.0};
    }
    const double root = std::sqrt(t * t - 4.0);
    const double q = (t > 0.0) ? (t + root) / 2.0 : (t - root) / 2.0;
    return {q, 0.0};
}

// The two ordinates of the conic over abscissa x, i.e. the roots in y of
// A y^2 + 2(Bx+D) y + (Cx^2 + 2Ex + F) = 0, ordered by the sign in
// front of the square root (phi1 takes the minus branch).
inline std::pair<std::complex<double>, std::complex<double>>
companion_roots(const Conic& c, double x) {
    if (c.A == 0.0) throw LinearInY("companion_roots: A = 0");
    const double half_b = c.B * x + c.D;
    const double prod = (c.C * x * x + 2.0 * c.E * x + c.F) / c.A;
    const double disc = half_b * half_b / (c.A * c.A) - prod;
    const std::complex<double> root = std::sqrt(std::complex<double>(disc, 0.0));
    const std::complex<double> mid = -half_b / c.A;
    return {mid - root, mid + root};
}

inline LatticeSpec classify(const Conic& input) {
    if (input.A == 0.0 && input.B == 0.0 && input.C == 0.0)
        throw DegenerateConic("classify: A = B = C = 0");

    // Normalize the overall sign so A >= 0 (same zero-set). The centerless
    // parametrizations below assume this orientation.
    Conic c = input;
    if (c.A < 0.0 || (c.A == 0.0 && c.C < 0.0)) {
        c = {-c.A, -c.B, -c.C, -c.D, -c.E, -c.F};
    }

    const double disc = c.B * c.B - c.A * c.C;
    const double disc_scale = std::max(c.B * c.B, std::abs(c.A * c.C));
    const bool centered = std::abs(disc) > 1e-12 * disc_scale;

    LatticeSpec spec;
    spec.conic = c;

    if (!centered) {
        // Parabolic or uniform. B^2 = AC >= 0, and A >= 0 after the flip.
        const double sA = std::sqrt(std::max(c.A, 0.0));
        // sqrt(C) signed so that sqrt(A)*sqrt(C) = -B, the branch the
        // q -> 1 limit of the centered parametrization selects.
        const double sC = (c.A > 0.0) ? -c.B / sA : std::sqrt(std::max(c.C, 0.0));
        const double pivot = c.D * sC + c.E * sA;
        const double pscale = std::max({std::abs(c.D * sC), std::abs(c.E * sA), 1e-300});
        spec.kind = (std::abs(pivot) > 1e-12 * pscale) ? LatticeKind::Parabolic
                                                       : LatticeKind::Uniform;
        spec.q = {1.0, 0.0};
        return spec;
    }

    if (c.A * c.C == 0.0)
        throw DegenerateConic("classify: AC = 0 with B^2 - AC != 0; "
                              "the two-ordinate scheme fails");

    spec.x_c = (c.A * c.E - c.B * c.D) / disc;
    spec.y_c = (c.C * c.D - c.B * c.E) / disc;
    spec.F_tilde = c.F + c.D * spec.y_c + c.E * spec.x_c;
    spec.q = q_from_conic(c);

    const double t = 4.0 * c.B * c.B / (c.A * c.C) - 2.0;
    spec.non_generic = std::abs(std::abs(t) - 2.0) <= 1e-12 * std::max(2.0, std::abs(t));

    const double fscale =
        std::max({std::abs(c.F), std::abs(c.D * spec.y_c), std::abs(c.E * spec.x_c)});
    const bool f_tilde_zero =
        (fscale == 0.0) ? (spec.F_tilde == 0.0)
                        : (std::abs(spec.F_tilde) <= 1e-12 * fscale);

    const std::complex<double> zeta =
        std::sqrt(std::complex<double>(spec.F_tilde / (4.0 * disc), 0.0));
    const std::complex<double> sqrtA = std::sqrt(std::complex<double>(c.A, 0.0));
    const std::complex<double> sqrtAC = std::sqrt(std::complex<double>(c.A * c.C, 0.0));
    spec.zeta_sqrtA = zeta * sqrtA;
    // Chosen so that zeta_sqrtA * zeta_sqrtC = zeta^2 sqrt(AC); the cross
    // term of the conic cancels only on this branch.
    spec.zeta_sqrtC = (spec.zeta_sqrtA != 0.0)
                          ? zeta * zeta * sqrtAC / spec.zeta_sqrtA
                          : zeta * sqrtAC / sqrtA;

    if (f_tilde_zero) {
        spec.kind = LatticeKind::QLinear;
    } else if (c.A * c.C > 0.0 && std::abs(t) < 2.0 && !spec.non_generic) {
        spec.kind = LatticeKind::Trigonometric;
        // q^{1/2} + q^{-1/2} = -2B/sqrt(AC) fixes theta in (0, 2*pi).
        spec.theta = 2.0 * std::acos(std::clamp(-c.B / std::sqrt(c.A * c.C), -1.0, 1.0));
    } else {
        spec.kind = LatticeKind::Hyperbolic;
    }
    return spec;
}

namespace detail {

// Half-step consistent with the sign convention
// q^{1/2} + q^{-1/2} = -2B / sqrt(AC).
inline std::complex<double> half_power_root(const LatticeSpec& spec) {
    const Conic& c = spec.conic;
    const std::complex<double> sqrtAC = std::sqrt(std::complex<double>(c.A * c.C, 0.0));
    const std::complex<double> target = -2.0 * c.B / sqrtAC;
    std::complex<double> r = std::sqrt(spec.q);
    if (std::abs(r + 1.0 / r - target) > std::abs(-r - 1.0 / r - target)) r = -r;
    return r;
}

inline LatticePoint centered_point(const LatticeSpec& spec, double s,
                                   std::complex<double> log_q) {
    const std::complex<double> qs = std::exp(s * log_q);
    const std::complex<double> qh = std::exp((s - 0.5 * spec.orientation) * log_q);
    LatticePoint p;
    p.s = s;
    if (spec.kind == LatticeKind::QLinear) {
        const Conic& c = spec.conic;
        const std::complex<double> sqrtA = std::sqrt(std::complex<double>(c.A, 0.0));
        const std::complex<double> sqrtC_branch =
            std::sqrt(std::complex<double>(c.A * c.C, 0.0)) / sqrtA;
        p.x = spec.x_c + (spec.qlinear_scale * sqrtA * qs).real();
        p.y = spec.y_c + (spec.qlinear_scale * sqrtC_branch * qh).real();
    } else {
        p.x = spec.x_c + (spec.zeta_sqrtA * (qs + 1.0 / qs)).real();
        p.y = spec.y_c + (spec.zeta_sqrtC * (qh + 1.0 / qh)).real();
    }
    return p;
}

} // namespace detail

// Points at s = s1, s1+1, ..., s1+count-1 under the parametrization
// matching spec.kind. (x(s), y(s)) and (x(s), y(s+1)) both lie on the
// conic; y(s) and y(s+1) are the two ordinates over x(s).
inline std::vector<LatticePoint> lattice_points(const LatticeSpec& spec,
                                                double s1, int count) {
    if (count < 1) throw Error("lattice_points: count must be >= 1");
    std::vector<LatticePoint> pts;
    pts.reserve(static_cast<std::size_t>(count));
    const Conic& c = spec.conic;

    switch (spec.kind) {
        case LatticeKind::Trigonometric: {
            // Real trigonometric form; keeps points exactly real.
            const double rA = spec.zeta_sqrtA.real();
            const double rC = spec.zeta_sqrtC.real();
            for (int k = 0; k < count; ++k) {
                const double s = s1 + k;
                pts.push_back({s, spec.x_c + 2.0 * rA * std::cos(s * spec.theta),
                               spec.y_c +
                                   2.0 * rC *
                                       std::cos((s - 0.5 * spec.orientation) * spec.theta)});
            }
            break;
        }
        case LatticeKind::Hyperbolic:
        case LatticeKind::QLinear: {
            const std::complex<double> r = detail::half_power_root(spec);
            const std::complex<double> log_q = 2.0 * std::log(r);
            for (int k = 0; k < count; ++k)
                pts.push_back(detail::centered_point(spec, s1 + k, log_q));
            break;
        }
        case LatticeKind::Parabolic: {
            if (c.A == 0.0 || c.C == 0.0)
                throw DegenerateConic("lattice_points: parabolic case needs AC != 0");
            const double sA = std::sqrt(c.A);
            const double sC = -c.B / sA;
            const double pivot = c.D * sC + c.E * sA;
            const double curv = 2.0 * pivot / (c.A * c.C);
            const double x0 = (c.D * c.D - c.A * c.F) / (2.0 * c.A * pivot);
            const double y0 = (c.E * c.E - c.C * c.F) / (2.0 * c.C * pivot);
            for (int k = 0; k < count; ++k) {
                const double s = s1 + k;
                const double sh = s - 0.5 * spec.orientation;
                pts.push_back({s, sA * (x0 - curv * s * s), sC * (y0 - curv * sh * sh)});
            }
            break;
        }
        case LatticeKind::Uniform: {
            if (c.A == 0.0 || c.C == 0.0)
                throw DegenerateConic("lattice_points: uniform case needs AC != 0");
            const double rad = c.D * c.D - c.A * c.F;
            if (rad < 0.0)
                throw DegenerateConic("lattice_points: no real uniform lattice (D^2 < AF)");
            const double g = std::sqrt(rad);
            // sqrt(AC) on the branch sqrt(A)*sqrt(C) = -B.
            const double step = 2.0 * g / c.B;
            for (int k = 0; k < count; ++k) {
                const double s = s1 + k;
                pts.push_back({s, step * s,
                               -c.E / c.B -
                                   (2.0 * g / c.A) * (s - 0.5 * spec.orientation)});
            }
            break;
        }
    }
    return pts;
}

} // namespace snul
