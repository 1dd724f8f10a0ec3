#pragma once

// Test-only numerical oracles, independent of the closed forms they check:
// adaptive Simpson quadrature and the overload-distortion integrals evaluated
// directly from the defining densities.

#include <cmath>
#include <functional>
#include <numbers>

#include "udr/signal.hpp"

namespace oracle {

namespace detail {

inline double simpson(double a, double fa, double b, double fb, double fm) {
    return (b - a) / 6.0 * (fa + 4.0 * fm + fb);
}

template <class F>
double adapt(const F& f, double a, double fa, double b, double fb, double m, double fm,
             double whole, double tol, int depth) {
    const double lm = 0.5 * (a + m);
    const double rm = 0.5 * (m + b);
    const double flm = f(lm);
    const double frm = f(rm);
    const double left = simpson(a, fa, m, fm, flm);
    const double right = simpson(m, fm, b, fb, frm);
    const double delta = left + right - whole;
    if (depth <= 0 || std::fabs(delta) <= 15.0 * tol) {
        return left + right + delta / 15.0;
    }
    return adapt(f, a, fa, m, fm, lm, flm, left, 0.5 * tol, depth - 1) +
           adapt(f, m, fm, b, fb, rm, frm, right, 0.5 * tol, depth - 1);
}

} // namespace detail

/// Adaptive Simpson to a tolerance relative to a coarse first-pass estimate.
template <class F>
double integrate(const F& f, double a, double b, double rel_tol = 1e-12) {
    if (!(b > a)) return 0.0;
    // Coarse composite pass to scale the absolute tolerance.
    const int coarse = 512;
    double rough = 0.0;
    const double h = (b - a) / coarse;
    for (int i = 0; i < coarse; ++i) {
        const double x0 = a + i * h;
        const double x1 = x0 + h;
        rough += (h / 6.0) * (f(x0) + 4.0 * f(0.5 * (x0 + x1)) + f(x1));
    }
    const double tol = std::max(std::fabs(rough) * rel_tol, 5e-300);
    const double m = 0.5 * (a + b);
    const double fa = f(a);
    const double fb = f(b);
    const double fm = f(m);
    const double whole = detail::simpson(a, fa, b, fb, fm);
    return detail::adapt(f, a, fa, b, fb, m, fm, whole, tol, 60);
}

inline double normal_density(double x) {
    return std::exp(-0.5 * x * x) / std::sqrt(2.0 * std::numbers::pi);
}

inline double laplace_density(double x) {
    // Unit variance: scale b = 1/sqrt(2).
    const double b = 1.0 / std::numbers::sqrt2;
    return std::exp(-std::fabs(x) / b) / (2.0 * b);
}

inline double uniform_density(double x) {
    // Unit variance: support [-sqrt(3), sqrt(3)].
    return (std::fabs(x) <= std::numbers::sqrt3) ? 1.0 / (2.0 * std::numbers::sqrt3) : 0.0;
}

/// Two-sided overload distortion 2 * integral_gamma^U (x - gamma)^2 f(x) dx
/// for a unit-variance density, straight from the definition. Tail cutoffs
/// keep the truncated remainder far below 1e-13 relative.
inline double overload_by_quadrature(udr::DistributionKind kind, double gamma) {
    switch (kind) {
    case udr::DistributionKind::uniform: {
        const double upper = std::numbers::sqrt3;
        if (gamma >= upper) return 0.0;
        return 2.0 * integrate(
                         [gamma](double x) {
                             return (x - gamma) * (x - gamma) * uniform_density(x);
                         },
                         gamma, upper);
    }
    case udr::DistributionKind::gaussian:
        return 2.0 * integrate(
                         [gamma](double x) {
                             return (x - gamma) * (x - gamma) * normal_density(x);
                         },
                         gamma, gamma + 13.0);
    case udr::DistributionKind::laplacian:
        return 2.0 * integrate(
                         [gamma](double x) {
                             return (x - gamma) * (x - gamma) * laplace_density(x);
                         },
                         gamma, gamma + 32.0);
    }
    return 0.0;
}

/// Q(x) from the defining integral of the normal density.
inline double q_by_quadrature(double x) {
    return integrate([](double t) { return normal_density(t); }, x, x + 14.0);
}

} // namespace oracle
