#pragma once

#include <functional>
#include <vector>

namespace liouville::math {

using Fn1 = std::function<double(double)>;

/// Adaptive integral of a smooth integrand over [a, b] to absolute/relative
/// tolerance tol (Gauss-Kronrod kernel).
double integrate_smooth(const Fn1& f, double a, double b, double tol = 1e-12);

/// Bisection root refinement on [lo, hi] (f(lo), f(hi) of opposite sign),
/// to relative tolerance xtol_rel on the bracket width.
double bisect(const Fn1& f, double lo, double hi, double xtol_rel = 1e-13);

/// Scan [a, b] in n panels and refine every sign change by bisection.
std::vector<double> find_roots(const Fn1& f, double a, double b, int n = 2000,
                               double xtol_rel = 1e-13);

/// Centered finite difference with the optimal eps^(1/3) step scaled by
/// `scale` (the width of the domain of interest).
double central_diff(const Fn1& f, double x, double scale = 1.0);

/// Cumulative trapezoid of samples (x_i, f_i); out[0] = 0.
std::vector<double> cumulative_trapezoid(const std::vector<double>& x,
                                         const std::vector<double>& f);

}  // namespace liouville::math
