#include "liouville/quadrature.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include <cmath>

#include "liouville/errors.hpp"

namespace liouville::math {

double integrate_smooth(const Fn1& f, double a, double b, double tol) {
    if (a == b) return 0.0;
    using GK = boost::math::quadrature::gauss_kronrod<double, 15>;
    double error = 0;
    const double v = GK::integrate(f, a, b, 14, tol, &error);
    return v;
}

double bisect(const Fn1& f, double lo, double hi, double xtol_rel) {
    double flo = f(lo), fhi = f(hi);
    if (flo == 0) return lo;
    if (fhi == 0) return hi;
    if ((flo < 0) == (fhi < 0))
        throw DomainError("bisect: endpoints do not bracket a root");
    const double scale = std::max({std::fabs(lo), std::fabs(hi), 1e-30});
    for (int i = 0; i < 200 && hi - lo > xtol_rel * scale; ++i) {
        const double mid = 0.5 * (lo + hi);
        const double fm = f(mid);
        if (fm == 0) return mid;
        if ((flo < 0) == (fm < 0)) { lo = mid; flo = fm; }
        else { hi = mid; }
    }
    return 0.5 * (lo + hi);
}

std::vector<double> find_roots(const Fn1& f, double a, double b, int n, double xtol_rel) {
    std::vector<double> roots;
    double xprev = a, fprev = f(a);
    for (int i = 1; i <= n; ++i) {
        const double x = a + (b - a) * static_cast<double>(i) / n;
        const double fx = f(x);
        if (fprev == 0) {
            roots.push_back(xprev);
        } else if ((fprev < 0) != (fx < 0)) {
            roots.push_back(bisect(f, xprev, x, xtol_rel));
        }
        xprev = x;
        fprev = fx;
    }
    if (fprev == 0) roots.push_back(b);
    return roots;
}

double central_diff(const Fn1& f, double x, double scale) {
    const double h = std::cbrt(2.2e-16) * std::max(scale, std::fabs(x));
    return (f(x + h) - f(x - h)) / (2 * h);
}

std::vector<double> cumulative_trapezoid(const std::vector<double>& x,
                                         const std::vector<double>& f) {
    std::vector<double> out(x.size(), 0.0);
    for (std::size_t i = 1; i < x.size(); ++i)
        out[i] = out[i - 1] + 0.5 * (f[i] + f[i - 1]) * (x[i] - x[i - 1]);
    return out;
}

}  // namespace liouville::math
