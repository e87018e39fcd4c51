#include "liouville/catalog.hpp"

#include <cmath>
#include <cstdio>

namespace liouville::catalog {

namespace {

std::string lit(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "(%.17g)", v);
    return buf;
}

Vec3 tangential(const Vec3& q, const Vec3& grad) {
    return grad - q * (q.dot(grad) / q.norm2());
}

}  // namespace

// ------------------------------------------------------------------ Neumann

NeumannParams NeumannParams::from_couplings(double a, double b, double c, double m) {
    if (!(a > b && b > c && c > 0))
        throw BadCouplings("Neumann: need a > b > c > 0");
    NeumannParams p;
    p.a_c = a; p.b_c = b; p.c_c = c;
    p.omega = std::sqrt(2.0 * (a - c) / m);
    p.sigma = std::sqrt((b - c) / (a - c));
    return p;
}

NeumannParams NeumannParams::from_omega(double omega, double sigma, double m, double c) {
    if (!(omega > 0) || !(sigma > 0 && sigma < 1) || c < 0)
        throw BadCouplings("Neumann: need omega > 0, 0 < sigma < 1, c >= 0");
    NeumannParams p;
    p.omega = omega;
    p.sigma = sigma;
    p.c_c = c;
    p.a_c = c + 0.5 * m * omega * omega;
    p.b_c = c + sigma * sigma * 0.5 * m * omega * omega;
    return p;
}

SphericalSystem neumann_spherical(const NeumannParams& p, double R, double m) {
    const auto cfg = ManifoldConfig::make(R, p.sigma, m);
    const double K = 0.5 * m * p.omega * p.omega * R * R;
    const double sb2 = cfg.sigma_bar * cfg.sigma_bar;
    SphericalSystem sys;
    sys.cfg = cfg;
    sys.label = "neumann";
    sys.F = systems::PotentialPiece::from_functions(
        [K, sb2](double U) { return K * (U * U - sb2) * U * U; },
        [K, sb2](double U) { return 2.0 * K * U * (2.0 * U * U - sb2); },
        lit(K) + "*(U^2-sigma_bar^2)*U^2");
    sys.G = systems::PotentialPiece::from_functions(
        [K, sb2](double V) { return K * (sb2 - V * V) * V * V; },
        [K, sb2](double V) { return 2.0 * K * V * (sb2 - 2.0 * V * V); },
        lit(K) + "*(sigma_bar^2-V^2)*V^2");
    const double a = p.a_c, b = p.b_c, c = p.c_c;
    sys.gauge_offset = c * R * R;  // printed aX^2+bY^2+cZ^2 = separable + cR^2
    sys.cart_value = [a, b, c, R](const Vec3& q) {
        return a * q.x * q.x + b * q.y * q.y + c * q.z * q.z - c * R * R;
    };
    sys.cart_grad_tangent = [a, b, c](const Vec3& q) {
        return tangential(q, {2.0 * a * q.x, 2.0 * b * q.y, 2.0 * c * q.z});
    };
    return sys;
}

PlanarSystem neumann_planar(const NeumannParams& p, double R, double m) {
    const auto cfg = ManifoldConfig::make(R, p.sigma, m);
    const double K = 0.5 * m * p.omega * p.omega * R * R;
    const double s2 = cfg.sigma * cfg.sigma, sb2 = cfg.sigma_bar * cfg.sigma_bar;
    const double Ksb2 = K * sb2;
    PlanarSystem sys;
    sys.cfg = cfg;
    sys.label = "neumann-planar";
    sys.f = systems::PotentialPiece::from_functions(
        [Ksb2, s2, sb2](double u) {
            const double u2 = u * u;
            return Ksb2 * u2 * (u2 - 1.0) / (sb2 * u2 + s2);
        },
        [Ksb2, s2, sb2](double u) {
            const double u2 = u * u, D = sb2 * u2 + s2;
            const double N = u2 * u2 - u2;
            return Ksb2 * ((4.0 * u2 - 2.0) * u * D - N * 2.0 * sb2 * u) / (D * D);
        },
        lit(Ksb2) + "*u^2*(u^2-1)/(sigma_bar^2*u^2+sigma^2)");
    sys.g = systems::PotentialPiece::from_functions(
        [Ksb2, s2, sb2](double v) {
            const double v2 = v * v;
            return Ksb2 * v2 * (1.0 - v2) / (sb2 * v2 + s2);
        },
        [Ksb2, s2, sb2](double v) {
            const double v2 = v * v, D = sb2 * v2 + s2;
            const double N = v2 - v2 * v2;
            return Ksb2 * ((2.0 - 4.0 * v2) * v * D - N * 2.0 * sb2 * v) / (D * D);
        },
        lit(Ksb2) + "*v^2*(1-v^2)/(sigma_bar^2*v^2+sigma^2)");
    const double R2 = R * R;
    sys.cart_value = [K, s2, R2](const Vec2& x) {
        const double rho = x.x * x.x + s2 * x.y * x.y;
        return K * rho / (R2 + rho);
    };
    sys.cart_grad = [K, s2, R2](const Vec2& x) {
        const double rho = x.x * x.x + s2 * x.y * x.y;
        const double w = R2 + rho;
        const double c = K * R2 / (w * w);
        return Vec2{2.0 * c * x.x, 2.0 * c * s2 * x.y};
    };
    return sys;
}

double neumann_planar_cartesian(const NeumannParams& p, double R, double m,
                                double x1, double x2) {
    const double K = 0.5 * m * p.omega * p.omega * R * R;
    const double s2 = p.sigma * p.sigma;
    const double rho = x1 * x1 + s2 * x2 * x2;
    return K * rho / (R * R + rho);
}

// ------------------------------------------------------------------ Killing

SphericalSystem killing_spherical(const KillingParams& p, Chart hemisphere,
                                  const ManifoldConfig& cfg) {
    if (p.gamma1 < 0 || p.gamma2 < 0)
        throw BadCouplings("Killing: strengths must be nonnegative");
    const double R = cfg.R;
    const double ksum = (p.gamma1 + p.gamma2) / R;
    const double kdif = (p.gamma1 - p.gamma2) / R;
    const double sF = hemisphere == Chart::North ? -1.0 : +1.0;  // -+ in F_{+-}
    SphericalSystem sys;
    sys.cfg = cfg;
    sys.label = hemisphere == Chart::North ? "killing-north" : "killing-south";
    sys.F = systems::PotentialPiece::from_functions(
        [sF, ksum](double U) { return sF * ksum * U * std::sqrt(1.0 - U * U); },
        [sF, ksum](double U) {
            return sF * ksum * (1.0 - 2.0 * U * U) / std::sqrt(1.0 - U * U);
        },
        lit(sF * ksum) + "*U*sqrt(1-U^2)");
    sys.G = systems::PotentialPiece::from_functions(
        [kdif](double V) { return -kdif * V * std::sqrt(1.0 - V * V); },
        [kdif](double V) {
            return -kdif * (1.0 - 2.0 * V * V) / std::sqrt(1.0 - V * V);
        },
        lit(-kdif) + "*V*sqrt(1-V^2)");
    const double g1 = p.gamma1, g2 = p.gamma2;
    const double s = cfg.sigma, sb = cfg.sigma_bar;
    sys.gauge_offset = 0;
    sys.cart_value = [g1, g2, s, sb, R](const Vec3& q) {
        const double qs = q.norm();
        const double c1 = (s * q.z + sb * q.x) / qs;
        const double c2 = (s * q.z - sb * q.x) / qs;
        const double s1sq = (1.0 - c1) * (1.0 + c1), s2sq = (1.0 - c2) * (1.0 + c2);
        if (s1sq < 1e-24 || s2sq < 1e-24)
            throw FocusSingularity("Killing potential: evaluation at a center");
        return -(g1 / R) * c1 / std::sqrt(s1sq) - (g2 / R) * c2 / std::sqrt(s2sq);
    };
    sys.cart_grad_tangent = [g1, g2, s, sb, R](const Vec3& q) {
        const double c1 = (s * q.z + sb * q.x) / R;
        const double c2 = (s * q.z - sb * q.x) / R;
        const double s1sq = (1.0 - c1) * (1.0 + c1), s2sq = (1.0 - c2) * (1.0 + c2);
        if (s1sq < 1e-24 || s2sq < 1e-24)
            throw FocusSingularity("Killing gradient: evaluation at a center");
        const Vec3 f1{sb / R, 0.0, s / R}, f2{-sb / R, 0.0, s / R};
        const Vec3 grad = f1 * (-(g1 / R) * std::pow(s1sq, -1.5)) +
                          f2 * (-(g2 / R) * std::pow(s2sq, -1.5));
        return tangential(q, grad);
    };
    return sys;
}

PlanarSystem killing_planar(const KillingParams& p, Chart hemisphere,
                            const ManifoldConfig& cfg) {
    if (p.gamma1 < 0 || p.gamma2 < 0)
        throw BadCouplings("Killing: strengths must be nonnegative");
    const double s2 = cfg.sigma * cfg.sigma, a = cfg.a;
    const double ksum = (p.gamma1 + p.gamma2) / (s2 * a);
    const double kdif = (p.gamma1 - p.gamma2) / (s2 * a);
    const double sF = hemisphere == Chart::North ? -1.0 : +1.0;
    PlanarSystem sys;
    sys.cfg = cfg;
    sys.label = hemisphere == Chart::North ? "killing-planar-attractive"
                                           : "killing-planar-repulsive";
    sys.f = systems::PotentialPiece::from_functions(
        [sF, ksum](double u) { return sF * ksum * u; },
        [sF, ksum](double) { return sF * ksum; }, lit(sF * ksum) + "*u");
    sys.g = systems::PotentialPiece::from_functions(
        [kdif](double v) { return -kdif * v; },
        [kdif](double) { return -kdif; }, lit(-kdif) + "*v");
    const double g1 = p.gamma1 / s2, g2 = p.gamma2 / s2;
    const bool north = hemisphere == Chart::North;
    sys.gauge_offset = 0;
    sys.cart_value = [g1, g2, a, north](const Vec2& x) {
        const double r1 = std::hypot(x.x - a, x.y);
        const double r2 = std::hypot(x.x + a, x.y);
        if (r1 < 1e-10 * a || r2 < 1e-10 * a)
            throw FocusSingularity("two-center potential: evaluation at a center");
        return north ? -g1 / r1 - g2 / r2 : g2 / r1 + g1 / r2;
    };
    sys.cart_grad = [g1, g2, a, north](const Vec2& x) {
        const double r1 = std::hypot(x.x - a, x.y);
        const double r2 = std::hypot(x.x + a, x.y);
        if (r1 < 1e-10 * a || r2 < 1e-10 * a)
            throw FocusSingularity("two-center gradient: evaluation at a center");
        const Vec2 d1{x.x - a, x.y}, d2{x.x + a, x.y};
        const double r13 = r1 * r1 * r1, r23 = r2 * r2 * r2;
        if (north) return d1 * (g1 / r13) + d2 * (g2 / r23);
        return d1 * (-g2 / r13) + d2 * (-g1 / r23);
    };
    return sys;
}

double killing_planar_cartesian(const KillingParams& p, Chart chart,
                                const ManifoldConfig& cfg, double x1, double x2) {
    return killing_planar(p, chart, cfg).cart_value({x1, x2});
}

// ------------------------------------------------------------------ Garnier

ManifoldConfig garnier_config(const GarnierParams& p) {
    if (!(p.a_g > 0 && p.a_g < 1))
        throw BadCouplings("Garnier: need 0 < a < 1");
    return ManifoldConfig::make(1.0, 1.0 / std::sqrt(1.0 + p.a_g * p.a_g), 1.0);
}

PlanarSystem garnier_planar(const GarnierParams& p) {
    const auto cfg = garnier_config(p);
    const double a = p.a_g, a2 = a * a, a4 = a2 * a2, ia2 = 1.0 / a2;
    PlanarSystem sys;
    sys.cfg = cfg;
    sys.label = "garnier-planar";
    // the DSL constant `a` is the focal half-distance, which in the Garnier
    // nondimensional setting equals the coupling a itself
    sys.f = systems::PotentialPiece::from_functions(
        [a4, ia2](double u) {
            const double u2 = u * u, w = u2 - ia2;
            return 0.5 * a4 * (u2 - 1.0) * w * w;
        },
        [a4, ia2](double u) {
            const double u2 = u * u;
            return a4 * u * (u2 - ia2) * (3.0 * u2 - ia2 - 2.0);
        },
        "(a^4/2)*(u^2-1)*(u^2-1/a^2)^2");
    sys.g = systems::PotentialPiece::from_functions(
        [a4, ia2](double v) {
            const double v2 = v * v, w = v2 - ia2;
            return 0.5 * a4 * (1.0 - v2) * w * w;
        },
        [a4, ia2](double v) {
            const double v2 = v * v;
            return a4 * v * (v2 - ia2) * (ia2 + 2.0 - 3.0 * v2);
        },
        "(a^4/2)*(1-v^2)*(v^2-1/a^2)^2");
    sys.gauge_offset = 0;
    sys.cart_value = [a2](const Vec2& x) {
        const double r2 = x.x * x.x + x.y * x.y;
        return 0.5 * (r2 - 1.0) * (r2 - 1.0) + 0.5 * a2 * x.y * x.y;
    };
    sys.cart_grad = [a2](const Vec2& x) {
        const double w = x.x * x.x + x.y * x.y - 1.0;
        return Vec2{2.0 * x.x * w, 2.0 * x.y * w + a2 * x.y};
    };
    return sys;
}

SphericalSystem garnier_spherical(const GarnierParams& p) {
    const auto cfg = garnier_config(p);
    const double sb2 = cfg.sigma_bar * cfg.sigma_bar;
    SphericalSystem sys;
    sys.cfg = cfg;
    sys.label = "garnier-sphere";
    auto shape = [sb2](double x) {
        const double x2 = x * x, w = 1.0 - 2.0 * x2, d = 1.0 - x2;
        return (x2 - sb2) * w * w / (2.0 * d * d);
    };
    auto dshape = [sb2](double x) {
        const double x2 = x * x, d = 1.0 - x2;
        return x * (1.0 - 2.0 * x2) * (2.0 * x2 * x2 - 5.0 * x2 + 1.0 + 2.0 * sb2) /
               (d * d * d);
    };
    sys.F = systems::PotentialPiece::from_functions(
        shape, dshape, "(U^2-sigma_bar^2)*(1-2*U^2)^2/(2*(1-U^2)^2)");
    sys.G = systems::PotentialPiece::from_functions(
        [shape](double V) { return -shape(V); },
        [dshape](double V) { return -dshape(V); },
        "(sigma_bar^2-V^2)*(1-2*V^2)^2/(2*(1-V^2)^2)");
    // the printed cartesian expression sits 2 energy units below the
    // separable gauge (nondimensional setting)
    sys.gauge_offset = -2.0;
    const GarnierParams params = p;
    sys.cart_value = [params](const Vec3& q) {
        return garnier_spherical_cartesian_printed(params, q) + 2.0;
    };
    const double s2 = cfg.sigma * cfg.sigma;
    sys.cart_grad_tangent = [s2, sb2](const Vec3& q) {
        const double Z = q.z;
        if (std::fabs(Z) < 1e-10)
            throw EquatorSingularity("Garnier spherical gradient near the equator");
        const double Z2 = Z * Z, Z3 = Z2 * Z, Z4 = Z2 * Z2, Z5 = Z4 * Z;
        const double gx = (1.0 / (2.0 * s2)) * (-2.0 * sb2 * q.x / Z4);
        const double gz = (1.0 / (2.0 * s2)) *
                          (-4.0 * (1.0 - sb2 * q.x * q.x) / Z5 + 2.0 * (1.0 + 3.0 * s2) / Z3);
        return tangential(q, {gx, 0.0, gz});
    };
    return sys;
}

double garnier_spherical_cartesian_printed(const GarnierParams& p, const Vec3& q) {
    const auto cfg = garnier_config(p);
    const double s2 = cfg.sigma * cfg.sigma;
    const double sb2 = cfg.sigma_bar * cfg.sigma_bar;
    if (std::fabs(q.z) < 1e-10)
        throw EquatorSingularity("Garnier spherical potential near the equator");
    const double Z2 = q.z * q.z;
    return (1.0 / (2.0 * s2)) *
           ((1.0 - sb2 * q.x * q.x) / (Z2 * Z2) - (1.0 + 3.0 * s2) / Z2);
}

}  // namespace liouville::catalog
