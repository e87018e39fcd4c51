#include "liouville/coords.hpp"

#include <algorithm>
#include <cmath>

namespace liouville::coords {

namespace {

// clamp an arccos argument drifting off [-1,1] by floating-point noise
double clamped_acos(double c) {
    if (c > 1.0) {
        if (c > 1.0 + 1e-12) throw DomainError("focal angle: cos out of range");
        c = 1.0;
    } else if (c < -1.0) {
        if (c < -1.0 - 1e-12) throw DomainError("focal angle: cos out of range");
        c = -1.0;
    }
    return std::acos(c);
}

double sqrt_clamped(double w, double tol) {
    if (w < 0) {
        if (w < -tol) throw DomainError("sphero-conical/elliptic: negative radicand");
        return 0.0;
    }
    return std::sqrt(w);
}

}  // namespace

Foci foci(const ManifoldConfig& cfg) {
    Foci f;
    f.F1 = {cfg.R * cfg.sigma_bar, 0.0, cfg.R * cfg.sigma};
    f.F2 = {-cfg.R * cfg.sigma_bar, 0.0, cfg.R * cfg.sigma};
    f.f1 = {cfg.a, 0.0};
    f.f2 = {-cfg.a, 0.0};
    return f;
}

FocalAngles focal_angles(const SpherePoint& p, const ManifoldConfig& cfg) {
    const double c1 = (cfg.sigma * p.Z + cfg.sigma_bar * p.X) / cfg.R;
    const double c2 = (cfg.sigma * p.Z - cfg.sigma_bar * p.X) / cfg.R;
    return {clamped_acos(c1), clamped_acos(c2)};
}

SpheroConical spheroconical_from_sphere(const SpherePoint& p, const ManifoldConfig& cfg) {
    const FocalAngles th = focal_angles(p, cfg);
    SpheroConical sc;
    sc.U = std::sin(0.5 * (th.theta1 + th.theta2));
    sc.V = std::sin(0.5 * (th.theta2 - th.theta1));
    sc.U = std::clamp(sc.U, cfg.sigma_bar, 1.0);
    sc.V = std::clamp(sc.V, -cfg.sigma_bar, cfg.sigma_bar);
    sc.sign_Y = p.Y >= 0 ? +1 : -1;
    sc.sign_Z = p.Z >= 0 ? +1 : -1;
    return sc;
}

SpherePoint sphere_from_spheroconical(const SpheroConical& sc, const ManifoldConfig& cfg) {
    const double sb = cfg.sigma_bar, s = cfg.sigma, R = cfg.R;
    const double tol = 1e-12;
    if (sc.U < sb - tol || sc.U > 1.0 + tol || std::fabs(sc.V) > sb + tol)
        throw DomainError("sphere_from_spheroconical: (U,V) outside domain");
    const double U = std::clamp(sc.U, sb, 1.0);
    const double V = std::clamp(sc.V, -sb, sb);
    SpherePoint p;
    p.X = (R / sb) * U * V;
    p.Y = sc.sign_Y * (R / (s * sb)) *
          sqrt_clamped((U * U - sb * sb) * (sb * sb - V * V), tol);
    p.Z = sc.sign_Z * (R / s) *
          sqrt_clamped((1.0 - U * U) * (1.0 - V * V), tol);
    return p;
}

Elliptic elliptic_from_plane(const Vec2& x12, const ManifoldConfig& cfg) {
    const double a = cfg.a;
    const double r1 = std::hypot(x12.x - a, x12.y);
    const double r2 = std::hypot(x12.x + a, x12.y);
    Elliptic e;
    e.u = std::max(1.0, (r1 + r2) / (2.0 * a));
    e.v = std::clamp((r2 - r1) / (2.0 * a), -1.0, 1.0);
    e.sign_x2 = x12.y >= 0 ? +1 : -1;
    return e;
}

Vec2 plane_from_elliptic(const Elliptic& e, const ManifoldConfig& cfg) {
    const double tol = 1e-12;
    if (e.u < 1.0 - tol || std::fabs(e.v) > 1.0 + tol)
        throw DomainError("plane_from_elliptic: (u,v) outside domain");
    const double u = std::max(e.u, 1.0);
    const double v = std::clamp(e.v, -1.0, 1.0);
    const double a = cfg.a;
    return {a * u * v,
            e.sign_x2 * a * sqrt_clamped((u * u - 1.0) * (1.0 - v * v), tol)};
}

UVPair identify_uv(double U, double V, const ManifoldConfig& cfg) {
    const double oneMinusU2 = (1.0 - U) * (1.0 + U);
    if (oneMinusU2 < 1e-15)
        throw EquatorPoint("identify_uv: U at the equator");
    const double c = cfg.sigma / cfg.sigma_bar;
    return {c * U / std::sqrt(oneMinusU2),
            c * V / std::sqrt((1.0 - V) * (1.0 + V))};
}

UVCaps identify_UV(double u, double v, const ManifoldConfig& cfg) {
    const double s2 = cfg.sigma * cfg.sigma, sb = cfg.sigma_bar;
    return {sb * u / std::sqrt(s2 + sb * sb * u * u),
            sb * v / std::sqrt(s2 + sb * sb * v * v)};
}

double didentify_dU(double U, const ManifoldConfig& cfg) {
    const double oneMinusU2 = (1.0 - U) * (1.0 + U);
    if (oneMinusU2 < 1e-15)
        throw EquatorPoint("didentify_dU: U at the equator");
    return (cfg.sigma / cfg.sigma_bar) * std::pow(oneMinusU2, -1.5);
}

Vec2 rescale_to_x12(const Vec2& xy, const ManifoldConfig& cfg) {
    return {xy.x, xy.y / cfg.sigma};
}

Vec2 rescale_from_x12(const Vec2& x12, const ManifoldConfig& cfg) {
    return {x12.x, x12.y * cfg.sigma};
}

}  // namespace liouville::coords
