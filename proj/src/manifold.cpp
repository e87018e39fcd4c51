#include "liouville/manifold.hpp"

#include <cmath>

namespace liouville::geom {

PlanePoint project(const SpherePoint& p, Chart chart, const ManifoldConfig& cfg) {
    const double absZ = std::fabs(p.Z);
    if (absZ < cfg.eps_eq * cfg.R)
        throw EquatorPoint("project: |Z| inside the equator guard band");
    if ((chart == Chart::North && p.Z < 0) || (chart == Chart::South && p.Z > 0))
        throw DomainError("project: point lies in the opposite hemisphere");
    return {cfg.R * p.X / absZ, cfg.R * p.Y / absZ, chart};
}

SpherePoint unproject(const PlanePoint& p, const ManifoldConfig& cfg) {
    const double R = cfg.R;
    const double w = std::sqrt(R * R + p.x * p.x + p.y * p.y);
    const double s = chart_sign(p.chart);
    return {R * p.x / w, R * p.y / w, s * R * R / w};
}

Vec2 project_velocity(const SpherePoint& p, const Vec3& vel, Chart chart,
                      const ManifoldConfig& cfg) {
    const double absZ = std::fabs(p.Z);
    if (absZ < cfg.eps_eq * cfg.R)
        throw EquatorPoint("project_velocity: |Z| inside the equator guard band");
    const double s = chart_sign(chart);
    // d/dt [R X/(s Z)] = R s (Xdot Z - X Zdot)/Z^2
    const double inv = s / (p.Z * p.Z);
    return {cfg.R * (vel.x * p.Z - p.X * vel.z) * inv,
            cfg.R * (vel.y * p.Z - p.Y * vel.z) * inv};
}

Vec3 unproject_velocity(const PlanePoint& p, const Vec2& vel, const ManifoldConfig& cfg) {
    const double R = cfg.R;
    const double w2 = R * R + p.x * p.x + p.y * p.y;
    const double w = std::sqrt(w2);
    const double w3 = w * w2;
    const double s = chart_sign(p.chart);
    // Jacobian of (X,Y,Z)(x,y); columns are tangent to the sphere.
    const double dXdx = R * (w2 - p.x * p.x) / w3, dXdy = -R * p.x * p.y / w3;
    const double dYdx = dXdy, dYdy = R * (w2 - p.y * p.y) / w3;
    const double dZdx = -s * R * R * p.x / w3, dZdy = -s * R * R * p.y / w3;
    return {dXdx * vel.x + dXdy * vel.y,
            dYdx * vel.x + dYdy * vel.y,
            dZdx * vel.x + dZdy * vel.y};
}

Metric2x2 induced_metric(const PlanePoint& p, const ManifoldConfig& cfg) {
    const double R2 = cfg.R * cfg.R;
    const double s = R2 + p.x * p.x + p.y * p.y;
    const double c = R2 / (s * s);
    return {c * (R2 + p.y * p.y), -c * p.x * p.y, c * (R2 + p.x * p.x)};
}

Metric2x2 inverse_metric(const PlanePoint& p, const ManifoldConfig& cfg) {
    const double R2 = cfg.R * cfg.R;
    const double s = R2 + p.x * p.x + p.y * p.y;
    const double c = s / (R2 * R2);
    return {c * (R2 + p.x * p.x), c * p.x * p.y, c * (R2 + p.y * p.y)};
}

Christoffel christoffel(const PlanePoint& p, const ManifoldConfig& cfg) {
    const double s = cfg.R * cfg.R + p.x * p.x + p.y * p.y;
    return {-2.0 * p.x / s, -2.0 * p.y / s};
}

double time_factor(const PlanePoint& p, const ManifoldConfig& cfg) {
    const double R2 = cfg.R * cfg.R;
    return (R2 + p.x * p.x + p.y * p.y) / R2;
}

double time_factor_sphere(const SpherePoint& p, const ManifoldConfig& cfg) {
    const double r = cfg.R / p.Z;
    return r * r;
}

}  // namespace liouville::geom
