#pragma once

#include "liouville/errors.hpp"
#include "liouville/vec.hpp"

namespace liouville::geom {

enum class Chart { North, South };

inline int chart_sign(Chart c) { return c == Chart::North ? +1 : -1; }
inline Chart chart_of(double Z) { return Z >= 0 ? Chart::North : Chart::South; }

/// Sphere radius, foci parameter and particle mass: the single source of
/// truth for every map in the library.
///
/// sigma = cos(theta_f) and sigma_bar = sin(theta_f) locate the foci
/// F_{1,2} = (+-R*sigma_bar, 0, R*sigma); the planar foci sit at (+-a, 0)
/// with a = R*sigma_bar/sigma.
struct ManifoldConfig {
    double R = 1.0;         ///< sphere radius, > 0
    double sigma = 0.5;     ///< foci parameter in (0,1)
    double sigma_bar = 0;   ///< sqrt(1 - sigma^2)
    double a = 0;           ///< focal half-distance R*sigma_bar/sigma
    double m = 1.0;         ///< particle mass, > 0
    double eps_eq = 1e-10;  ///< equator guard band, relative to R

    ManifoldConfig() { *this = make(1.0, 0.5, 1.0); }

    static ManifoldConfig make(double R, double sigma, double m = 1.0,
                               double eps_eq = 1e-10) {
        if (!(R > 0) || !(m > 0) || !(sigma > 0) || !(sigma < 1))
            throw DomainError("ManifoldConfig: need R>0, m>0, 0<sigma<1");
        ManifoldConfig c;
        c.R = R;
        c.sigma = sigma;
        c.sigma_bar = std::sqrt((1.0 - sigma) * (1.0 + sigma));
        c.a = R * c.sigma_bar / sigma;
        c.m = m;
        c.eps_eq = eps_eq;
        return c;
    }
};

struct SpherePoint {
    double X = 0, Y = 0, Z = 0;
    Vec3 vec() const { return {X, Y, Z}; }
    static SpherePoint of(const Vec3& v) { return {v.x, v.y, v.z}; }
};

struct PlanePoint {
    double x = 0, y = 0;
    Chart chart = Chart::North;
};

/// Symmetric 2x2 metric tensor on a gnomonic chart (g21 = g12).
struct Metric2x2 {
    double g11 = 1, g12 = 0, g22 = 1;
    double det() const { return g11 * g22 - g12 * g12; }
};

/// The two independent Christoffel symbols of the induced metric;
/// the remaining nonzero ones are G^1_12 = G222/2 and G^2_12 = G111/2,
/// while G^1_22 = G^2_11 = 0.
struct Christoffel {
    double G111 = 0;  ///< Gamma^1_11
    double G222 = 0;  ///< Gamma^2_22
    double G112() const { return 0.5 * G222; }  ///< Gamma^1_12 = Gamma^1_21
    double G212() const { return 0.5 * G111; }  ///< Gamma^2_12 = Gamma^2_21
};

/// Gnomonic projection of a hemisphere onto the tangent plane at its pole:
/// x = R X/|Z|, y = R Y/|Z|.  Throws EquatorPoint inside the guard band
/// |Z| < eps_eq*R and DomainError when the point lies in the wrong hemisphere.
PlanePoint project(const SpherePoint& p, Chart chart, const ManifoldConfig& cfg);

/// Inverse gnomonic map; the chart tag of `p` selects the hemisphere:
/// X = R x/w, Y = R y/w, Z = +-R^2/w with w = sqrt(R^2+x^2+y^2).
SpherePoint unproject(const PlanePoint& p, const ManifoldConfig& cfg);

/// Push a sphere velocity through the projection (time parametrization is
/// untouched: this is d(project)/dq applied to dq/dt).
Vec2 project_velocity(const SpherePoint& p, const Vec3& vel, Chart chart,
                      const ManifoldConfig& cfg);

/// Pull a plane velocity back to the sphere through the inverse map.
Vec3 unproject_velocity(const PlanePoint& p, const Vec2& vel, const ManifoldConfig& cfg);

/// Metric induced on the projecting plane by the round sphere,
/// g = R^2/(R^2+x^2+y^2)^2 [[R^2+y^2, -xy], [-xy, R^2+x^2]].
Metric2x2 induced_metric(const PlanePoint& p, const ManifoldConfig& cfg);

/// Inverse of the induced metric.
Metric2x2 inverse_metric(const PlanePoint& p, const ManifoldConfig& cfg);

/// Christoffel symbols of the induced metric:
/// Gamma^1_11 = -2x/(R^2+x^2+y^2), Gamma^2_22 = -2y/(R^2+x^2+y^2).
Christoffel christoffel(const PlanePoint& p, const ManifoldConfig& cfg);

/// d(tau)/dt = (R^2+x^2+y^2)/R^2: rate of the projected time against the
/// physical one; >= 1 with equality only at the chart origin.
double time_factor(const PlanePoint& p, const ManifoldConfig& cfg);

/// Same rate evaluated on the sphere: (R/Z)^2.
double time_factor_sphere(const SpherePoint& p, const ManifoldConfig& cfg);

}  // namespace liouville::geom
