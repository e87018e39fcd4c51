#pragma once

#include "liouville/systems.hpp"

namespace liouville::catalog {

using geom::Chart;
using geom::ManifoldConfig;
using systems::PlanarSystem;
using systems::SphericalSystem;

/// Anisotropic harmonic attraction on the sphere, U = a X^2 + b Y^2 + c Z^2
/// with a > b > c > 0.  Redefined couplings: m omega^2/2 = a-c and
/// sigma^2 = (b-c)/(a-c).
struct NeumannParams {
    double a_c = 0, b_c = 0, c_c = 0;
    double omega = 0, sigma = 0;

    static NeumannParams from_couplings(double a, double b, double c, double m);
    static NeumannParams from_omega(double omega, double sigma, double m, double c = 0);
};

/// F(U) = (m omega^2/2) R^2 (U^2 - sb^2) U^2, G(V) = (m omega^2/2) R^2 (sb^2 - V^2) V^2.
/// The attached cartesian form carries the separable gauge
/// (= a X^2 + b Y^2 + c Z^2 - c R^2).
SphericalSystem neumann_spherical(const NeumannParams& p, double R, double m);

/// Planar partner of the Neumann system:
/// V = (m omega^2 R^2/2) (x1^2 + s^2 x2^2)/(R^2 + x1^2 + s^2 x2^2).
PlanarSystem neumann_planar(const NeumannParams& p, double R, double m);
double neumann_planar_cartesian(const NeumannParams& p, double R, double m,
                                double x1, double x2);

/// Two Kepler centers on the sphere at the foci, strengths gamma1, gamma2 >= 0,
/// U = -(g1/R) cotan(theta1) - (g2/R) cotan(theta2).  The separable F piece
/// depends on the hemisphere: F+- = -+ ((g1+g2)/R) U sqrt(1-U^2).
struct KillingParams {
    double gamma1 = 0, gamma2 = 0;
};

SphericalSystem killing_spherical(const KillingParams& p, Chart hemisphere,
                                  const ManifoldConfig& cfg);

/// Planar partners: two attractive centers (north chart) or the repulsive
/// pair with strengths interchanged between the foci (south chart).
PlanarSystem killing_planar(const KillingParams& p, Chart hemisphere,
                            const ManifoldConfig& cfg);
double killing_planar_cartesian(const KillingParams& p, Chart chart,
                                const ManifoldConfig& cfg, double x1, double x2);

/// Planar anharmonic oscillator V = (x1^2+x2^2-1)^2/2 + a^2 x2^2/2,
/// 0 < a < 1, nondimensional (R = 1, m = 1, sigma = 1/sqrt(1+a^2)).
struct GarnierParams {
    double a_g = 0.5;
};

PlanarSystem garnier_planar(const GarnierParams& p);

/// Inverse-mapped Garnier on the sphere,
/// F(U) = (U^2-sb^2)(1-2U^2)^2 / (2(1-U^2)^2) and the same shape in G.
/// The cartesian form diverges on the equator; its printed form differs
/// from the separable gauge by the documented constant offset.
SphericalSystem garnier_spherical(const GarnierParams& p);

/// The equator-singular cartesian expression
/// (1/(2 s^2)) ((1 - sb^2 X^2)/Z^4 - (1+3 s^2)/Z^2); throws
/// EquatorSingularity for |Z| below tolerance.
double garnier_spherical_cartesian_printed(const GarnierParams& p, const Vec3& q);

ManifoldConfig garnier_config(const GarnierParams& p);

}  // namespace liouville::catalog
