#pragma once

#include <optional>

#include "liouville/catalog.hpp"
#include "liouville/ode.hpp"
#include "liouville/systems.hpp"
#include "liouville/trajectory.hpp"

namespace liouville::dyn {

using geom::Chart;
using geom::ManifoldConfig;
using systems::PlanarSystem;
using systems::SphericalSystem;
using traj::TimeTag;
using traj::Trajectory;

struct IntegratorConfig {
    double rel_tol = 1e-10;
    double abs_tol = 1e-12;
    double max_step = 0;            ///< 0: unbounded
    bool dense_output = true;
    double event_tolerance = 1e-12;
    std::size_t samples = 2001;     ///< uniform output samples per trajectory

    math::OdeOptions ode() const {
        math::OdeOptions o;
        o.rel_tol = rel_tol;
        o.abs_tol = abs_tol;
        o.max_step = max_step;
        o.event_tol = event_tolerance;
        return o;
    }
};

/// Embedded state on the sphere: |q| = R, q.v = 0.
struct SphereState {
    Vec3 q, v;
};

/// State on a plane (gnomonic or rescaled coordinates, per context).
struct PlaneState {
    Vec2 x, v;
};

/// Start state for the separated first-order systems: coordinate values and
/// the branch signs of the two separated velocities, plus the cartesian sign
/// bits that the coordinates themselves do not carry.
struct SeparatedStart {
    double c1 = 0, c2 = 0;     ///< (U, V) or (u, v)
    int branch1 = +1, branch2 = +1;
    int sign_y = +1, sign_z = +1;  ///< sphere: sign(Y), sign(Z); plane: sign_y = sign(x2)
};

/// Scalar radicand of a separated equation with derivative and the interval
/// of interest.
struct Radicand {
    std::function<double(double)> fn;
    std::function<double(double)> dfn;
    double lo = 0, hi = 1;
    std::string label;
};

// ------------------------------------------------------------- integrators

/// Free motion on ((R^2), g): geodesic equations in physical time (the
/// projected-time curve is a straight line; tau is carried along).
Trajectory integrate_geodesic(const ManifoldConfig& cfg, Chart chart, const PlaneState& start,
                              double horizon_t, const IntegratorConfig& icfg = {});

/// Newton equations for a spherical potential projected onto ((R^2), g), in
/// physical time (with Christoffel terms) or projected time; the companion
/// time is carried as an extra quadrature state.
Trajectory integrate_newton_metric(const SphericalSystem& sys, Chart chart,
                                   const PlaneState& start, double horizon,
                                   TimeTag time, const IntegratorConfig& icfg = {});

/// Plain Newton equations on the Euclidean (x1, x2) plane in projected time
/// tau; physical time is carried along.
Trajectory integrate_newton_flat(const PlanarSystem& sys, const PlaneState& start,
                                 double horizon_tau, const IntegratorConfig& icfg = {});

struct SphereNewtonOptions {
    bool carry_tau = true;      ///< integrate d tau/dt = (R/Z)^2 alongside
    double stop_abs_z = 0;      ///< >0: stop when |Z| falls below this
    double stop_center_dist = 0;///< >0: stop when closer than this to a focus
};

/// Newton equations on the sphere in embedded coordinates with constraint
/// renormalization each step; equator crossings are recorded as events.
Trajectory integrate_newton_sphere(const SphericalSystem& sys, const SphereState& start,
                                   double horizon_t, const IntegratorConfig& icfg = {},
                                   const SphereNewtonOptions& opts = {});

/// Separated first-order system on the sphere, integrated in local time
/// varsigma via its differentiated (second-order) form; turning points are
/// located on the radicand and recorded, and the kinematic bounces flip the
/// stored sign bits.  Physical time is carried along.
Trajectory integrate_separated_sphere(const SphericalSystem& sys, double E, double Omega,
                                      const SeparatedStart& start, double horizon_s,
                                      const IntegratorConfig& icfg = {});

/// Mirror of the spherical version on the plane (local time zeta, projected
/// time tau carried along).
Trajectory integrate_separated_plane(const PlanarSystem& sys, double h, double lambda,
                                     const SeparatedStart& start, double horizon_z,
                                     const IntegratorConfig& icfg = {});

// ------------------------------------------------------------- radicands

/// U-branch radicand (dU/d varsigma)^2 = W(U) of a spherical system, and the
/// mirrored V branch.
Radicand sphere_radicand_U(const SphericalSystem& sys, double E, double Omega);
Radicand sphere_radicand_V(const SphericalSystem& sys, double E, double Omega);
Radicand plane_radicand_u(const PlanarSystem& sys, double h, double lambda);
Radicand plane_radicand_v(const PlanarSystem& sys, double h, double lambda);

/// Degree-5 polynomial P5(X) with X = U^2 (or V^2) whose quadrature
/// sqrt(m) R/2 * Int dX/sqrt(P5) reproduces the direct branch quadratures of
/// the Neumann system.  Carries the verified sign of the sigma_bar^2 term.
Radicand neumann_radicand(const catalog::NeumannParams& p, double R, double m,
                          double E, double Omega);

/// P6(u) = -f(u)+h u^2-lambda and tilde P6(v) = -g(v)-h v^2+lambda of the
/// Garnier system, as printed.
std::pair<Radicand, Radicand> garnier_radicands(const catalog::GarnierParams& p,
                                                double h, double lambda);

/// Cubic factor C(zbar) of the canonical form: the full canonical radicand is
/// (4/(m a^2)) zbar (1-zbar) C(zbar) with zbar = u^2 or v^2.
Radicand garnier_canonical_cubic(const catalog::GarnierParams& p, double h, double lambda);

// ------------------------------------------------------------- quadrature

/// Local-time increment Int_{from}^{to} dx/sqrt(W(x)).  Simple roots at the
/// endpoints are removed by the substitution x = root +- s^2; a double root
/// at an endpoint throws NonIntegrableEndpoint.
double quadrature_time(const Radicand& rad, double from, double to, double tol = 1e-12);

/// Positivity interval of a radicand around x0 (turning points / kinematic
/// bounds), by scanning and bisection refinement.
std::pair<double, double> motion_interval(const Radicand& rad, double x0);

// ------------------------------------------------------------- invariants

struct SphereInvariants {
    double E = 0;        ///< energy in the separable gauge
    double Omega_U = 0;  ///< second invariant from the U branch
    double Omega_V = 0;  ///< ... and from the V branch
};
SphereInvariants invariants_from_state(const SphericalSystem& sys, const SphereState& st);

struct PlaneInvariants {
    double h = 0;
    double lambda_u = 0;
    double lambda_v = 0;
};
PlaneInvariants invariants_from_state(const PlanarSystem& sys, const PlaneState& st);

// ------------------------------------------------------------- helpers

/// t column from a varsigma-parametrized (U,V) trajectory by cumulative
/// trapezoid of U^2-V^2 (dt/d varsigma > 0 on the interior).
Trajectory recover_physical_time(const Trajectory& traj_in_varsigma);

/// Separated (U,V) or (u,v) trajectory rendered in embedded/cartesian
/// coordinates using the tracked sign bits.
Trajectory separated_to_cartesian(const Trajectory& uv, const ManifoldConfig& cfg);

/// Build the constants-consistent separated start from an embedded state.
SeparatedStart separated_start_from_sphere(const SphericalSystem& sys, const SphereState& st);
SeparatedStart separated_start_from_plane(const PlanarSystem& sys, const PlaneState& st);

}  // namespace liouville::dyn
