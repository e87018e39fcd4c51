#pragma once

#include <functional>
#include <string>

#include "liouville/coords.hpp"
#include "liouville/dsl.hpp"

namespace liouville::systems {

using coords::Elliptic;
using coords::SpheroConical;
using geom::Chart;
using geom::ManifoldConfig;
using geom::SpherePoint;

/// One-dimensional potential piece: a scalar function with its derivative.
/// The derivative is closed-form when the piece was built from an
/// expression or an explicit pair, else a centered finite difference with
/// step eps^(1/3) scaled to the domain width.
struct PotentialPiece {
    std::function<double(double)> eval;
    std::function<double(double)> deriv;
    std::string dsl;  ///< printable closed form, empty when not available

    double operator()(double x) const { return eval(x); }

    static PotentialPiece zero();
    static PotentialPiece from_function(std::function<double(double)> f,
                                        double domain_scale = 1.0);
    static PotentialPiece from_functions(std::function<double(double)> f,
                                         std::function<double(double)> df,
                                         std::string dsl_text = "");
    static PotentialPiece from_expression(const dsl::Expression& e,
                                          const ManifoldConfig& cfg);
};

/// Liouville Type I system on S^2: potential (F(U)+G(V))/(U^2-V^2).
/// cart_value/cart_grad_tangent, when set, are an exact cartesian
/// representation in the same additive gauge as the separable form.
struct SphericalSystem {
    PotentialPiece F, G;
    ManifoldConfig cfg;
    std::function<double(const Vec3&)> cart_value;
    std::function<Vec3(const Vec3&)> cart_grad_tangent;
    std::string label = "custom-sphere";
    double gauge_offset = 0;  ///< printed cartesian form = separable form + gauge_offset

    /// (F(U)+G(V))/(U^2-V^2); throws FociSingularity when the denominator
    /// is below tolerance.
    double separable(double U, double V) const;

    /// Potential at an embedded point (closed form when available, else via
    /// sphero-conical coordinates).
    double value(const Vec3& q) const;

    /// Tangential gradient at an embedded point.
    Vec3 tangent_gradient(const Vec3& q) const;
};

/// Liouville Type I system on the rescaled plane (x1, x2):
/// potential (f(u)+g(v))/(u^2-v^2) in Euler elliptic coordinates.
struct PlanarSystem {
    PotentialPiece f, g;
    ManifoldConfig cfg;
    std::function<double(const Vec2&)> cart_value;
    std::function<Vec2(const Vec2&)> cart_grad;
    std::string label = "custom-plane";
    double gauge_offset = 0;

    double separable(double u, double v) const;
    double value(const Vec2& x12) const;
    Vec2 gradient(const Vec2& x12) const;
};

/// Free-standing forms of the two evaluation operations.
double potential_sphere(const SphericalSystem& sys, double U, double V);
double potential_plane(const PlanarSystem& sys, double u, double v);

}  // namespace liouville::systems
