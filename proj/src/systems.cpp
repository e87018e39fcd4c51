#include "liouville/systems.hpp"

#include <cmath>

#include "liouville/quadrature.hpp"

namespace liouville::systems {

namespace {
constexpr double kFociTol = 1e-12;
}

PotentialPiece PotentialPiece::zero() {
    return from_functions([](double) { return 0.0; }, [](double) { return 0.0; }, "0");
}

PotentialPiece PotentialPiece::from_function(std::function<double(double)> f,
                                             double domain_scale) {
    PotentialPiece p;
    p.eval = f;
    p.deriv = [f, domain_scale](double x) {
        return math::central_diff(f, x, domain_scale);
    };
    return p;
}

PotentialPiece PotentialPiece::from_functions(std::function<double(double)> f,
                                              std::function<double(double)> df,
                                              std::string dsl_text) {
    PotentialPiece p;
    p.eval = std::move(f);
    p.deriv = std::move(df);
    p.dsl = std::move(dsl_text);
    return p;
}

PotentialPiece PotentialPiece::from_expression(const dsl::Expression& e,
                                               const ManifoldConfig& cfg) {
    PotentialPiece p;
    dsl::Expression de = e.differentiate();
    p.eval = [e, cfg](double x) { return e.evaluate(x, cfg); };
    p.deriv = [de, cfg](double x) { return de.evaluate(x, cfg); };
    p.dsl = e.print();
    return p;
}

double SphericalSystem::separable(double U, double V) const {
    const double den = (U - V) * (U + V);
    if (std::fabs(den) < kFociTol)
        throw FociSingularity("potential_sphere: U^2-V^2 below tolerance");
    return (F.eval(U) + G.eval(V)) / den;
}

double SphericalSystem::value(const Vec3& q) const {
    if (cart_value) return cart_value(q);
    const auto sc = coords::spheroconical_from_sphere(SpherePoint::of(q), cfg);
    return separable(sc.U, sc.V);
}

Vec3 SphericalSystem::tangent_gradient(const Vec3& q) const {
    if (cart_grad_tangent) return cart_grad_tangent(q);
    // chain rule through the focal angles: U = sin((t1+t2)/2), V = sin((t2-t1)/2)
    const double R = cfg.R, s = cfg.sigma, sb = cfg.sigma_bar;
    const double c1 = (s * q.z + sb * q.x) / R;
    const double c2 = (s * q.z - sb * q.x) / R;
    const double s1 = std::sqrt(std::max(0.0, 1.0 - c1 * c1));
    const double s2 = std::sqrt(std::max(0.0, 1.0 - c2 * c2));
    if (s1 < 1e-12 || s2 < 1e-12)
        throw SingularPotential("spherical gradient: point at a focal axis");
    const Vec3 gradc1{sb / R, 0.0, s / R}, gradc2{-sb / R, 0.0, s / R};
    const Vec3 gt1 = gradc1 * (-1.0 / s1);
    const Vec3 gt2 = gradc2 * (-1.0 / s2);
    const double t1 = std::acos(std::clamp(c1, -1.0, 1.0));
    const double t2 = std::acos(std::clamp(c2, -1.0, 1.0));
    const double A = 0.5 * (t1 + t2), B = 0.5 * (t2 - t1);
    const double U = std::sin(A), V = std::sin(B);
    const double den = (U - V) * (U + V);
    if (std::fabs(den) < kFociTol)
        throw SingularPotential("spherical gradient: U^2-V^2 below tolerance");
    const double val = (F.eval(U) + G.eval(V)) / den;
    const double dPdU = F.deriv(U) / den - 2.0 * U * val / den;
    const double dPdV = G.deriv(V) / den + 2.0 * V * val / den;
    const double cA = std::cos(A), cB = std::cos(B);
    // dU/dt1 = dU/dt2 = cA/2; dV/dt1 = -cB/2, dV/dt2 = cB/2
    Vec3 grad = (gt1 + gt2) * (0.5 * cA * dPdU) + (gt2 - gt1) * (0.5 * cB * dPdV);
    // tangential part only
    const double qn2 = q.norm2();
    return grad - q * (q.dot(grad) / qn2);
}

double PlanarSystem::separable(double u, double v) const {
    const double den = (u - v) * (u + v);
    if (std::fabs(den) < kFociTol)
        throw FociSingularity("potential_plane: u^2-v^2 below tolerance");
    return (f.eval(u) + g.eval(v)) / den;
}

double PlanarSystem::value(const Vec2& x12) const {
    if (cart_value) return cart_value(x12);
    const Elliptic e = coords::elliptic_from_plane(x12, cfg);
    return separable(e.u, e.v);
}

Vec2 PlanarSystem::gradient(const Vec2& x12) const {
    if (cart_grad) return cart_grad(x12);
    const double a = cfg.a;
    const double r1 = std::hypot(x12.x - a, x12.y);
    const double r2 = std::hypot(x12.x + a, x12.y);
    if (r1 < 1e-12 * a || r2 < 1e-12 * a)
        throw FocusSingularity("planar gradient: evaluation at a focus");
    const Vec2 e1{(x12.x - a) / r1, x12.y / r1};
    const Vec2 e2{(x12.x + a) / r2, x12.y / r2};
    const Vec2 gu = (e1 + e2) / (2.0 * a);
    const Vec2 gv = (e2 - e1) / (2.0 * a);
    const double u = (r1 + r2) / (2.0 * a), v = (r2 - r1) / (2.0 * a);
    const double den = (u - v) * (u + v);
    if (std::fabs(den) < kFociTol)
        throw FocusSingularity("planar gradient: u^2-v^2 below tolerance");
    const double val = (f.eval(u) + g.eval(v)) / den;
    const double dPdu = f.deriv(u) / den - 2.0 * u * val / den;
    const double dPdv = g.deriv(v) / den + 2.0 * v * val / den;
    return gu * dPdu + gv * dPdv;
}

double potential_sphere(const SphericalSystem& sys, double U, double V) {
    return sys.separable(U, V);
}

double potential_plane(const PlanarSystem& sys, double u, double v) {
    return sys.separable(u, v);
}

}  // namespace liouville::systems
