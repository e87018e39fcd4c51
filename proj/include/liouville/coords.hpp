#pragma once

#include "liouville/manifold.hpp"

namespace liouville::coords {

using geom::Chart;
using geom::ManifoldConfig;
using geom::PlanePoint;
using geom::SpherePoint;

/// Sphero-conical coordinates on S^2.  The paper defines Y^2 and Z^2 only,
/// so the two sign bits are stored explicitly: together with sign(V) (which
/// fixes sign(X)) they make the 4-to-1 cover of the sphere explicit.
/// Domain: sigma_bar <= U <= 1, |V| <= sigma_bar.
struct SpheroConical {
    double U = 0, V = 0;
    int sign_Y = +1, sign_Z = +1;
};

/// Euler elliptic coordinates on the rescaled plane (x1, x2), relative to
/// foci (+-a, 0).  Domain: u >= 1, |v| <= 1; sign_x2 records the branch of
/// the 2-to-1 cover.
struct Elliptic {
    double u = 1, v = 0;
    int sign_x2 = +1;
};

/// The two fixed reference points on each manifold.
struct Foci {
    SpherePoint F1, F2;  ///< (+-R sigma_bar, 0, R sigma)
    Vec2 f1, f2;         ///< (+-a, 0) on the rescaled plane
};

Foci foci(const ManifoldConfig& cfg);

/// Geodesic polar angles theta_1, theta_2 of a sphere point about the foci:
/// cos(theta_i) = (sigma Z +- sigma_bar X)/R.
struct FocalAngles {
    double theta1 = 0, theta2 = 0;
};
FocalAngles focal_angles(const SpherePoint& p, const ManifoldConfig& cfg);

/// U = sin((theta1+theta2)/2), V = sin((theta2-theta1)/2), with the sign
/// bits taken from the point itself.
SpheroConical spheroconical_from_sphere(const SpherePoint& p, const ManifoldConfig& cfg);

/// X = (R/sigma_bar) U V, Y^2 = (R/(sigma sigma_bar))^2 (U^2-sb^2)(sb^2-V^2),
/// Z^2 = (R/sigma)^2 (1-U^2)(1-V^2); Y, Z signs from the stored bits.
/// Throws DomainError outside the (U,V) rectangle (beyond tolerance).
SpherePoint sphere_from_spheroconical(const SpheroConical& sc, const ManifoldConfig& cfg);

/// u = (r1+r2)/2a, v = (r2-r1)/2a about the rescaled-plane foci (+-a, 0).
Elliptic elliptic_from_plane(const Vec2& x12, const ManifoldConfig& cfg);

/// x1 = a u v, x2^2 = a^2 (u^2-1)(1-v^2) with the stored x2 sign.
Vec2 plane_from_elliptic(const Elliptic& e, const ManifoldConfig& cfg);

/// The identification u(U) = sigma U/(sigma_bar sqrt(1-U^2)) and the same
/// map for v(V).  Throws EquatorPoint when 1-U^2 is below tolerance.
struct UVPair { double u = 1, v = 0; };
UVPair identify_uv(double U, double V, const ManifoldConfig& cfg);

/// Inverse identification: U = sigma_bar u/sqrt(sigma^2+sigma_bar^2 u^2).
struct UVCaps { double U = 0, V = 0; };
UVCaps identify_UV(double u, double v, const ManifoldConfig& cfg);

/// Identification map for coordinate velocities: du/dU = (sigma/sigma_bar)
/// (1-U^2)^{-3/2} (same form in V).  No time rescaling here.
double didentify_dU(double U, const ManifoldConfig& cfg);

/// Linear chart change between gnomonic (x, y) and rescaled (x1, x2) = (x, y/sigma).
Vec2 rescale_to_x12(const Vec2& xy, const ManifoldConfig& cfg);
Vec2 rescale_from_x12(const Vec2& x12, const ManifoldConfig& cfg);

}  // namespace liouville::coords
