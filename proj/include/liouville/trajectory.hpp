#pragma once

#include <array>
#include <cmath>
#include <cstdint>
#include <string>
#include <vector>

#include "liouville/manifold.hpp"

namespace liouville::traj {

/// The four time parametrizations: physical t, projected tau
/// (d tau = ((R^2+x^2+y^2)/R^2) dt), sphere-local varsigma
/// (d varsigma = dt/(U^2-V^2)) and plane-local zeta (d zeta = d tau/(u^2-v^2)).
enum class TimeTag : int { Physical = 0, Projected = 1, SphereLocal = 2, PlaneLocal = 3 };

inline int time_index(TimeTag t) { return static_cast<int>(t); }
const char* time_name(TimeTag t);

/// Coordinate content of a sample.
enum class Frame {
    SphereCartesian,  ///< pos = (X,Y,Z), vel = d(pos)/d(stamp)
    PlaneGnomonic,    ///< pos = (x,y,0) on a chart of (R^2, g)
    PlaneRescaled,    ///< pos = (x1,x2,0) on the Euclidean plane
    SpheroConicalUV,  ///< pos = (U,V,0), vel = (dU,dV)/d(stamp); sy/sz give Y,Z signs
    EllipticUV        ///< pos = (u,v,0); sy gives the x2 sign
};

struct Sample {
    Vec3 pos{};
    Vec3 vel{};
    /// t, tau, varsigma, zeta; NaN where not defined
    std::array<double, 4> times{std::nan(""), std::nan(""), std::nan(""), std::nan("")};
    std::int8_t sy = +1, sz = +1;  ///< sign branches for the UV frames

    double stamp(TimeTag tag) const { return times[time_index(tag)]; }
    void set_stamp(TimeTag tag, double v) { times[time_index(tag)] = v; }
};

struct Event {
    double stamp = 0;      ///< in the trajectory's own time tag
    std::string kind;      ///< "turn-U", "turn-V", "turn-u", "turn-v", "equator", ...
    double value = 0;      ///< e.g. refined radicand root for turning points
};

/// Ordered samples with one time parametrization; timestamps strictly increase.
struct Trajectory {
    Frame frame = Frame::SphereCartesian;
    geom::Chart chart = geom::Chart::North;
    TimeTag tag = TimeTag::Physical;
    std::vector<Sample> samples;
    std::vector<Event> events;
    std::string system_label;

    std::size_t size() const { return samples.size(); }
    const Sample& front() const { return samples.front(); }
    const Sample& back() const { return samples.back(); }
    double duration() const {
        return samples.empty() ? 0.0 : back().stamp(tag) - front().stamp(tag);
    }
};

}  // namespace liouville::traj
