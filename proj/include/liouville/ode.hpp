#pragma once

#include <functional>
#include <span>
#include <vector>

#include "liouville/errors.hpp"

namespace liouville::math {

/// dydt = f(t, y); y and dydt have the dimension passed to integrate().
using Rhs = std::function<void(double t, const double* y, double* dydt)>;

/// Scalar event g(t, y); a root of g along the solution is located by
/// bisection on the dense output.
struct EventSpec {
    std::function<double(double t, const double* y)> g;
    int direction = 0;   ///< +1: only -..+ crossings, -1: only +..-, 0: both
    bool stop = false;   ///< terminate the integration at the event
};

struct OdeOptions {
    double rel_tol = 1e-10;
    double abs_tol = 1e-12;
    double max_step = 0;        ///< 0: unbounded
    double initial_step = 0;    ///< 0: automatic
    double event_tol = 1e-12;   ///< event time tolerance, relative to step size
    long max_steps = 4000000;
    /// applied to the state after every accepted step (constraint projection)
    std::function<void(double t, double* y)> postprocess;
};

struct EventHit {
    std::size_t event_index = 0;
    double t = 0;
    std::vector<double> y;
};

/// Solution with dense output: piecewise quartic interpolant per accepted step.
class OdeSolution {
public:
    double t_begin() const { return t0_; }
    double t_end() const { return t1_; }
    std::size_t dim() const { return dim_; }
    std::size_t num_steps() const { return seg_t_.empty() ? 0 : seg_t_.size() - 1; }

    /// Interpolate the state at time t (clamped to [t_begin, t_end]).
    void sample(double t, double* y) const;
    std::vector<double> sample(double t) const;

    const std::vector<EventHit>& events() const { return events_; }

    /// n >= 2 states at uniform times over the solution span.
    std::vector<std::pair<double, std::vector<double>>> sample_uniform(std::size_t n) const;

private:
    friend OdeSolution integrate(std::size_t, const Rhs&, double, std::span<const double>,
                                 double, const OdeOptions&, std::span<const EventSpec>);
    std::size_t dim_ = 0;
    double t0_ = 0, t1_ = 0;
    std::vector<double> seg_t_;       // accepted-step boundaries, size nseg+1
    std::vector<double> rcont_;       // nseg * 5 * dim interpolation coefficients
    std::vector<EventHit> events_;
    void interpolate_segment(std::size_t seg, double theta, double* y) const;
};

/// Adaptive embedded Dormand-Prince 5(4) with the standard quartic continuous
/// extension.  Integrates forward (t1 > t0).  Throws StepFailure when the
/// controller collapses or max_steps is exhausted.
OdeSolution integrate(std::size_t dim, const Rhs& f, double t0, std::span<const double> y0,
                      double t1, const OdeOptions& opt = {},
                      std::span<const EventSpec> events = {});

}  // namespace liouville::math
