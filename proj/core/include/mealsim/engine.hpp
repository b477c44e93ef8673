#pragma once

#include "mealsim/types.hpp"

namespace mealsim {

/// Piecewise-constant input signal: d(t) = values[i] for
/// breaks[i] <= t < breaks[i+1], and zero outside [breaks.front(), breaks.back()).
struct PiecewiseConstantInput {
    std::vector<double> breaks;  // size k+1, strictly increasing (empty means d == 0)
    std::vector<double> values;  // size k

    static PiecewiseConstantInput zero() { return {}; }

    /// Input function of a schedule of flow-rate meals, d_k = carbs_k / duration_k.
    static PiecewiseConstantInput from_schedule(const MealSchedule& schedule);

    double value_at(double t) const;
    void validate() const;
};

/// Integrate x' = f(x, d(t)) over [t_begin, t_end] with an embedded
/// Runge-Kutta 5(4) pair (PI step control, 4th-order dense output sampled at
/// opts.output_interval_min). The stepper never crosses an input breakpoint.
Trajectory integrate(const ModelInstance& model, const Vector& x0,
                     const PiecewiseConstantInput& input, double t_begin, double t_end,
                     const IntegratorOptions& opts = {});

/// Simulate a schedule of flow-rate meals (all durations > 0) over [0, horizon].
/// During [t_k, t_k + duration_k) the input is carbs_k / duration_k, zero
/// elsewhere; the state is continuous across interval boundaries.
Trajectory simulate_step_meals(const ModelInstance& model, const Vector& x0,
                               const MealSchedule& schedule, double horizon_min,
                               const IntegratorOptions& opts = {});

/// Simulate a schedule of instantaneous meals (all durations == 0) over
/// [0, horizon]. At each event the state jumps by f_d(x-) * carbs_k; both the
/// pre- and post-jump states are recorded. Requires model.injection.
Trajectory simulate_impulse_meals(const ModelInstance& model, const Vector& x0,
                                  const MealSchedule& schedule, double horizon_min,
                                  const IntegratorOptions& opts = {});

/// The zero steady state of the autonomous part, verified against
/// ||f_x(0)||_inf <= tol.
Vector steady_state(const ModelInstance& model, double tol = 1e-10);

}  // namespace mealsim
