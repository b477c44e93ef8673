#pragma once

#include <Eigen/Dense>

#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace mealsim {

using Vector = Eigen::VectorXd;
using Matrix = Eigen::MatrixXd;
using RowVector = Eigen::RowVectorXd;

/// Thrown when a simulation cannot proceed (step-size underflow, non-finite
/// right-hand side values).
class SimulationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// One meal. `duration_min == 0` marks an instantaneous meal that enters the
/// simulation as a state jump; `duration_min > 0` marks a constant flow rate
/// carbs_mg / duration_min on [time_min, time_min + duration_min).
struct MealEvent {
    double time_min = 0.0;
    double carbs_mg = 0.0;
    double duration_min = 0.0;
};

/// Ordered meal events. Event times must be strictly increasing and the
/// intervals covered by flow-rate meals must not overlap.
struct MealSchedule {
    std::vector<MealEvent> events;

    void validate() const;
    bool all_impulses() const;
    bool all_steps() const;
    double total_carbs_mg() const;

    /// Same event times and durations, carbohydrate masses multiplied by `factor`.
    MealSchedule scaled(double factor) const;
};

struct IntegratorOptions {
    double rel_tol = 1e-8;
    double abs_tol = 1e-10;            // state units (mg)
    double max_step_min = 1e3;
    double output_interval_min = 1.0;

    void validate() const;
};

/// Per-run meal history the engine hands to the right-hand side. Models whose
/// dynamics depend on it (Dalla Man's emptying curve, Alskar's lag clock)
/// read it here; the ModelInstance itself stays immutable.
struct MealContext {
    double last_meal_time_min = 0.0;
    double meal_mass_mg = 0.0;  // carbohydrate mass governing the emptying curve
};

/// Continuous-time linear state-space system
///   x' = A x + B u,  y = C x + D u.
struct LinearRealization {
    Matrix A;      // n x n
    Matrix B;      // n x m
    RowVector C;   // 1 x n
    double D = 0;  // scalar feedthrough (single-output systems)
};

/// A named meal model: right-hand side, output map, and optional structure
/// (meal-injection map, linear realization). Instances are immutable after
/// construction and safe to share between concurrently running simulations;
/// all per-run state lives in the engine and in MealContext.
struct ModelInstance {
    std::string name;
    Eigen::Index state_dim = 0;
    std::vector<std::string> state_labels;

    /// dx = f(x, d) evaluated at time t, meal input d in mg/min.
    std::function<void(double t, const Vector& x, double d, const MealContext& ctx,
                       Vector& dx)>
        rhs;

    /// Glucose rate of appearance R_A in mg/min.
    std::function<double(const Vector& x)> output;

    /// Meal-injection map f_d for input-affine models; empty when the model
    /// does not expose one (impulse meals are then rejected).
    std::function<Vector(const Vector& x)> injection;

    /// Invoked when a meal starts; returns the updated context. When empty
    /// the engine applies {t, carbs_mg}.
    std::function<MealContext(const MealContext& ctx, double t, const Vector& x_pre,
                              double carbs_mg)>
        on_meal;

    /// Filled for models in linear state-space form.
    std::optional<LinearRealization> linear;

    /// Whether R_A scales proportionally with the total meal carbohydrate
    /// content for impulse/step meal inputs.
    bool linear_in_meal_size = false;

    double body_weight_kg = 82.0;
};

/// Sampled simulation result. Times are ascending; at an instantaneous meal
/// the event time appears twice (state immediately before and after the
/// jump), recorded in `impulses`.
struct Trajectory {
    std::vector<double> times_min;
    Matrix states;                        // n_times x n_states
    std::vector<double> outputs;          // R_A, mg/min
    std::vector<double> per_kg_outputs;   // R_A / BW, mg/(kg min)

    struct ImpulseRecord {
        std::size_t pre_index = 0;
        std::size_t post_index = 0;
        double carbs_mg = 0.0;
    };
    std::vector<ImpulseRecord> impulses;

    std::size_t size() const { return times_min.size(); }
};

}  // namespace mealsim
