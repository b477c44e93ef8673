#pragma once

#include "mealsim/engine.hpp"
#include "mealsim/types.hpp"

namespace mealsim {

/// A meal pattern up to scaling: event times and durations are fixed, and
/// carbohydrate masses scale proportionally with the total meal size. When
/// `durations_scale_with_mass` is set the input is no longer linear in the
/// meal size and response scaling is disabled.
struct ScheduleShape {
    MealSchedule reference;
    bool durations_scale_with_mass = false;

    /// Events with masses rescaled so the total equals `total_carbs_mg`.
    MealSchedule with_total(double total_carbs_mg) const;
};

/// Simulation of the unit meal (total carbohydrate mass 1 mg).
struct NormalizedRun {
    std::string model_name;
    bool linear_in_meal_size = false;
    ScheduleShape shape;
    double horizon_min = 0.0;
    IntegratorOptions options;
    Trajectory base;
};

NormalizedRun normalized_run(const ModelInstance& model, const ScheduleShape& shape,
                             double horizon_min, const IntegratorOptions& opts = {});

/// The response to a meal of `carbs_mg` obtained by scaling the normalized
/// run (states and outputs multiplied by carbs_mg). Rejects models that are
/// not linear in the meal size and shapes whose durations scale with it.
Trajectory scale_response(const NormalizedRun& run, double carbs_mg);

struct LinearityEntry {
    double carbs_mg = 0.0;
    double max_rel_deviation = 0.0;
};

struct LinearityReport {
    std::string model_name;
    bool expected_linear = false;
    /// Deviations above this are flagged NONLINEAR.
    double flag_threshold = 1e-2;
    std::vector<LinearityEntry> entries;

    double worst_deviation() const;
    bool flagged_nonlinear() const { return worst_deviation() > flag_threshold; }
};

/// Simulates every meal size directly and compares against the scaled unit
/// run; reports the relative sup-norm deviation of R_A per meal size.
LinearityReport verify_d_linearity(const ModelInstance& model, const ScheduleShape& shape,
                                   const std::vector<double>& carbs_mg_list,
                                   double horizon_min, const IntegratorOptions& opts = {});

}  // namespace mealsim
