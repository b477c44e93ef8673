#include "mealsim/linearity.hpp"

#include <algorithm>
#include <cmath>

namespace mealsim {

namespace {

Trajectory simulate_shape(const ModelInstance& model, const MealSchedule& schedule,
                          double horizon_min, const IntegratorOptions& opts) {
    const Vector x0 = Vector::Zero(model.state_dim);
    if (schedule.all_impulses()) {
        return simulate_impulse_meals(model, x0, schedule, horizon_min, opts);
    }
    if (schedule.all_steps()) {
        return simulate_step_meals(model, x0, schedule, horizon_min, opts);
    }
    throw std::invalid_argument(
        "schedule shape mixes instantaneous and flow-rate meals");
}

Trajectory scaled_copy(const Trajectory& base, double factor) {
    Trajectory out = base;
    out.states *= factor;
    for (double& y : out.outputs) y *= factor;
    for (double& y : out.per_kg_outputs) y *= factor;
    for (auto& rec : out.impulses) rec.carbs_mg *= factor;
    return out;
}

}  // namespace

MealSchedule ScheduleShape::with_total(double total_carbs_mg) const {
    const double reference_total = reference.total_carbs_mg();
    if (!(reference_total > 0.0)) {
        throw std::invalid_argument("schedule shape has no carbohydrates to scale");
    }
    return reference.scaled(total_carbs_mg / reference_total);
}

NormalizedRun normalized_run(const ModelInstance& model, const ScheduleShape& shape,
                             double horizon_min, const IntegratorOptions& opts) {
    NormalizedRun run;
    run.model_name = model.name;
    run.linear_in_meal_size = model.linear_in_meal_size;
    run.shape = shape;
    run.horizon_min = horizon_min;
    run.options = opts;
    run.base = simulate_shape(model, shape.with_total(1.0), horizon_min, opts);
    return run;
}

Trajectory scale_response(const NormalizedRun& run, double carbs_mg) {
    if (!run.linear_in_meal_size) {
        throw std::invalid_argument(
            "scale_response: model '" + run.model_name +
            "' is not linear in the meal size (its response cannot be obtained by "
            "scaling the unit-meal response)");
    }
    if (run.shape.durations_scale_with_mass) {
        throw std::invalid_argument(
            "scale_response: the schedule's durations grow with the meal size, so the "
            "input itself is not linear in the meal size");
    }
    if (!(carbs_mg >= 0.0)) throw std::invalid_argument("carbs must be nonnegative");
    return scaled_copy(run.base, carbs_mg);
}

double LinearityReport::worst_deviation() const {
    double worst = 0.0;
    for (const LinearityEntry& e : entries) worst = std::max(worst, e.max_rel_deviation);
    return worst;
}

LinearityReport verify_d_linearity(const ModelInstance& model, const ScheduleShape& shape,
                                   const std::vector<double>& carbs_mg_list,
                                   double horizon_min, const IntegratorOptions& opts) {
    if (carbs_mg_list.size() < 2) {
        throw std::invalid_argument("verify_d_linearity: need at least two meal sizes");
    }
    const NormalizedRun run = normalized_run(model, shape, horizon_min, opts);

    LinearityReport report;
    report.model_name = model.name;
    report.expected_linear =
        model.linear_in_meal_size && !shape.durations_scale_with_mass;

    for (double carbs : carbs_mg_list) {
        const Trajectory direct =
            simulate_shape(model, shape.with_total(carbs), horizon_min, opts);
        const Trajectory scaled = scaled_copy(run.base, carbs);
        if (direct.size() != scaled.size()) {
            throw std::logic_error("verify_d_linearity: runs sampled different grids");
        }
        double scale = 0.0;
        for (double y : direct.outputs) scale = std::max(scale, std::abs(y));
        double worst = 0.0;
        for (std::size_t i = 0; i < direct.outputs.size(); ++i) {
            worst = std::max(worst, std::abs(direct.outputs[i] - scaled.outputs[i]));
        }
        report.entries.push_back({carbs, scale > 0.0 ? worst / scale : worst});
    }
    return report;
}

}  // namespace mealsim
