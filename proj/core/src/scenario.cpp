#include "mealsim/scenario.hpp"

#include "mealsim/linearity.hpp"

#include <cmath>
#include <cstdio>

namespace mealsim {

namespace {

Trajectory simulate(const ModelInstance& model, const MealSchedule& schedule,
                    double horizon, const IntegratorOptions& opts) {
    const Vector x0 = Vector::Zero(model.state_dim);
    if (schedule.events.empty()) {
        return integrate(model, x0, PiecewiseConstantInput::zero(), 0.0, horizon, opts);
    }
    if (schedule.all_impulses()) {
        return simulate_impulse_meals(model, x0, schedule, horizon, opts);
    }
    if (schedule.all_steps()) {
        return simulate_step_meals(model, x0, schedule, horizon, opts);
    }
    throw std::invalid_argument("schedule mixes instantaneous and flow-rate meals");
}

IntegratorOptions options_for(const ScenarioConfig& config) {
    IntegratorOptions opts;
    opts.output_interval_min = config.output_interval_min;
    return opts;
}

}  // namespace

ScenarioResult run_scenario(const ScenarioConfig& config) {
    ScenarioResult result;
    result.config = config;
    result.model = config.build_model();
    result.trajectory =
        simulate(result.model, config.schedule, config.horizon_min, options_for(config));
    result.min_state_value = result.trajectory.states.size() > 0
                                 ? result.trajectory.states.minCoeff()
                                 : 0.0;
    return result;
}

ComparisonReport run_comparison(const std::vector<ScenarioConfig>& configs,
                                const std::vector<double>& carbs_g) {
    if (configs.empty()) throw std::invalid_argument("run_comparison: no scenarios");
    if (carbs_g.empty()) throw std::invalid_argument("run_comparison: no meal sizes");

    const double horizon = configs.front().horizon_min;
    const double interval = configs.front().output_interval_min;
    const bool per_kg = configs.front().per_kg;
    for (const ScenarioConfig& cfg : configs) {
        if (cfg.horizon_min != horizon || cfg.output_interval_min != interval ||
            cfg.per_kg != per_kg) {
            throw ConfigError(
                "comparison scenarios must share horizon, output_interval, and per_kg");
        }
    }

    ComparisonReport report;
    report.per_kg = configs.front().per_kg;

    for (const ScenarioConfig& cfg : configs) {
        const ModelInstance model = cfg.build_model();
        MealSchedule base = cfg.schedule;
        if (base.events.empty()) base.events.push_back({0.0, 1.0, 0.0});
        const ScheduleShape shape{base, false};
        const IntegratorOptions opts = options_for(cfg);

        for (double grams : carbs_g) {
            const double carbs_mg = 1000.0 * grams;
            const Trajectory traj =
                simulate(model, shape.with_total(carbs_mg), cfg.horizon_min, opts);

            // Drop the duplicated impulse rows so every entry shares one grid.
            std::vector<double> times;
            std::vector<double> series;
            times.reserve(traj.size());
            series.reserve(traj.size());
            for (std::size_t i = 0; i < traj.size(); ++i) {
                if (!times.empty() && traj.times_min[i] == times.back()) {
                    series.back() = traj.outputs[i];
                    continue;
                }
                times.push_back(traj.times_min[i]);
                series.push_back(traj.outputs[i]);
            }

            if (report.times_min.empty()) {
                report.times_min = times;
            } else if (times != report.times_min) {
                throw ConfigError("comparison runs produced different output grids");
            }

            char grams_text[32];
            std::snprintf(grams_text, sizeof(grams_text), "%g", grams);
            ComparisonEntry entry;
            entry.label = cfg.name + "-" + grams_text + "g";
            entry.model_id = cfg.model_id;
            entry.carbs_mg = carbs_mg;
            entry.body_weight_kg = model.body_weight_kg;
            entry.stats = series_stats(times, series, report.deadband);
            if (report.per_kg) {
                for (double& y : series) y /= model.body_weight_kg;
            }
            entry.series = std::move(series);
            report.entries.push_back(std::move(entry));
        }
    }
    return report;
}

}  // namespace mealsim
