#pragma once

#include "mealsim/config.hpp"
#include "mealsim/engine.hpp"
#include "mealsim/series.hpp"

namespace mealsim {

struct ScenarioResult {
    ScenarioConfig config;
    ModelInstance model;
    Trajectory trajectory;
    /// Most negative state value seen over the run; spectral discretizations
    /// may overshoot below zero, which is reported rather than clipped.
    double min_state_value = 0.0;
};

/// Simulate one scenario from rest (impulse or flow-rate schedule).
ScenarioResult run_scenario(const ScenarioConfig& config);

/// One simulated (model, meal size) pair of the comparison suite.
struct ComparisonEntry {
    std::string label;     // "<scenario>-<D>g"
    std::string model_id;
    double carbs_mg = 0.0;
    double body_weight_kg = 0.0;
    std::vector<double> series;  // R_A (mg/min), or per kg when the report says so
    SeriesStats stats;           // computed on the mg/min series
};

struct ComparisonReport {
    std::vector<double> times_min;  // shared output grid
    std::vector<ComparisonEntry> entries;
    bool per_kg = false;
    double deadband = 1e-3;  // mg/min, local-maxima hysteresis
};

/// Simulate every (scenario, meal size) pair on a shared output grid. Each
/// scenario's meal schedule (default: one instantaneous meal at t = 0) is
/// rescaled to each total size in carbs_g.
ComparisonReport run_comparison(const std::vector<ScenarioConfig>& configs,
                                const std::vector<double>& carbs_g);

}  // namespace mealsim
