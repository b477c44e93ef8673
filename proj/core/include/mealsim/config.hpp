#pragma once

#include "mealsim/models/cstr_pfr.hpp"
#include "mealsim/types.hpp"

#include <map>

namespace mealsim {

class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// One scenario: a model with overrides, a meal schedule, and run settings.
struct ScenarioConfig {
    std::string name;      // section label (defaults to the model id)
    std::string model_id;
    std::map<std::string, double> overrides;
    MealSchedule schedule;  // carbs already converted to mg
    double horizon_min = 600.0;
    double output_interval_min = 1.0;
    IntestineScheme scheme = IntestineScheme::FiniteVolume;
    int resolution = 0;     // 0 selects the scheme default
    bool per_kg = false;
    std::vector<double> carbs_g = {45.0, 90.0, 180.0};  // for compare/check-linearity

    ModelInstance build_model() const;
};

/// Parse a config file: '#' comments, `[scenario <name>]` section headers,
/// `key = value` lines. Keys that are not run settings are treated as
/// parameter overrides and validated against the model's parameter table;
/// unknown keys are rejected with the nearest known key as a suggestion.
std::vector<ScenarioConfig> load_configs(const std::string& path);

/// As load_configs, requiring exactly one scenario.
ScenarioConfig load_config(const std::string& path);

/// The closest candidate by edit distance (empty if nothing is close).
std::string nearest_key(const std::string& key, const std::vector<std::string>& candidates);

}  // namespace mealsim
