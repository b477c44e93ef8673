#pragma once

#include "mealsim/models/cstr_pfr.hpp"
#include "mealsim/types.hpp"

#include <map>

namespace mealsim {

/// One row of the model comparison table.
struct ModelSummary {
    std::string id;
    std::string equation_types;  // "ODEs" or "ODEs and PDEs"
    std::string state_count;     // "2", "3", "4", or "1+M"
    bool linear = false;
    bool linear_in_meal_size = false;
};

/// Every built-in model in catalog order.
const std::vector<ModelSummary>& model_catalog();

bool is_known_model(const std::string& id);

/// Parameter names accepted as overrides for the given model (the built-in
/// defaults carry the published values).
const std::vector<std::string>& known_parameter_names(const std::string& id);

/// Build a model from its catalog id with parameter overrides. `scheme` and
/// `resolution` apply to the cstr-pfr variants only (resolution 0 selects the
/// default: 100 cells for the finite-volume scheme, order 32 for the
/// spectral scheme).
ModelInstance make_model(const std::string& id,
                         const std::map<std::string, double>& overrides = {},
                         IntestineScheme scheme = IntestineScheme::FiniteVolume,
                         int resolution = 0);

}  // namespace mealsim
