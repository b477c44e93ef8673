#pragma once

#include "mealsim/types.hpp"

namespace mealsim {

/// Two-compartment gastric/intestinal chain with a shared time constant.
struct HovorkaParams {
    double A_G = 0.8;     // carbohydrate bioavailability
    double tau_D = 40.0;  // min
    double f = 1.0;       // fraction of absorbed glucose reaching the blood
    double BW = 82.0;     // kg

    void validate() const;
};

/// A_c = [[-1/tau, 0], [1/tau, -1/tau]], B_c = (A_G, 0)', C_c = (0, f/tau).
LinearRealization hovorka_realization(const HovorkaParams& p);

ModelInstance hovorka_model(const HovorkaParams& p = {});

}  // namespace mealsim
