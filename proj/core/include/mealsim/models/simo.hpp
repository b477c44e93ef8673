#pragma once

#include "mealsim/types.hpp"

namespace mealsim {

/// Four-compartment stomach/jejunum/delay/ileum chain with absorption from
/// the jejunum and the ileum.
struct SimoParams {
    double k_js = 0.026;  // 1/min, stomach -> jejunum
    double k_rj = 0.033;  // 1/min, jejunum -> delay compartment
    double k_lr = 0.030;  // 1/min, delay compartment -> ileum
    double k_gj = 0.036;  // 1/min, jejunal absorption
    double k_gl = 0.027;  // 1/min, ileal absorption
    double f = 1.0;
    double BW = 82.0;     // kg

    void validate() const;
};

LinearRealization simo_realization(const SimoParams& p);

ModelInstance simo_model(const SimoParams& p = {});

}  // namespace mealsim
