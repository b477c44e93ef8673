#pragma once

#include "mealsim/types.hpp"

namespace mealsim {

/// Reaction network: stoichiometric coefficients S (one row per reaction,
/// one column per species) and the rate function r = r(c).
struct StoichiometricSystem {
    Matrix S;
    std::function<Vector(const Vector&)> rate_fn;
};

/// Species production rates R = S' r(c).
Vector production_rates(const StoichiometricSystem& sys, const Vector& concentrations);

/// Perfectly mixed tank with constant volume.
struct CstrSpec {
    double volume = 1.0;
    double flow = 0.0;
    Vector inflow_concentration;

    void validate() const;
};

/// c' = (c_in - c) F/V + R.
Vector cstr_rhs(const CstrSpec& spec, const Vector& concentrations,
                const Vector& production);

/// Advective-diffusive flux coefficients of a plug-flow reactor.
struct PfrFluxSpec {
    double velocity = 0.0;     // length/min
    double diffusion = 0.0;    // length^2/min

    void validate() const;
};

/// N = v c - D_c dc/dz (advection plus Fick diffusion).
double pfr_flux(const PfrFluxSpec& spec, double concentration, double dc_dz);

}  // namespace mealsim
