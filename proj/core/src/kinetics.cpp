#include "mealsim/kinetics.hpp"

namespace mealsim {

Vector production_rates(const StoichiometricSystem& sys, const Vector& concentrations) {
    if (!sys.rate_fn) throw std::invalid_argument("stoichiometric system has no rate function");
    if (concentrations.size() != sys.S.cols()) {
        throw std::invalid_argument("production_rates: concentration vector has size " +
                                    std::to_string(concentrations.size()) + ", expected " +
                                    std::to_string(sys.S.cols()));
    }
    const Vector rates = sys.rate_fn(concentrations);
    if (rates.size() != sys.S.rows()) {
        throw std::invalid_argument("production_rates: rate function returned " +
                                    std::to_string(rates.size()) + " rates, expected " +
                                    std::to_string(sys.S.rows()));
    }
    return sys.S.transpose() * rates;
}

void CstrSpec::validate() const {
    if (!(volume > 0.0)) throw std::invalid_argument("CSTR volume must be positive");
    if (!(flow >= 0.0)) throw std::invalid_argument("CSTR flow must be nonnegative");
}

Vector cstr_rhs(const CstrSpec& spec, const Vector& concentrations,
                const Vector& production) {
    spec.validate();
    if (concentrations.size() != spec.inflow_concentration.size() ||
        concentrations.size() != production.size()) {
        throw std::invalid_argument("cstr_rhs: inconsistent dimensions");
    }
    return (spec.inflow_concentration - concentrations) * (spec.flow / spec.volume) +
           production;
}

void PfrFluxSpec::validate() const {
    if (!(diffusion >= 0.0)) {
        throw std::invalid_argument("diffusion coefficient must be nonnegative");
    }
}

double pfr_flux(const PfrFluxSpec& spec, double concentration, double dc_dz) {
    return spec.velocity * concentration - spec.diffusion * dc_dz;
}

}  // namespace mealsim
