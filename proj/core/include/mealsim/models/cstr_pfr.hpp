#pragma once

#include "mealsim/fv.hpp"
#include "mealsim/spectral.hpp"
#include "mealsim/types.hpp"

#include <variant>

namespace mealsim {

/// Stomach tank feeding a small-intestine plug-flow reactor through the
/// pylorus. State layout: (m_s, intestine dofs) with the intestine carrying
/// cell masses (finite volume) or nodal concentrations (spectral Galerkin).
struct CstrPfrParams {
    double z_0 = 0.0;        // m
    double z_f = 2.85;       // m
    double v_p = 0.0102;     // m/min, peristaltic advection
    double D_p = 1.0e-4;     // m^2/min, diffusion in the chyme
    double r_si = 0.018;     // m, intestine radius
    double f = 12.0;         // surface-area factor
    double v_a = 6.4392e-6;  // m/min, absorption mass-transfer coefficient
    double BW = 82.0;        // kg

    double area() const;           // A_si = pi r_si^2
    double duodenum_end() const;   // z_d = z_0 + 0.08 (z_f - z_0)
    double absorption_rate() const;  // (2 f / r_si) v_a, 1/min
    void validate() const;
};

/// Pylorus always open: constant rate.
struct OpenPylorus {
    double k_sd = 0.06;  // 1/min
};

/// Output feedback: the rate collapses once R_A crosses R_A_max.
struct MoxonPylorus {
    double k_sd_max = 0.0554;  // 1/min
    double R_A_max = 420.0;    // mg/min
    double sigma = 0.1;        // min/mg, switch steepness
};

/// Duodenal-content feedback with a Hill gate and a floor rate.
struct AlskarPylorus {
    double k_sd_min = 0.0116;  // 1/min
    double k_sd_max = 0.14;    // 1/min
    double m_d_50 = 7420.0;    // mg
    double gamma = 14.0;
};

using PylorusMode = std::variant<OpenPylorus, MoxonPylorus, AlskarPylorus>;

/// k_sd = k_sd_max / (1 + exp(sigma (R_A - R_A_max))).
double k_sd_moxon(double rate_of_appearance, const MoxonPylorus& mode);

/// k_sd = k_sd_min + (k_sd_max - k_sd_min)(1 - m_d^g/(m_d50^g + m_d^g)),
/// Hill term in log space.
double k_sd_alskar(double duodenum_mass_mg, const AlskarPylorus& mode);

enum class IntestineScheme { FiniteVolume, SpectralGalerkin };

/// The spatial discretization of the intestine, built once and shared.
struct IntestineDiscretization {
    IntestineScheme scheme = IntestineScheme::FiniteVolume;
    std::optional<FvGrid> grid;        // finite volume
    std::optional<SpectralBasis> basis;  // spectral Galerkin
    DomainMap map;

    Eigen::Index dof_count() const;

    static IntestineDiscretization finite_volume(const CstrPfrParams& p, int cells = 100);
    static IntestineDiscretization spectral(const CstrPfrParams& p, int order = 32);
};

/// State derivative of (m_s, intestine dofs) for meal inflow d (mg/min).
Vector cstr_pfr_rhs(const Vector& state, const IntestineDiscretization& disc,
                    const PylorusMode& mode, double d, const CstrPfrParams& p);

/// R_A = A_si int (2f/r_si) v_a c dz over the whole intestine (mg/min).
double rate_of_appearance(const Vector& intestine_dofs,
                          const IntestineDiscretization& disc, const CstrPfrParams& p);

/// Glucose held in the intestine (mg).
double intestine_mass(const Vector& intestine_dofs, const IntestineDiscretization& disc,
                      const CstrPfrParams& p);

/// Glucose in the duodenum, the first stretch up to z_d (mg).
double duodenum_mass(const Vector& intestine_dofs, const IntestineDiscretization& disc,
                     const CstrPfrParams& p);

/// Mass flow rate leaving the intestine at z_f (mg/min).
double intestine_outlet_flow(const Vector& intestine_dofs,
                             const IntestineDiscretization& disc, const CstrPfrParams& p);

ModelInstance cstr_pfr_model(const CstrPfrParams& p, const PylorusMode& mode,
                             const IntestineDiscretization& disc);

}  // namespace mealsim
