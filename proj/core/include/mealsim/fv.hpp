#pragma once

#include "mealsim/kinetics.hpp"
#include "mealsim/types.hpp"

namespace mealsim {

/// Cell-centred finite-volume grid on a cylinder of cross-section `area`.
struct FvGrid {
    Vector edges;    // cell_count + 1, strictly ascending (m)
    Vector centers;  // cell midpoints (m)
    Vector widths;   // cell widths (m)
    double area = 1.0;  // m^2

    Eigen::Index cell_count() const { return widths.size(); }
    void validate() const;

    static FvGrid uniform(double z_begin, double z_end, int cells, double area);
};

/// Cell concentrations c_i = m_i / (A dz_i).
Vector fv_concentrations(const FvGrid& grid, const Vector& masses);

/// Semidiscrete mass balances dm_i/dt for the advection-diffusion equation
/// with prescribed inlet flux (N_0 = inlet_flow / A), first-order upwind
/// advection, central two-point diffusion between cell centres, zero
/// diffusive flux at the outlet, and per-volume source (mg per m^3 per min).
Vector fv_rhs(const FvGrid& grid, const PfrFluxSpec& flux, const Vector& masses,
              double inlet_flow, const Vector& source);

/// Mass held in [z_begin_of_grid, z_upper], assuming an even distribution
/// inside the cell that contains z_upper.
double fv_partial_integral(const FvGrid& grid, const Vector& masses, double z_upper);

/// Mass flow rate leaving through the outlet, A * v * c_{last} (mg/min).
double fv_outlet_flow(const FvGrid& grid, const PfrFluxSpec& flux, const Vector& masses);

}  // namespace mealsim
