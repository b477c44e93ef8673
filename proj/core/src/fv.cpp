#include "mealsim/fv.hpp"

namespace mealsim {

void FvGrid::validate() const {
    const Eigen::Index m = cell_count();
    if (m < 2) throw std::invalid_argument("finite-volume grid needs at least 2 cells");
    if (edges.size() != m + 1 || centers.size() != m) {
        throw std::invalid_argument("finite-volume grid has inconsistent sizes");
    }
    if (!(area > 0.0)) throw std::invalid_argument("cross-section area must be positive");
    for (Eigen::Index i = 0; i < m; ++i) {
        if (!(edges[i + 1] > edges[i])) {
            throw std::invalid_argument("grid edges must be strictly ascending");
        }
    }
}

FvGrid FvGrid::uniform(double z_begin, double z_end, int cells, double area) {
    if (cells < 2) throw std::invalid_argument("finite-volume grid needs at least 2 cells");
    if (!(z_end > z_begin)) throw std::invalid_argument("need z_end > z_begin");
    FvGrid grid;
    grid.area = area;
    grid.edges.resize(cells + 1);
    grid.centers.resize(cells);
    grid.widths.resize(cells);
    const double dz = (z_end - z_begin) / cells;
    for (int i = 0; i <= cells; ++i) grid.edges[i] = z_begin + i * dz;
    grid.edges[cells] = z_end;
    for (int i = 0; i < cells; ++i) {
        grid.centers[i] = 0.5 * (grid.edges[i] + grid.edges[i + 1]);
        grid.widths[i] = grid.edges[i + 1] - grid.edges[i];
    }
    grid.validate();
    return grid;
}

Vector fv_concentrations(const FvGrid& grid, const Vector& masses) {
    if (masses.size() != grid.cell_count()) {
        throw std::invalid_argument("fv_concentrations: wrong state size");
    }
    return masses.array() / (grid.area * grid.widths.array());
}

Vector fv_rhs(const FvGrid& grid, const PfrFluxSpec& flux, const Vector& masses,
              double inlet_flow, const Vector& source) {
    const Eigen::Index m = grid.cell_count();
    if (masses.size() != m || source.size() != m) {
        throw std::invalid_argument("fv_rhs: wrong state or source size");
    }

    const Vector c = fv_concentrations(grid, masses);

    // Fluxes at the m+1 cell edges. Upwind advection, two-point diffusion
    // between cell centres, prescribed inlet flux, no outlet diffusion.
    Vector n(m + 1);
    n[0] = inlet_flow / grid.area;
    for (Eigen::Index i = 1; i < m; ++i) {
        const double center_gap = grid.centers[i] - grid.centers[i - 1];
        n[i] = flux.velocity * c[i - 1] - flux.diffusion * (c[i] - c[i - 1]) / center_gap;
    }
    n[m] = flux.velocity * c[m - 1];

    Vector dm(m);
    for (Eigen::Index i = 0; i < m; ++i) {
        dm[i] = -grid.area * (n[i + 1] - n[i]) + grid.area * grid.widths[i] * source[i];
    }
    return dm;
}

double fv_partial_integral(const FvGrid& grid, const Vector& masses, double z_upper) {
    const Eigen::Index m = grid.cell_count();
    if (masses.size() != m) throw std::invalid_argument("fv_partial_integral: wrong size");
    if (z_upper < grid.edges[0] || z_upper > grid.edges[m]) {
        throw std::invalid_argument("fv_partial_integral: position outside the domain");
    }
    if (z_upper == grid.edges[m]) return masses.sum();

    // Cell K with z_K <= z_upper < z_{K+1}.
    Eigen::Index k = 0;
    while (k + 1 < m && grid.edges[k + 1] <= z_upper) ++k;

    double total = 0.0;
    for (Eigen::Index i = 0; i < k; ++i) total += masses[i];
    total += masses[k] * (z_upper - grid.edges[k]) / (grid.edges[k + 1] - grid.edges[k]);
    return total;
}

double fv_outlet_flow(const FvGrid& grid, const PfrFluxSpec& flux, const Vector& masses) {
    const Vector c = fv_concentrations(grid, masses);
    return grid.area * flux.velocity * c[c.size() - 1];
}

}  // namespace mealsim
