#pragma once

#include "mealsim/kinetics.hpp"
#include "mealsim/quadrature.hpp"
#include "mealsim/types.hpp"

namespace mealsim {

/// Collocation basis on the reference interval [-1, 1]: nodes (ascending),
/// quadrature weights, barycentric weights, and derivative matrices.
struct SpectralBasis {
    PolynomialFamily family = PolynomialFamily::Legendre;
    QuadratureRule rule = QuadratureRule::GaussLobatto;
    int order = 0;  // polynomial order M; order+1 nodes

    Vector nodes;
    Vector weights;
    Vector barycentric_weights;
    Matrix d1;
    Matrix d2;

    Eigen::Index node_count() const { return nodes.size(); }

    static SpectralBasis make(PolynomialFamily family, QuadratureRule rule, int order);
};

/// Affine map between the physical interval [z_begin, z_end] and [-1, 1].
struct DomainMap {
    double z_begin = -1.0;
    double z_end = 1.0;

    double jacobian() const { return 0.5 * (z_end - z_begin); }  // dz/dxi
    double to_physical(double xi) const { return 0.5 * (xi + 1.0) * (z_end - z_begin) + z_begin; }
    double to_reference(double z) const { return 2.0 * (z - z_begin) / (z_end - z_begin) - 1.0; }
    void validate() const;
};

/// Flux coefficients transformed to the reference domain:
/// v_bar = v / (dz/dxi), D_bar = D_c / (dz/dxi)^2.
struct TransformedFlux {
    double velocity = 0.0;
    double diffusion = 0.0;
};
TransformedFlux transform_flux(const PfrFluxSpec& flux, const DomainMap& map);

/// Semidiscrete Galerkin coefficients d c_hat_n/dt for the advection-diffusion
/// equation with prescribed inlet flux (physical mg/min), zero outlet
/// diffusion, and per-volume source evaluated at the nodes. The weak-form
/// boundary terms act only on the first and last coefficients, which is why
/// the basis must be Legendre Gauss-Lobatto.
Vector sg_rhs(const SpectralBasis& basis, const DomainMap& map, const PfrFluxSpec& flux,
              double area, const Vector& coefficients, double inlet_flow,
              const Vector& source);

/// Mass A * int c dz over the full domain by the basis quadrature.
double sg_integral(const SpectralBasis& basis, const DomainMap& map,
                   const Vector& coefficients, double area);

/// Mass over the reference sub-interval [xi_begin, xi_end] by a fixed 16-node
/// Gauss rule applied to the barycentric interpolant.
double sg_integral(const SpectralBasis& basis, const DomainMap& map,
                   const Vector& coefficients, double area, double xi_begin,
                   double xi_end);

/// Mass flow rate through the outlet, A * v * c(+1) (mg/min).
double sg_outlet_flow(const SpectralBasis& basis, const PfrFluxSpec& flux,
                      const Vector& coefficients, double area);

}  // namespace mealsim
