#include "mealsim/spectral.hpp"

#include <algorithm>
#include <numeric>

namespace mealsim {

namespace {

void require_lobatto_legendre(const SpectralBasis& basis, const char* what) {
    if (basis.family != PolynomialFamily::Legendre ||
        basis.rule != QuadratureRule::GaussLobatto) {
        throw std::invalid_argument(std::string(what) +
                                    ": requires a Legendre Gauss-Lobatto basis "
                                    "(boundary fluxes enter through the endpoint "
                                    "coefficients and the quadrature must carry unit "
                                    "weight function)");
    }
}

const QuadratureNodes& gauss16() {
    static const QuadratureNodes rule = legendre_nodes_weights(15, QuadratureRule::Gauss);
    return rule;
}

}  // namespace

void DomainMap::validate() const {
    if (!(z_end > z_begin)) throw std::invalid_argument("domain map needs z_end > z_begin");
}

SpectralBasis SpectralBasis::make(PolynomialFamily family, QuadratureRule rule, int order) {
    QuadratureNodes qn = family == PolynomialFamily::Legendre
                             ? legendre_nodes_weights(order, rule)
                             : chebyshev_nodes_weights(order, rule);

    // Store nodes ascending regardless of the family's natural ordering.
    std::vector<Eigen::Index> perm(qn.nodes.size());
    std::iota(perm.begin(), perm.end(), 0);
    std::sort(perm.begin(), perm.end(),
              [&](Eigen::Index a, Eigen::Index b) { return qn.nodes[a] < qn.nodes[b]; });

    SpectralBasis basis;
    basis.family = family;
    basis.rule = rule;
    basis.order = order;
    basis.nodes.resize(qn.nodes.size());
    basis.weights.resize(qn.nodes.size());
    for (Eigen::Index i = 0; i < qn.nodes.size(); ++i) {
        basis.nodes[i] = qn.nodes[perm[static_cast<std::size_t>(i)]];
        basis.weights[i] = qn.weights[perm[static_cast<std::size_t>(i)]];
    }

    LagrangeBasis lagrange = lagrange_basis(basis.nodes);
    basis.barycentric_weights = std::move(lagrange.barycentric_weights);
    basis.d1 = std::move(lagrange.d1);
    basis.d2 = std::move(lagrange.d2);
    return basis;
}

TransformedFlux transform_flux(const PfrFluxSpec& flux, const DomainMap& map) {
    map.validate();
    const double j = map.jacobian();
    return {flux.velocity / j, flux.diffusion / (j * j)};
}

Vector sg_rhs(const SpectralBasis& basis, const DomainMap& map, const PfrFluxSpec& flux,
              double area, const Vector& coefficients, double inlet_flow,
              const Vector& source) {
    require_lobatto_legendre(basis, "sg_rhs");
    const Eigen::Index n = basis.node_count();
    if (coefficients.size() != n || source.size() != n) {
        throw std::invalid_argument("sg_rhs: wrong coefficient or source size");
    }
    if (!(area > 0.0)) throw std::invalid_argument("sg_rhs: area must be positive");

    const TransformedFlux tf = transform_flux(flux, map);

    // Interior flux at every node: advection plus the interpolant-derivative
    // diffusion term.
    const Vector dcdxi = basis.d1 * coefficients;
    const Vector flux_at_nodes =
        tf.velocity * coefficients - tf.diffusion * dcdxi;

    // Quadrature part of the weak form.
    Vector dc = basis.d1.transpose() * flux_at_nodes.cwiseProduct(basis.weights);
    dc.array() /= basis.weights.array();

    // Boundary terms: prescribed flux at xi = -1, advective outflow with zero
    // diffusion at xi = +1. Under Gauss-Lobatto both act on a single
    // coefficient each.
    const double inlet_flux = inlet_flow / (map.jacobian() * area);
    const double outlet_flux = tf.velocity * coefficients[n - 1];
    dc[0] += inlet_flux / basis.weights[0];
    dc[n - 1] -= outlet_flux / basis.weights[n - 1];

    dc += source;
    return dc;
}

double sg_integral(const SpectralBasis& basis, const DomainMap& map,
                   const Vector& coefficients, double area) {
    require_lobatto_legendre(basis, "sg_integral");
    if (coefficients.size() != basis.node_count()) {
        throw std::invalid_argument("sg_integral: wrong coefficient size");
    }
    return area * map.jacobian() * basis.weights.dot(coefficients);
}

double sg_integral(const SpectralBasis& basis, const DomainMap& map,
                   const Vector& coefficients, double area, double xi_begin,
                   double xi_end) {
    require_lobatto_legendre(basis, "sg_integral");
    if (coefficients.size() != basis.node_count()) {
        throw std::invalid_argument("sg_integral: wrong coefficient size");
    }
    if (!(xi_end > xi_begin)) throw std::invalid_argument("sg_integral: empty interval");
    if (xi_begin < -1.0 - 1e-12 || xi_end > 1.0 + 1e-12) {
        throw std::invalid_argument("sg_integral: sub-interval outside [-1, 1]");
    }

    const QuadratureNodes& rule = gauss16();
    const double half = 0.5 * (xi_end - xi_begin);
    const double mid = 0.5 * (xi_end + xi_begin);
    double acc = 0.0;
    for (Eigen::Index i = 0; i < rule.nodes.size(); ++i) {
        const double xi = mid + half * rule.nodes[i];
        acc += rule.weights[i] * barycentric_interpolate(basis.nodes,
                                                         basis.barycentric_weights,
                                                         coefficients, xi);
    }
    return area * map.jacobian() * half * acc;
}

double sg_outlet_flow(const SpectralBasis& basis, const PfrFluxSpec& flux,
                      const Vector& coefficients, double area) {
    if (coefficients.size() != basis.node_count()) {
        throw std::invalid_argument("sg_outlet_flow: wrong coefficient size");
    }
    return area * flux.velocity * coefficients[coefficients.size() - 1];
}

}  // namespace mealsim
