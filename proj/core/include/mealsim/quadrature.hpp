#pragma once

#include "mealsim/types.hpp"

namespace mealsim {

enum class PolynomialFamily { Legendre, Chebyshev };
enum class QuadratureRule { Gauss, GaussLobatto };

/// Nodes and weights of an (order+1)-point rule on [-1, 1]. Gauss rules are
/// exact for polynomials of degree 2*order + 1 under the family's weight
/// function (1 for Legendre, 1/sqrt(1 - z^2) for Chebyshev), Gauss-Lobatto
/// rules for degree 2*order - 1 and include the endpoints.
struct QuadratureNodes {
    Vector nodes;
    Vector weights;
};

/// Legendre rule. Gauss nodes are the zeros of L_{order+1}, Gauss-Lobatto
/// nodes are -1, 1 and the zeros of L_order'; both found by Newton iteration
/// from Chebyshev initial guesses (tolerance 1e-14). Nodes ascend.
QuadratureNodes legendre_nodes_weights(int order, QuadratureRule rule);

/// Chebyshev rule from the closed-form expressions; nodes are returned in
/// the natural cos ordering (descending).
QuadratureNodes chebyshev_nodes_weights(int order, QuadratureRule rule);

/// L_k(z) and L_k'(z) from the three-term recursion.
struct LegendreValue {
    double value;
    double derivative;
};
LegendreValue legendre_eval(int k, double z);

/// Barycentric weights and collocation derivative matrices for a set of
/// distinct interpolation nodes. Row l of d1 holds dl_m/dz evaluated at
/// node l; diagonals are the negative row sums, so rows annihilate constants
/// exactly. d2 holds the second derivatives.
struct LagrangeBasis {
    Vector barycentric_weights;
    Matrix d1;
    Matrix d2;
};
LagrangeBasis lagrange_basis(const Vector& nodes);

/// Stable evaluation of the interpolant through (nodes, values) at z.
double barycentric_interpolate(const Vector& nodes, const Vector& barycentric_weights,
                               const Vector& values, double z);

}  // namespace mealsim
