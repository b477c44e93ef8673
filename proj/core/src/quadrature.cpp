#include "mealsim/quadrature.hpp"

#include <algorithm>
#include <cmath>

namespace mealsim {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kNewtonTol = 1e-14;
constexpr int kNewtonMaxIter = 100;

/// L_k'' from (1 - z^2) L_k'' = 2 z L_k' - k (k+1) L_k.
double legendre_second_derivative(int k, double z, const LegendreValue& lv) {
    return (2.0 * z * lv.derivative - static_cast<double>(k) * (k + 1.0) * lv.value) /
           (1.0 - z * z);
}

}  // namespace

LegendreValue legendre_eval(int k, double z) {
    if (k < 0) throw std::invalid_argument("legendre_eval: negative order");
    if (k == 0) return {1.0, 0.0};
    double lm1 = 1.0;  // L_{j-1}
    double l = z;      // L_j
    for (int j = 1; j < k; ++j) {
        const double lp1 =
            ((2.0 * j + 1.0) * z * l - static_cast<double>(j) * lm1) / (j + 1.0);
        lm1 = l;
        l = lp1;
    }
    // (1 - z^2) L_k' = k (L_{k-1} - z L_k); at z = +-1, L_k' = k(k+1)/2 * (+-1)^{k+1}.
    double derivative;
    if (std::abs(1.0 - z * z) < 1e-300) {
        const double sign = (z > 0.0 || k % 2 == 1) ? 1.0 : -1.0;
        derivative = sign * 0.5 * static_cast<double>(k) * (k + 1.0);
    } else {
        derivative = static_cast<double>(k) * (lm1 - z * l) / (1.0 - z * z);
    }
    return {l, derivative};
}

QuadratureNodes legendre_nodes_weights(int order, QuadratureRule rule) {
    if (order < 1) throw std::invalid_argument("quadrature order must be at least 1");
    const int n = order + 1;  // node count
    QuadratureNodes out;
    out.nodes.resize(n);
    out.weights.resize(n);

    if (rule == QuadratureRule::Gauss) {
        // Zeros of L_n by Newton from the Chebyshev-like initial guess.
        for (int i = 0; i < n; ++i) {
            double z = -std::cos(kPi * (i + 0.75) / (n + 0.5));
            LegendreValue lv{};
            int iter = 0;
            for (; iter < kNewtonMaxIter; ++iter) {
                lv = legendre_eval(n, z);
                const double dz = lv.value / lv.derivative;
                z -= dz;
                if (std::abs(dz) <= kNewtonTol) break;
            }
            if (iter == kNewtonMaxIter) {
                throw std::runtime_error("legendre_nodes_weights: Newton did not converge");
            }
            lv = legendre_eval(n, z);
            out.nodes[i] = z;
            out.weights[i] = 2.0 / ((1.0 - z * z) * lv.derivative * lv.derivative);
        }
    } else {
        // -1, 1, and the zeros of L_order'.
        out.nodes[0] = -1.0;
        out.nodes[n - 1] = 1.0;
        for (int i = 1; i < n - 1; ++i) {
            // Chebyshev-Lobatto point as the initial guess.
            double z = -std::cos(kPi * i / order);
            int iter = 0;
            for (; iter < kNewtonMaxIter; ++iter) {
                const LegendreValue lv = legendre_eval(order, z);
                const double dz = lv.derivative / legendre_second_derivative(order, z, lv);
                z -= dz;
                if (std::abs(dz) <= kNewtonTol) break;
            }
            if (iter == kNewtonMaxIter) {
                throw std::runtime_error("legendre_nodes_weights: Newton did not converge");
            }
            out.nodes[i] = z;
        }
        const double scale = 2.0 / (order * (order + 1.0));
        for (int i = 0; i < n; ++i) {
            const double lm = legendre_eval(order, out.nodes[i]).value;
            out.weights[i] = scale / (lm * lm);
        }
    }
    return out;
}

QuadratureNodes chebyshev_nodes_weights(int order, QuadratureRule rule) {
    if (order < 1) throw std::invalid_argument("quadrature order must be at least 1");
    const int n = order + 1;
    QuadratureNodes out;
    out.nodes.resize(n);
    out.weights.resize(n);

    if (rule == QuadratureRule::Gauss) {
        for (int l = 0; l < n; ++l) {
            out.nodes[l] = std::cos((2.0 * l + 1.0) / (2.0 * order + 2.0) * kPi);
            out.weights[l] = kPi / (order + 1.0);
        }
    } else {
        for (int l = 0; l < n; ++l) {
            out.nodes[l] = std::cos(kPi * l / order);
            out.weights[l] = (l == 0 || l == order) ? kPi / (2.0 * order) : kPi / order;
        }
    }
    return out;
}

LagrangeBasis lagrange_basis(const Vector& nodes) {
    const Eigen::Index n = nodes.size();
    if (n < 2) throw std::invalid_argument("lagrange_basis: need at least two nodes");

    LagrangeBasis basis;
    basis.barycentric_weights.resize(n);
    for (Eigen::Index m = 0; m < n; ++m) {
        double w = 1.0;
        for (Eigen::Index l = 0; l < n; ++l) {
            if (l == m) continue;
            const double diff = nodes[m] - nodes[l];
            if (diff == 0.0) throw std::invalid_argument("lagrange_basis: duplicate nodes");
            w /= diff;
        }
        basis.barycentric_weights[m] = w;
    }

    basis.d1.resize(n, n);
    for (Eigen::Index l = 0; l < n; ++l) {
        double diag = 0.0;
        for (Eigen::Index m = 0; m < n; ++m) {
            if (m == l) continue;
            const double entry = basis.barycentric_weights[m] /
                                 (basis.barycentric_weights[l] * (nodes[l] - nodes[m]));
            basis.d1(l, m) = entry;
            diag -= entry;
        }
        basis.d1(l, l) = diag;
    }

    basis.d2.resize(n, n);
    for (Eigen::Index l = 0; l < n; ++l) {
        double diag = 0.0;
        for (Eigen::Index m = 0; m < n; ++m) {
            if (m == l) continue;
            const double entry = -2.0 * basis.d1(l, m) *
                                 (1.0 / (nodes[l] - nodes[m]) - basis.d1(l, l));
            basis.d2(l, m) = entry;
            diag -= entry;
        }
        basis.d2(l, l) = diag;
    }
    return basis;
}

double barycentric_interpolate(const Vector& nodes, const Vector& barycentric_weights,
                               const Vector& values, double z) {
    if (nodes.size() != barycentric_weights.size() || nodes.size() != values.size()) {
        throw std::invalid_argument("barycentric_interpolate: inconsistent sizes");
    }
    double numerator = 0.0;
    double denominator = 0.0;
    for (Eigen::Index m = 0; m < nodes.size(); ++m) {
        const double diff = z - nodes[m];
        if (diff == 0.0) return values[m];
        const double term = barycentric_weights[m] / diff;
        numerator += term * values[m];
        denominator += term;
    }
    return numerator / denominator;
}

}  // namespace mealsim
