#include "mealsim/expm.hpp"

#include <array>
#include <cmath>

namespace mealsim {

namespace {

// Pade numerator coefficients for exp, degrees 3..13 (Higham 2005).
constexpr std::array<double, 4> kPade3 = {120.0, 60.0, 12.0, 1.0};
constexpr std::array<double, 6> kPade5 = {30240.0, 15120.0, 3360.0, 420.0, 30.0, 1.0};
constexpr std::array<double, 8> kPade7 = {17297280.0, 8648640.0, 1995840.0, 277200.0,
                                          25200.0,    1512.0,   56.0,      1.0};
constexpr std::array<double, 10> kPade9 = {
    17643225600.0, 8821612800.0, 2075673600.0, 302702400.0, 30270240.0,
    2162160.0,     110880.0,     3960.0,       90.0,        1.0};
constexpr std::array<double, 14> kPade13 = {
    64764752532480000.0, 32382376266240000.0, 7771770303897600.0, 1187353796428800.0,
    129060195264000.0,   10559470521600.0,    670442572800.0,     33522128640.0,
    1323241920.0,        40840800.0,          960960.0,           16380.0,
    182.0,               1.0};

// 1-norm bounds below which the corresponding Pade degree meets double precision.
constexpr double kTheta3 = 1.495585217958292e-2;
constexpr double kTheta5 = 2.539398330063230e-1;
constexpr double kTheta7 = 9.504178996162932e-1;
constexpr double kTheta9 = 2.097847961257068e0;
constexpr double kTheta13 = 5.371920351148152e0;

Matrix solve_pade(const Matrix& u, const Matrix& v) {
    // r = (v - u)^{-1} (v + u)
    return (v - u).partialPivLu().solve(v + u);
}

template <std::size_t N>
Matrix pade_low_degree(const Matrix& a, const std::array<double, N>& b) {
    const Eigen::Index n = a.rows();
    const Matrix identity = Matrix::Identity(n, n);
    std::vector<Matrix> even_powers;  // I, A^2, A^4, ...
    even_powers.push_back(identity);
    const Matrix a2 = a * a;
    for (std::size_t k = 1; 2 * k + 1 < N; ++k) {
        even_powers.push_back(even_powers.back() * a2);
    }
    Matrix u_sum = Matrix::Zero(n, n);
    Matrix v_sum = Matrix::Zero(n, n);
    for (std::size_t k = 0; 2 * k + 1 < N; ++k) u_sum += b[2 * k + 1] * even_powers[k];
    for (std::size_t k = 0; 2 * k < N; ++k) v_sum += b[2 * k] * even_powers[k];
    return solve_pade(a * u_sum, v_sum);
}

Matrix pade13(const Matrix& a) {
    const Eigen::Index n = a.rows();
    const auto& b = kPade13;
    const Matrix identity = Matrix::Identity(n, n);
    const Matrix a2 = a * a;
    const Matrix a4 = a2 * a2;
    const Matrix a6 = a2 * a4;
    const Matrix u = a * (a6 * (b[13] * a6 + b[11] * a4 + b[9] * a2) + b[7] * a6 +
                          b[5] * a4 + b[3] * a2 + b[1] * identity);
    const Matrix v = a6 * (b[12] * a6 + b[10] * a4 + b[8] * a2) + b[6] * a6 + b[4] * a4 +
                     b[2] * a2 + b[0] * identity;
    return solve_pade(u, v);
}

}  // namespace

Matrix expm(const Matrix& a) {
    if (a.rows() != a.cols()) {
        throw std::invalid_argument("expm: matrix must be square");
    }
    if (a.rows() == 0) return Matrix(0, 0);
    if (!a.allFinite()) {
        throw std::invalid_argument("expm: matrix has non-finite entries");
    }

    const double norm1 = a.cwiseAbs().colwise().sum().maxCoeff();
    if (norm1 <= kTheta3) return pade_low_degree(a, kPade3);
    if (norm1 <= kTheta5) return pade_low_degree(a, kPade5);
    if (norm1 <= kTheta7) return pade_low_degree(a, kPade7);
    if (norm1 <= kTheta9) return pade_low_degree(a, kPade9);

    const int squarings =
        std::max(0, static_cast<int>(std::ceil(std::log2(norm1 / kTheta13))));
    Matrix r = pade13(a / std::ldexp(1.0, squarings));
    for (int k = 0; k < squarings; ++k) r = r * r;
    return r;
}

Vector linear_step(const Matrix& a, const Matrix& b, const Vector& x0, const Vector& u,
                   double dt_min) {
    const Eigen::Index n = a.rows();
    if (a.cols() != n || b.rows() != n || x0.size() != n || u.size() != b.cols()) {
        throw std::invalid_argument("linear_step: inconsistent dimensions");
    }
    if (!(dt_min > 0.0)) {
        throw std::invalid_argument("linear_step: dt must be positive");
    }

    // d/dt [x; 1] = [[A, B u], [0, 0]] [x; 1]
    Matrix augmented = Matrix::Zero(n + 1, n + 1);
    augmented.topLeftCorner(n, n) = a * dt_min;
    augmented.topRightCorner(n, 1) = (b * u) * dt_min;
    const Matrix e = expm(augmented);
    return e.topLeftCorner(n, n) * x0 + e.topRightCorner(n, 1);
}

Vector linear_step(const LinearRealization& sys, const Vector& x0, const Vector& u,
                   double dt_min) {
    return linear_step(sys.A, sys.B, x0, u, dt_min);
}

}  // namespace mealsim
