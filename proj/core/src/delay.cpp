#include "mealsim/delay.hpp"

#include "mealsim/expm.hpp"

#include <cmath>

namespace mealsim {

namespace {

/// Series composition: feed this SISO section with the output of `front`.
LinearRealization cascade(const LinearRealization& front, double a, double b, double c,
                          double d) {
    const Eigen::Index n = front.A.rows();
    LinearRealization out;
    out.A = Matrix::Zero(n + 1, n + 1);
    out.A.topLeftCorner(n, n) = front.A;
    out.A.row(n).head(n) = b * front.C;
    out.A(n, n) = a;
    out.B = Matrix::Zero(n + 1, 1);
    out.B.topRows(n) = front.B;
    out.B(n, 0) = b * front.D;
    out.C = RowVector::Zero(n + 1);
    out.C.head(n) = d * front.C;
    out.C(n) = c;
    out.D = d * front.D;
    return out;
}

LinearRealization single_section(double a, double b, double c, double d) {
    LinearRealization sys;
    sys.A = Matrix::Constant(1, 1, a);
    sys.B = Matrix::Constant(1, 1, b);
    sys.C = RowVector::Constant(1, c);
    sys.D = d;
    return sys;
}

LinearRealization chain_of_identical_lags(double rate, int stages) {
    LinearRealization sys = single_section(-rate, rate, 1.0, 0.0);
    for (int i = 1; i < stages; ++i) sys = cascade(sys, -rate, rate, 1.0, 0.0);
    return sys;
}

}  // namespace

void DelaySpec::validate() const {
    if (!(tau_d > 0.0)) throw std::invalid_argument("need tau_d > 0");
    if (stages < 1) throw std::invalid_argument("need at least one stage");
}

TimeSignal exact_delay(const TimeSignal& u, const DelaySpec& spec) {
    spec.validate();
    if (!u.value) throw std::invalid_argument("exact_delay: input has no value function");
    TimeSignal out;
    out.t_min = u.t_min + spec.tau_d;
    out.value = [u, tau = spec.tau_d, t_min = out.t_min](double t) {
        if (t < t_min) {
            throw std::out_of_range("delayed signal queried before available history");
        }
        return u.value(t - tau);
    };
    return out;
}

DelayRealization lag_chain(const DelaySpec& spec) {
    spec.validate();
    const double rate = spec.stages / spec.tau_d;
    return {DelayKind::LagChain, spec, chain_of_identical_lags(rate, spec.stages)};
}

DelayRealization pade_chain(const DelaySpec& spec) {
    spec.validate();
    // (1 - (tau/2) s)/(1 + (tau/2) s) realized as
    //   x' = -(2/tau) x + u,  y = (4/tau) x - u,
    // with the per-section delay tau = tau_d / M.
    const double tau = spec.tau_d / spec.stages;
    const double a = -2.0 / tau;
    const double c = 4.0 / tau;
    LinearRealization sys = single_section(a, 1.0, c, -1.0);
    for (int i = 1; i < spec.stages; ++i) sys = cascade(sys, a, 1.0, c, -1.0);
    return {DelayKind::PadeChain, spec, std::move(sys)};
}

DelayRealization transport_chain(const DelaySpec& spec) {
    spec.validate();
    // Unit pipe, M cells: velocity 1/tau_d, cell width 1/M, upwind flux
    // differences give per-cell rate v/dz = M/tau_d.
    const double rate = spec.stages / spec.tau_d;
    return {DelayKind::TransportChain, spec, chain_of_identical_lags(rate, spec.stages)};
}

double algebraic_lag(double t_min, double sigma, double t_50) {
    return 1.0 / (1.0 + std::exp(-sigma * (t_min - t_50)));
}

double dc_gain(const LinearRealization& sys) {
    const Vector x_ss = sys.A.partialPivLu().solve(Vector(sys.B.col(0)));
    return -sys.C.dot(x_ss) + sys.D;
}

std::vector<double> step_response(const LinearRealization& sys,
                                  const std::vector<double>& times_min) {
    const Vector u = Vector::Constant(1, 1.0);
    Vector x = Vector::Zero(sys.A.rows());
    std::vector<double> out(times_min.size());
    double t = 0.0;
    for (std::size_t i = 0; i < times_min.size(); ++i) {
        if (times_min[i] < t) throw std::invalid_argument("step_response: times must ascend");
        if (times_min[i] > t) x = linear_step(sys.A, sys.B, x, u, times_min[i] - t);
        t = times_min[i];
        out[i] = sys.C.dot(x) + sys.D;
    }
    return out;
}

std::vector<double> response(const LinearRealization& sys,
                             const std::function<double(double)>& input,
                             const std::vector<double>& times_min,
                             int substeps_per_interval) {
    if (substeps_per_interval < 1) throw std::invalid_argument("need at least one substep");
    Vector x = Vector::Zero(sys.A.rows());
    std::vector<double> out(times_min.size());
    double t = 0.0;
    const Vector b = sys.B.col(0);
    const auto f = [&](double tt, const Vector& y) -> Vector {
        return sys.A * y + b * input(tt);
    };
    for (std::size_t i = 0; i < times_min.size(); ++i) {
        const double target = times_min[i];
        if (target < t) throw std::invalid_argument("response: times must ascend");
        const double h = (target - t) / substeps_per_interval;
        if (h > 0.0) {
            for (int s = 0; s < substeps_per_interval; ++s) {
                const Vector k1 = f(t, x);
                const Vector k2 = f(t + 0.5 * h, x + 0.5 * h * k1);
                const Vector k3 = f(t + 0.5 * h, x + 0.5 * h * k2);
                const Vector k4 = f(t + h, x + h * k3);
                x += (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
                t += h;
            }
        }
        t = target;
        out[i] = sys.C.dot(x) + sys.D * input(t);
    }
    return out;
}

}  // namespace mealsim
