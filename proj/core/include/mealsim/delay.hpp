#pragma once

#include "mealsim/types.hpp"

namespace mealsim {

/// A pure time delay of tau_d split into `stages` series sections.
struct DelaySpec {
    double tau_d = 1.0;  // min
    int stages = 1;      // M

    void validate() const;
};

enum class DelayKind { LagChain, PadeChain, TransportChain, Algebraic };

/// One of the linear delay approximations, realized in state-space form.
struct DelayRealization {
    DelayKind kind = DelayKind::LagChain;
    DelaySpec spec;
    LinearRealization system;
};

/// A scalar signal defined for t >= t_min.
struct TimeSignal {
    double t_min = 0.0;
    std::function<double(double)> value;
};

/// y(t) = u(t - tau_d); querying earlier than the available history throws.
TimeSignal exact_delay(const TimeSignal& u, const DelaySpec& spec);

/// M identical first-order lags: x_i' = (M/tau_d)(x_{i-1} - x_i), y = x_M.
DelayRealization lag_chain(const DelaySpec& spec);

/// M cascaded first-order Pade sections (1 - (tau_d/2M) s)/(1 + (tau_d/2M) s).
DelayRealization pade_chain(const DelaySpec& spec);

/// First-order upwind discretization of transport through a unit pipe with
/// transit time tau_d and M cells. The assembled matrices coincide with
/// lag_chain: v/dz = (1/tau_d)/(1/M) = M/tau_d per cell.
DelayRealization transport_chain(const DelaySpec& spec);

/// Logistic lag coefficient 1/(1 + exp(-sigma (t - t_50))).
double algebraic_lag(double t_min, double sigma, double t_50);

/// Steady-state gain -C A^{-1} B + D.
double dc_gain(const LinearRealization& sys);

/// Response to the unit step at t = 0 from rest, sampled exactly at the given
/// ascending times (matrix-exponential stepping).
std::vector<double> step_response(const LinearRealization& sys,
                                  const std::vector<double>& times_min);

/// Response to a smooth input from rest (classic fixed-substep RK4).
std::vector<double> response(const LinearRealization& sys,
                             const std::function<double(double)>& input,
                             const std::vector<double>& times_min,
                             int substeps_per_interval = 16);

}  // namespace mealsim
