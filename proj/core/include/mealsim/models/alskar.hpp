#pragma once

#include "mealsim/types.hpp"

namespace mealsim {

/// Four-compartment stomach/duodenum/jejunum/ileum model with a Hill-gated
/// pylorus, a logistic lag on gastric emptying, and Michaelis-Menten
/// absorption in the three intestinal segments.
struct AlskarParams {
    double k_w = 0.14;        // 1/min, emptying rate for a noncaloric liquid
    double IG_D50 = 7420.0;   // mg, duodenal glucose halving the emptying rate
    double gamma = 14.0;      // Hill coefficient
    double L_D = 0.08;        // duodenum length fraction
    double L_J = 0.37;        // jejunum length fraction
    double T = 240.0;         // min, small-intestine transit time
    double sigma = 10.0;      // 1/min, lag steepness
    double t_50 = 5.0;        // min, lag midpoint
    double K_mG = 6320.0;     // mg, Michaelis constant
    double R_D_max = 580.0;   // mg/min
    double R_J_max = 2060.0;  // mg/min
    double R_I_max = 1330.0;  // mg/min
    double F_P = 1.0;
    double BW = 82.0;         // kg

    void validate() const;
};

/// State derivative for state (G_S, G_D, G_J, G_I), meal inflow d (mg/min),
/// and the time since the most recent meal (the lag clock).
Vector alskar_rhs(const Vector& state, double d, double t_since_meal_min,
                  const AlskarParams& p);

/// R_A = F_P (R_AD + R_AJ + R_AI) (mg/min).
double alskar_output(const Vector& state, const AlskarParams& p);

/// Pylorus rate k_SD = k_w (1 - G_D^g / (IG_D50^g + G_D^g)), evaluated in
/// log space so large Hill coefficients cannot overflow.
double alskar_k_sd(double duodenum_glucose_mg, const AlskarParams& p);

ModelInstance alskar_model(const AlskarParams& p = {});

}  // namespace mealsim
