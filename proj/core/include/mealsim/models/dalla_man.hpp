#pragma once

#include "mealsim/types.hpp"

namespace mealsim {

/// Three-compartment stomach(solid/liquid)/gut model with the meal-size
/// dependent gastric emptying rate.
struct DallaManParams {
    double k_max = 0.0465;  // 1/min
    double k_min = 0.0076;  // 1/min
    double k_abs = 0.023;   // 1/min
    double k_gri = 0.0465;  // 1/min
    double b = 0.69;
    double c = 0.17;
    double f = 0.90;
    double BW = 91.0;  // kg

    /// Carbohydrate mass (mg) governing the emptying curve. Zero means "no
    /// meal yet"; the emptying rate is then pinned at k_min. Inside a meal
    /// simulation the engine supplies this through MealContext.
    double D_current = 0.0;

    void validate() const;
};

/// Gastric emptying rate
///   k_empt = k_min + (k_max - k_min)/2 (tanh(a (Q_sto - b D)) - tanh(B (Q_sto - c D)) + 2)
/// with a = 5/(2 D (1-b)), B = 5/(2 D c). Rejects D <= 0.
double dalla_man_kempt(double q_sto_mg, double meal_mass_mg, const DallaManParams& p);

/// State derivative for state (Q_sto1, Q_sto2, Q_gut) and meal inflow d
/// (mg/min), using p.D_current for the emptying curve.
Vector dalla_man_rhs(const Vector& state, double d, const DallaManParams& p);

/// R_A = f k_abs Q_gut (mg/min).
double dalla_man_output(const Vector& state, const DallaManParams& p);

/// ModelInstance with the per-meal reset rule: at each meal start the
/// emptying-curve mass becomes the new carbohydrate mass plus the residual
/// stomach content.
ModelInstance dalla_man_model(const DallaManParams& p = {});

}  // namespace mealsim
