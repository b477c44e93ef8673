#include "mealsim/models/dalla_man.hpp"

#include <cmath>

namespace mealsim {

namespace {

Vector rhs_with_meal_mass(const Vector& state, double d, double meal_mass,
                          const DallaManParams& p) {
    const double q_sto1 = state[0];
    const double q_sto2 = state[1];
    const double q_gut = state[2];

    // Before any meal the stomach is empty and every flow vanishes; pin the
    // emptying rate at k_min so the curve parameters stay defined.
    const double k_empt = meal_mass > 0.0
                              ? dalla_man_kempt(q_sto1 + q_sto2, meal_mass, p)
                              : p.k_min;

    const double r_12 = p.k_gri * q_sto1;
    const double r_sto_gut = k_empt * q_sto2;
    const double r_gut_pla = p.k_abs * q_gut;

    Vector dx(3);
    dx << d - r_12, r_12 - r_sto_gut, r_sto_gut - r_gut_pla;
    return dx;
}

}  // namespace

void DallaManParams::validate() const {
    if (!(k_min > 0.0 && k_min <= k_max)) throw std::invalid_argument("need 0 < k_min <= k_max");
    if (!(k_abs > 0.0 && k_gri > 0.0)) throw std::invalid_argument("need k_abs, k_gri > 0");
    if (!(c > 0.0 && c < b && b < 1.0)) throw std::invalid_argument("need 0 < c < b < 1");
    if (!(f > 0.0 && f <= 1.0)) throw std::invalid_argument("need 0 < f <= 1");
    if (!(BW > 0.0)) throw std::invalid_argument("need BW > 0");
    if (!(D_current >= 0.0)) throw std::invalid_argument("need D_current >= 0");
}

double dalla_man_kempt(double q_sto_mg, double meal_mass_mg, const DallaManParams& p) {
    if (!(meal_mass_mg > 0.0)) {
        throw std::invalid_argument(
            "dalla_man_kempt: the emptying-curve parameters are undefined for D <= 0");
    }
    const double alpha = 5.0 / (2.0 * meal_mass_mg * (1.0 - p.b));
    const double beta = 5.0 / (2.0 * meal_mass_mg * p.c);
    return p.k_min + 0.5 * (p.k_max - p.k_min) *
                         (std::tanh(alpha * (q_sto_mg - p.b * meal_mass_mg)) -
                          std::tanh(beta * (q_sto_mg - p.c * meal_mass_mg)) + 2.0);
}

Vector dalla_man_rhs(const Vector& state, double d, const DallaManParams& p) {
    if (state.size() != 3) throw std::invalid_argument("dalla_man_rhs: state size must be 3");
    return rhs_with_meal_mass(state, d, p.D_current, p);
}

double dalla_man_output(const Vector& state, const DallaManParams& p) {
    return p.f * p.k_abs * state[2];
}

ModelInstance dalla_man_model(const DallaManParams& p) {
    p.validate();

    ModelInstance model;
    model.name = "dalla-man";
    model.state_dim = 3;
    model.state_labels = {"Q_sto1_mg", "Q_sto2_mg", "Q_gut_mg"};
    model.body_weight_kg = p.BW;
    model.linear_in_meal_size = true;
    model.rhs = [p](double, const Vector& x, double d, const MealContext& ctx, Vector& dx) {
        dx = rhs_with_meal_mass(x, d, ctx.meal_mass_mg, p);
    };
    model.output = [p](const Vector& x) { return dalla_man_output(x, p); };
    model.injection = [](const Vector&) {
        Vector b(3);
        b << 1.0, 0.0, 0.0;
        return b;
    };
    // New meal: the emptying curve follows the fresh carbohydrates plus
    // whatever is still in the stomach.
    model.on_meal = [](const MealContext&, double t, const Vector& x_pre, double carbs) {
        return MealContext{t, carbs + x_pre[0] + x_pre[1]};
    };
    return model;
}

}  // namespace mealsim
