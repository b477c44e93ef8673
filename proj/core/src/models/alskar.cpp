#include "mealsim/models/alskar.hpp"

#include "mealsim/delay.hpp"

#include <cmath>

namespace mealsim {

void AlskarParams::validate() const {
    if (!(k_w > 0.0)) throw std::invalid_argument("need k_w > 0");
    if (!(IG_D50 > 0.0 && K_mG > 0.0)) throw std::invalid_argument("need IG_D50, K_mG > 0");
    if (!(gamma >= 1.0)) throw std::invalid_argument("need gamma >= 1");
    if (!(L_D > 0.0 && L_J > 0.0 && L_D + L_J < 1.0)) {
        throw std::invalid_argument("need L_D > 0, L_J > 0, L_D + L_J < 1");
    }
    if (!(T > 0.0 && sigma > 0.0 && t_50 > 0.0)) {
        throw std::invalid_argument("need T, sigma, t_50 > 0");
    }
    if (!(R_D_max > 0.0 && R_J_max > 0.0 && R_I_max > 0.0)) {
        throw std::invalid_argument("absorption capacities must be positive");
    }
    if (!(F_P > 0.0 && F_P <= 1.0)) throw std::invalid_argument("need 0 < F_P <= 1");
    if (!(BW > 0.0)) throw std::invalid_argument("need BW > 0");
}

double alskar_k_sd(double duodenum_glucose_mg, const AlskarParams& p) {
    if (duodenum_glucose_mg <= 0.0) return p.k_w;
    // 1 - G^g/(K^g + G^g) = 1/(1 + exp(g (ln G - ln K)))
    const double log_ratio =
        p.gamma * (std::log(duodenum_glucose_mg) - std::log(p.IG_D50));
    return p.k_w / (1.0 + std::exp(log_ratio));
}

namespace {

double michaelis_menten(double capacity, double amount, double k_m) {
    return capacity * amount / (k_m + amount);
}

}  // namespace

Vector alskar_rhs(const Vector& state, double d, double t_since_meal_min,
                  const AlskarParams& p) {
    if (state.size() != 4) throw std::invalid_argument("alskar_rhs: state size must be 4");
    const double g_s = state[0];
    const double g_d = state[1];
    const double g_j = state[2];
    const double g_i = state[3];

    const double k_sd = alskar_k_sd(g_d, p);
    const double k_dj = 1.0 / (p.L_D * p.T);
    const double k_ji = 1.0 / (p.L_J * p.T);
    const double lag = algebraic_lag(t_since_meal_min, p.sigma, p.t_50);

    const double r_sd = k_sd * lag * g_s;
    const double r_dj = k_dj * g_d;
    const double r_ji = k_ji * g_j;
    const double r_ad = michaelis_menten(p.R_D_max, g_d, p.K_mG);
    const double r_aj = michaelis_menten(p.R_J_max, g_j, p.K_mG);
    const double r_ai = michaelis_menten(p.R_I_max, g_i, p.K_mG);

    Vector dx(4);
    dx << d - r_sd,
          r_sd - r_dj - r_ad,
          r_dj - r_ji - r_aj,
          r_ji - r_ai;
    return dx;
}

double alskar_output(const Vector& state, const AlskarParams& p) {
    return p.F_P * (michaelis_menten(p.R_D_max, state[1], p.K_mG) +
                    michaelis_menten(p.R_J_max, state[2], p.K_mG) +
                    michaelis_menten(p.R_I_max, state[3], p.K_mG));
}

ModelInstance alskar_model(const AlskarParams& p) {
    p.validate();

    ModelInstance model;
    model.name = "alskar";
    model.state_dim = 4;
    model.state_labels = {"G_S_mg", "G_D_mg", "G_J_mg", "G_I_mg"};
    model.body_weight_kg = p.BW;
    model.linear_in_meal_size = false;
    // The lag clock counts from the most recent meal, reset per meal.
    model.rhs = [p](double t, const Vector& x, double d, const MealContext& ctx, Vector& dx) {
        dx = alskar_rhs(x, d, t - ctx.last_meal_time_min, p);
    };
    model.output = [p](const Vector& x) { return alskar_output(x, p); };
    model.injection = [](const Vector&) {
        Vector b(4);
        b << 1.0, 0.0, 0.0, 0.0;
        return b;
    };
    return model;
}

}  // namespace mealsim
