#include "mealsim/models/simo.hpp"

namespace mealsim {

void SimoParams::validate() const {
    if (!(k_js > 0.0 && k_rj > 0.0 && k_lr > 0.0 && k_gj > 0.0 && k_gl > 0.0)) {
        throw std::invalid_argument("all SIMO rate constants must be positive");
    }
    if (!(f > 0.0 && f <= 1.0)) throw std::invalid_argument("need 0 < f <= 1");
    if (!(BW > 0.0)) throw std::invalid_argument("need BW > 0");
}

LinearRealization simo_realization(const SimoParams& p) {
    p.validate();
    LinearRealization sys;
    sys.A = Matrix::Zero(4, 4);
    sys.A(0, 0) = -p.k_js;
    sys.A(1, 0) = p.k_js;
    sys.A(1, 1) = -(p.k_gj + p.k_rj);
    sys.A(2, 1) = p.k_rj;
    sys.A(2, 2) = -p.k_lr;
    sys.A(3, 2) = p.k_lr;
    sys.A(3, 3) = -p.k_gl;
    sys.B = Matrix::Zero(4, 1);
    sys.B(0, 0) = 1.0;
    sys.C.resize(4);
    sys.C << 0.0, p.f * p.k_gj, 0.0, p.f * p.k_gl;
    return sys;
}

ModelInstance simo_model(const SimoParams& p) {
    const LinearRealization sys = simo_realization(p);

    ModelInstance model;
    model.name = "simo";
    model.state_dim = 4;
    model.state_labels = {"S_mg", "J_mg", "R_mg", "L_mg"};
    model.body_weight_kg = p.BW;
    model.linear = sys;
    model.linear_in_meal_size = true;
    model.rhs = [sys](double, const Vector& x, double d, const MealContext&, Vector& dx) {
        dx.noalias() = sys.A * x;
        dx.noalias() += sys.B * d;
    };
    model.output = [sys](const Vector& x) { return sys.C.dot(x); };
    model.injection = [b = Vector(sys.B.col(0))](const Vector&) { return b; };
    return model;
}

}  // namespace mealsim
