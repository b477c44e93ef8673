#include "mealsim/models/hovorka.hpp"

namespace mealsim {

void HovorkaParams::validate() const {
    if (!(A_G > 0.0 && A_G <= 1.0)) throw std::invalid_argument("need 0 < A_G <= 1");
    if (!(tau_D > 0.0)) throw std::invalid_argument("need tau_D > 0");
    if (!(f > 0.0 && f <= 1.0)) throw std::invalid_argument("need 0 < f <= 1");
    if (!(BW > 0.0)) throw std::invalid_argument("need BW > 0");
}

LinearRealization hovorka_realization(const HovorkaParams& p) {
    p.validate();
    LinearRealization sys;
    sys.A.resize(2, 2);
    sys.A << -1.0 / p.tau_D, 0.0,
              1.0 / p.tau_D, -1.0 / p.tau_D;
    sys.B.resize(2, 1);
    sys.B << p.A_G, 0.0;
    sys.C.resize(2);
    sys.C << 0.0, p.f / p.tau_D;
    return sys;
}

ModelInstance hovorka_model(const HovorkaParams& p) {
    const LinearRealization sys = hovorka_realization(p);

    ModelInstance model;
    model.name = "hovorka";
    model.state_dim = 2;
    model.state_labels = {"D1_mg", "D2_mg"};
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
