#include "mealsim/models/cstr_pfr.hpp"

#include <cmath>

namespace mealsim {

namespace {

constexpr double kPi = 3.14159265358979323846;

}  // namespace

double CstrPfrParams::area() const { return kPi * r_si * r_si; }

double CstrPfrParams::duodenum_end() const { return z_0 + 0.08 * (z_f - z_0); }

double CstrPfrParams::absorption_rate() const { return 2.0 * f / r_si * v_a; }

void CstrPfrParams::validate() const {
    if (!(z_f > z_0)) throw std::invalid_argument("need z_f > z_0");
    if (!(v_p > 0.0)) throw std::invalid_argument("need v_p > 0");
    if (!(D_p >= 0.0)) throw std::invalid_argument("need D_p >= 0");
    if (!(r_si > 0.0)) throw std::invalid_argument("need r_si > 0");
    if (!(f > 0.0)) throw std::invalid_argument("need f > 0");
    if (!(v_a > 0.0)) throw std::invalid_argument("need v_a > 0");
    if (!(BW > 0.0)) throw std::invalid_argument("need BW > 0");
}

double k_sd_moxon(double rate_of_appearance, const MoxonPylorus& mode) {
    return mode.k_sd_max /
           (1.0 + std::exp(mode.sigma * (rate_of_appearance - mode.R_A_max)));
}

double k_sd_alskar(double duodenum_mass_mg, const AlskarPylorus& mode) {
    if (!(duodenum_mass_mg >= 0.0)) {
        throw std::invalid_argument("k_sd_alskar: duodenum mass must be nonnegative");
    }
    if (duodenum_mass_mg == 0.0) return mode.k_sd_max;
    // 1 - m^g/(m50^g + m^g) = 1/(1 + exp(g (ln m - ln m50)))
    const double log_ratio =
        mode.gamma * (std::log(duodenum_mass_mg) - std::log(mode.m_d_50));
    return mode.k_sd_min + (mode.k_sd_max - mode.k_sd_min) / (1.0 + std::exp(log_ratio));
}

Eigen::Index IntestineDiscretization::dof_count() const {
    return scheme == IntestineScheme::FiniteVolume ? grid->cell_count()
                                                   : basis->node_count();
}

IntestineDiscretization IntestineDiscretization::finite_volume(const CstrPfrParams& p,
                                                               int cells) {
    p.validate();
    IntestineDiscretization disc;
    disc.scheme = IntestineScheme::FiniteVolume;
    disc.grid = FvGrid::uniform(p.z_0, p.z_f, cells, p.area());
    disc.map = DomainMap{p.z_0, p.z_f};
    return disc;
}

IntestineDiscretization IntestineDiscretization::spectral(const CstrPfrParams& p,
                                                          int order) {
    p.validate();
    IntestineDiscretization disc;
    disc.scheme = IntestineScheme::SpectralGalerkin;
    disc.basis = SpectralBasis::make(PolynomialFamily::Legendre,
                                     QuadratureRule::GaussLobatto, order);
    disc.map = DomainMap{p.z_0, p.z_f};
    return disc;
}

double rate_of_appearance(const Vector& intestine_dofs,
                          const IntestineDiscretization& disc, const CstrPfrParams& p) {
    return p.absorption_rate() * intestine_mass(intestine_dofs, disc, p);
}

double intestine_mass(const Vector& intestine_dofs, const IntestineDiscretization& disc,
                      const CstrPfrParams& p) {
    if (disc.scheme == IntestineScheme::FiniteVolume) {
        if (intestine_dofs.size() != disc.grid->cell_count()) {
            throw std::invalid_argument("intestine_mass: wrong dof count");
        }
        return intestine_dofs.sum();
    }
    return sg_integral(*disc.basis, disc.map, intestine_dofs, p.area());
}

double duodenum_mass(const Vector& intestine_dofs, const IntestineDiscretization& disc,
                     const CstrPfrParams& p) {
    if (disc.scheme == IntestineScheme::FiniteVolume) {
        return fv_partial_integral(*disc.grid, intestine_dofs, p.duodenum_end());
    }
    return sg_integral(*disc.basis, disc.map, intestine_dofs, p.area(), -1.0,
                       disc.map.to_reference(p.duodenum_end()));
}

double intestine_outlet_flow(const Vector& intestine_dofs,
                             const IntestineDiscretization& disc,
                             const CstrPfrParams& p) {
    const PfrFluxSpec flux{p.v_p, p.D_p};
    if (disc.scheme == IntestineScheme::FiniteVolume) {
        return fv_outlet_flow(*disc.grid, flux, intestine_dofs);
    }
    return sg_outlet_flow(*disc.basis, flux, intestine_dofs, p.area());
}

Vector cstr_pfr_rhs(const Vector& state, const IntestineDiscretization& disc,
                    const PylorusMode& mode, double d, const CstrPfrParams& p) {
    const Eigen::Index dofs = disc.dof_count();
    if (state.size() != dofs + 1) {
        throw std::invalid_argument("cstr_pfr_rhs: state size must be 1 + intestine dofs");
    }
    const double m_s = state[0];
    const Vector intestine = state.tail(dofs);

    const double k_sd = std::visit(
        [&](const auto& m) -> double {
            using T = std::decay_t<decltype(m)>;
            if constexpr (std::is_same_v<T, OpenPylorus>) {
                return m.k_sd;
            } else if constexpr (std::is_same_v<T, MoxonPylorus>) {
                // Output feedback: R_A is an algebraic function of the state,
                // so the loop closes without an implicit solve.
                return k_sd_moxon(rate_of_appearance(intestine, disc, p), m);
            } else {
                return k_sd_alskar(duodenum_mass(intestine, disc, p), m);
            }
        },
        mode);
    const double f_sd = k_sd * m_s;

    const PfrFluxSpec flux{p.v_p, p.D_p};
    const double kappa = p.absorption_rate();

    Vector dx(state.size());
    dx[0] = d - f_sd;
    if (disc.scheme == IntestineScheme::FiniteVolume) {
        const Vector c = fv_concentrations(*disc.grid, intestine);
        const Vector source = -kappa * c;
        dx.tail(dofs) = fv_rhs(*disc.grid, flux, intestine, f_sd, source);
    } else {
        const Vector source = -kappa * intestine;
        dx.tail(dofs) = sg_rhs(*disc.basis, disc.map, flux, p.area(), intestine, f_sd,
                               source);
    }
    return dx;
}

ModelInstance cstr_pfr_model(const CstrPfrParams& p, const PylorusMode& mode,
                             const IntestineDiscretization& disc) {
    p.validate();
    const Eigen::Index dofs = disc.dof_count();

    ModelInstance model;
    model.name = std::visit(
        [](const auto& m) -> std::string {
            using T = std::decay_t<decltype(m)>;
            if constexpr (std::is_same_v<T, OpenPylorus>) return "cstr-pfr-open";
            else if constexpr (std::is_same_v<T, MoxonPylorus>) return "cstr-pfr-moxon";
            else return "cstr-pfr-alskar";
        },
        mode);
    model.state_dim = dofs + 1;
    model.state_labels.reserve(model.state_dim);
    model.state_labels.emplace_back("m_s_mg");
    const bool fv = disc.scheme == IntestineScheme::FiniteVolume;
    for (Eigen::Index i = 0; i < dofs; ++i) {
        model.state_labels.push_back((fv ? "m_si_" : "c_si_") + std::to_string(i));
    }
    model.body_weight_kg = p.BW;
    model.linear_in_meal_size = std::holds_alternative<OpenPylorus>(mode);

    model.rhs = [p, mode, disc](double, const Vector& x, double d, const MealContext&,
                                Vector& dx) {
        dx = cstr_pfr_rhs(x, disc, mode, d, p);
    };
    model.output = [p, disc, dofs](const Vector& x) {
        return rate_of_appearance(x.tail(dofs), disc, p);
    };
    model.injection = [dofs](const Vector&) {
        Vector b = Vector::Zero(dofs + 1);
        b[0] = 1.0;  // instantaneous meals land in the stomach
        return b;
    };

    if (model.linear_in_meal_size) {
        // With a constant pylorus rate the whole system is linear; assemble
        // the realization by probing the right-hand side with basis vectors.
        const Eigen::Index n = model.state_dim;
        LinearRealization sys;
        sys.A.resize(n, n);
        for (Eigen::Index j = 0; j < n; ++j) {
            sys.A.col(j) = cstr_pfr_rhs(Vector::Unit(n, j), disc, mode, 0.0, p);
        }
        sys.B = Matrix::Zero(n, 1);
        sys.B(0, 0) = 1.0;
        sys.C = RowVector::Zero(n);
        for (Eigen::Index j = 1; j < n; ++j) {
            sys.C(j) = rate_of_appearance(Vector::Unit(n, j).tail(dofs), disc, p);
        }
        model.linear = std::move(sys);
    }
    return model;
}

}  // namespace mealsim
