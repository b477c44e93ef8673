#include "mealsim/catalog.hpp"

#include "mealsim/models/alskar.hpp"
#include "mealsim/models/dalla_man.hpp"
#include "mealsim/models/hovorka.hpp"
#include "mealsim/models/simo.hpp"

#include <algorithm>

namespace mealsim {

namespace {

using Overrides = std::map<std::string, double>;

/// Applies overrides through a name -> member map, rejecting unknown names.
class ParameterTable {
public:
    ParameterTable(std::initializer_list<std::pair<std::string, double*>> entries)
        : entries_(entries) {}

    void apply(const Overrides& overrides) const {
        for (const auto& [name, value] : overrides) {
            const auto it =
                std::find_if(entries_.begin(), entries_.end(),
                             [&](const auto& e) { return e.first == name; });
            if (it == entries_.end()) {
                throw std::invalid_argument("unknown parameter '" + name + "'");
            }
            *it->second = value;
        }
    }

    std::vector<std::string> names() const {
        std::vector<std::string> out;
        out.reserve(entries_.size());
        for (const auto& e : entries_) out.push_back(e.first);
        return out;
    }

private:
    std::vector<std::pair<std::string, double*>> entries_;
};

HovorkaParams hovorka_from(const Overrides& o) {
    HovorkaParams p;
    ParameterTable{{"A_G", &p.A_G}, {"tau_D", &p.tau_D}, {"f", &p.f}, {"BW", &p.BW}}
        .apply(o);
    p.validate();
    return p;
}

DallaManParams dalla_man_from(const Overrides& o) {
    DallaManParams p;
    ParameterTable{{"k_max", &p.k_max}, {"k_min", &p.k_min}, {"k_abs", &p.k_abs},
                   {"k_gri", &p.k_gri}, {"b", &p.b},         {"c", &p.c},
                   {"f", &p.f},         {"BW", &p.BW}}
        .apply(o);
    p.validate();
    return p;
}

SimoParams simo_from(const Overrides& o) {
    SimoParams p;
    ParameterTable{{"k_js", &p.k_js}, {"k_rj", &p.k_rj}, {"k_lr", &p.k_lr},
                   {"k_gj", &p.k_gj}, {"k_gl", &p.k_gl}, {"f", &p.f},
                   {"BW", &p.BW}}
        .apply(o);
    p.validate();
    return p;
}

AlskarParams alskar_from(const Overrides& o) {
    AlskarParams p;
    ParameterTable{{"k_w", &p.k_w},         {"IG_D50", &p.IG_D50},
                   {"gamma", &p.gamma},     {"L_D", &p.L_D},
                   {"L_J", &p.L_J},         {"T", &p.T},
                   {"sigma", &p.sigma},     {"t_50", &p.t_50},
                   {"K_mG", &p.K_mG},       {"R_D_max", &p.R_D_max},
                   {"R_J_max", &p.R_J_max}, {"R_I_max", &p.R_I_max},
                   {"F_P", &p.F_P},         {"BW", &p.BW}}
        .apply(o);
    p.validate();
    return p;
}

ParameterTable cstr_pfr_base_table(CstrPfrParams& p) {
    return ParameterTable{{"z_0", &p.z_0}, {"z_f", &p.z_f},   {"v_p", &p.v_p},
                          {"D_p", &p.D_p}, {"r_si", &p.r_si}, {"f", &p.f},
                          {"v_a", &p.v_a}, {"BW", &p.BW}};
}

ModelInstance cstr_pfr_from(const std::string& id, const Overrides& o,
                            IntestineScheme scheme, int resolution) {
    CstrPfrParams p;
    PylorusMode mode;
    Overrides base;
    Overrides pylorus;

    const std::vector<std::string> base_names = {"z_0",  "z_f", "v_p", "D_p",
                                                 "r_si", "f",   "v_a", "BW"};
    for (const auto& [name, value] : o) {
        if (std::find(base_names.begin(), base_names.end(), name) != base_names.end()) {
            base.emplace(name, value);
        } else {
            pylorus.emplace(name, value);
        }
    }
    cstr_pfr_base_table(p).apply(base);
    p.validate();

    if (id == "cstr-pfr-open") {
        OpenPylorus m;
        ParameterTable{{"k_sd", &m.k_sd}}.apply(pylorus);
        if (!(m.k_sd > 0.0)) throw std::invalid_argument("need k_sd > 0");
        mode = m;
    } else if (id == "cstr-pfr-moxon") {
        MoxonPylorus m;
        ParameterTable{{"k_sd_max", &m.k_sd_max},
                       {"R_A_max", &m.R_A_max},
                       {"sigma", &m.sigma}}
            .apply(pylorus);
        if (!(m.k_sd_max > 0.0 && m.R_A_max > 0.0 && m.sigma > 0.0)) {
            throw std::invalid_argument("Moxon pylorus parameters must be positive");
        }
        mode = m;
    } else {
        AlskarPylorus m;
        ParameterTable{{"k_sd_min", &m.k_sd_min},
                       {"k_sd_max", &m.k_sd_max},
                       {"m_d_50", &m.m_d_50},
                       {"gamma", &m.gamma}}
            .apply(pylorus);
        if (!(m.k_sd_min > 0.0 && m.k_sd_min <= m.k_sd_max && m.m_d_50 > 0.0 &&
              m.gamma >= 1.0)) {
            throw std::invalid_argument("Alskar pylorus parameters out of range");
        }
        mode = m;
    }

    const IntestineDiscretization disc =
        scheme == IntestineScheme::FiniteVolume
            ? IntestineDiscretization::finite_volume(p, resolution > 0 ? resolution : 100)
            : IntestineDiscretization::spectral(p, resolution > 0 ? resolution : 32);
    return cstr_pfr_model(p, mode, disc);
}

}  // namespace

const std::vector<ModelSummary>& model_catalog() {
    static const std::vector<ModelSummary> catalog = {
        {"hovorka", "ODEs", "2", true, true},
        {"dalla-man", "ODEs", "3", false, true},
        {"simo", "ODEs", "4", true, true},
        {"alskar", "ODEs", "4", false, false},
        {"cstr-pfr-open", "ODEs and PDEs", "1+M", true, true},
        {"cstr-pfr-moxon", "ODEs and PDEs", "1+M", false, false},
        {"cstr-pfr-alskar", "ODEs and PDEs", "1+M", false, false},
    };
    return catalog;
}

bool is_known_model(const std::string& id) {
    const auto& catalog = model_catalog();
    return std::any_of(catalog.begin(), catalog.end(),
                       [&](const ModelSummary& m) { return m.id == id; });
}

const std::vector<std::string>& known_parameter_names(const std::string& id) {
    static const std::map<std::string, std::vector<std::string>> names = [] {
        std::map<std::string, std::vector<std::string>> out;
        {
            HovorkaParams p;
            out["hovorka"] = ParameterTable{{"A_G", &p.A_G},
                                            {"tau_D", &p.tau_D},
                                            {"f", &p.f},
                                            {"BW", &p.BW}}
                                 .names();
        }
        {
            DallaManParams p;
            out["dalla-man"] = ParameterTable{{"k_max", &p.k_max}, {"k_min", &p.k_min},
                                              {"k_abs", &p.k_abs}, {"k_gri", &p.k_gri},
                                              {"b", &p.b},         {"c", &p.c},
                                              {"f", &p.f},         {"BW", &p.BW}}
                                   .names();
        }
        {
            SimoParams p;
            out["simo"] = ParameterTable{{"k_js", &p.k_js}, {"k_rj", &p.k_rj},
                                         {"k_lr", &p.k_lr}, {"k_gj", &p.k_gj},
                                         {"k_gl", &p.k_gl}, {"f", &p.f},
                                         {"BW", &p.BW}}
                              .names();
        }
        {
            AlskarParams p;
            out["alskar"] =
                ParameterTable{{"k_w", &p.k_w},         {"IG_D50", &p.IG_D50},
                               {"gamma", &p.gamma},     {"L_D", &p.L_D},
                               {"L_J", &p.L_J},         {"T", &p.T},
                               {"sigma", &p.sigma},     {"t_50", &p.t_50},
                               {"K_mG", &p.K_mG},       {"R_D_max", &p.R_D_max},
                               {"R_J_max", &p.R_J_max}, {"R_I_max", &p.R_I_max},
                               {"F_P", &p.F_P},         {"BW", &p.BW}}
                    .names();
        }
        const std::vector<std::string> base = {"z_0",  "z_f", "v_p", "D_p",
                                               "r_si", "f",   "v_a", "BW"};
        auto with = [&](std::initializer_list<std::string> extra) {
            std::vector<std::string> v = base;
            v.insert(v.end(), extra);
            return v;
        };
        out["cstr-pfr-open"] = with({"k_sd"});
        out["cstr-pfr-moxon"] = with({"k_sd_max", "R_A_max", "sigma"});
        out["cstr-pfr-alskar"] = with({"k_sd_min", "k_sd_max", "m_d_50", "gamma"});
        return out;
    }();
    const auto it = names.find(id);
    if (it == names.end()) throw std::invalid_argument("unknown model '" + id + "'");
    return it->second;
}

ModelInstance make_model(const std::string& id, const std::map<std::string, double>& overrides,
                         IntestineScheme scheme, int resolution) {
    if (id == "hovorka") return hovorka_model(hovorka_from(overrides));
    if (id == "dalla-man") return dalla_man_model(dalla_man_from(overrides));
    if (id == "simo") return simo_model(simo_from(overrides));
    if (id == "alskar") return alskar_model(alskar_from(overrides));
    if (id == "cstr-pfr-open" || id == "cstr-pfr-moxon" || id == "cstr-pfr-alskar") {
        return cstr_pfr_from(id, overrides, scheme, resolution);
    }
    throw std::invalid_argument("unknown model '" + id + "'");
}

}  // namespace mealsim
