#include "mealsim/mealsim.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>

namespace fs = std::filesystem;
using namespace mealsim;

namespace {

struct CommonFlags {
    std::vector<std::string> config_paths;
    std::string out_dir = ".";
    std::string scheme;
    int resolution = 0;
    bool per_kg = false;
};

void add_common_flags(CLI::App* cmd, CommonFlags& flags, bool config_required) {
    auto* config = cmd->add_option("--config", flags.config_paths,
                                   "scenario config file (repeatable)");
    if (config_required) config->required();
    cmd->add_option("--out", flags.out_dir, "output directory")
        ->capture_default_str();
    cmd->add_option("--scheme", flags.scheme, "intestine discretization: fv or sg")
        ->check(CLI::IsMember({"fv", "sg"}));
    cmd->add_option("--resolution", flags.resolution,
                    "cells (fv) or polynomial order (sg)");
    cmd->add_flag("--per-kg", flags.per_kg, "normalize R_A with body weight");
}

std::vector<ScenarioConfig> load_all(const CommonFlags& flags) {
    std::vector<ScenarioConfig> configs;
    for (const std::string& path : flags.config_paths) {
        std::vector<ScenarioConfig> loaded = load_configs(path);
        configs.insert(configs.end(), loaded.begin(), loaded.end());
    }
    for (ScenarioConfig& cfg : configs) {
        if (flags.scheme == "fv") cfg.scheme = IntestineScheme::FiniteVolume;
        if (flags.scheme == "sg") cfg.scheme = IntestineScheme::SpectralGalerkin;
        if (flags.resolution > 0) cfg.resolution = flags.resolution;
        if (flags.per_kg) cfg.per_kg = true;
    }
    return configs;
}

fs::path prepare_out_dir(const std::string& dir) {
    const fs::path out(dir);
    fs::create_directories(out);
    return out;
}

int cmd_run(const CommonFlags& flags) {
    const std::vector<ScenarioConfig> configs = load_all(flags);
    if (configs.size() != 1) {
        throw ConfigError("run expects exactly one scenario, found " +
                          std::to_string(configs.size()));
    }
    const ScenarioResult result = run_scenario(configs.front());
    const fs::path out = prepare_out_dir(flags.out_dir);
    const fs::path csv = out / (result.config.name + ".csv");
    write_trajectory_csv(csv.string(), result.trajectory, result.model,
                         result.config.per_kg);

    const SeriesStats stats =
        series_stats(result.trajectory.times_min, result.trajectory.outputs);
    std::printf("scenario %s (%s), horizon %g min\n", result.config.name.c_str(),
                result.config.model_id.c_str(), result.config.horizon_min);
    std::printf("  peak R_A   %.6g mg/min at %g min\n", stats.peak_value, stats.peak_time);
    std::printf("  integral   %.6g mg\n", stats.integral);
    std::printf("  local maxima %d\n", stats.local_maxima);
    if (result.config.scheme == IntestineScheme::SpectralGalerkin &&
        result.min_state_value < 0.0) {
        std::printf("  note: spectral overshoot, most negative state value %.3g\n",
                    result.min_state_value);
    }
    std::printf("  wrote %s\n", csv.string().c_str());
    return 0;
}

int cmd_compare(const CommonFlags& flags, std::vector<double> carbs_g) {
    const std::vector<ScenarioConfig> configs = load_all(flags);
    if (configs.empty()) throw ConfigError("compare needs at least one scenario");
    if (carbs_g.empty()) carbs_g = configs.front().carbs_g;

    const ComparisonReport report = run_comparison(configs, carbs_g);
    const fs::path out = prepare_out_dir(flags.out_dir);
    const fs::path csv = out / "comparison.csv";
    const fs::path script = out / "comparison.gp";
    write_report_csv(csv.string(), report);
    write_report_plot_script(script.string(), report, csv.filename().string());

    std::printf("%-28s %12s %10s %7s %14s\n", "series", "peak", "at [min]", "maxima",
                "integral [mg]");
    for (const ComparisonEntry& entry : report.entries) {
        std::printf("%-28s %12.4f %10.1f %7d %14.1f\n", entry.label.c_str(),
                    entry.stats.peak_value, entry.stats.peak_time,
                    entry.stats.local_maxima, entry.stats.integral);
    }
    std::printf("peak/integral columns are mg/min and mg; series in the CSV are %s\n",
                report.per_kg ? "per kg" : "absolute");
    std::printf("local maxima counted with a %.0e mg/min deadband\n", report.deadband);
    std::printf("wrote %s and %s\n", csv.string().c_str(), script.string().c_str());
    return 0;
}

int cmd_check_linearity(const CommonFlags& flags) {
    const std::vector<ScenarioConfig> configs = load_all(flags);
    int flagged = 0;
    std::printf("%-18s %10s %16s %10s\n", "model", "carbs [g]", "max rel deviation",
                "verdict");
    for (const ScenarioConfig& cfg : configs) {
        const ModelInstance model = cfg.build_model();
        MealSchedule base = cfg.schedule;
        if (base.events.empty()) base.events.push_back({0.0, 1.0, 0.0});
        const ScheduleShape shape{base, false};

        std::vector<double> carbs_mg;
        for (double g : cfg.carbs_g) carbs_mg.push_back(1000.0 * g);
        IntegratorOptions opts;
        opts.output_interval_min = cfg.output_interval_min;

        const LinearityReport report =
            verify_d_linearity(model, shape, carbs_mg, cfg.horizon_min, opts);
        for (const LinearityEntry& entry : report.entries) {
            const bool nonlinear = entry.max_rel_deviation > report.flag_threshold;
            std::printf("%-18s %10g %16.3e %10s\n", cfg.name.c_str(),
                        entry.carbs_mg / 1000.0, entry.max_rel_deviation,
                        nonlinear ? "NONLINEAR" : "linear");
            if (nonlinear) ++flagged;
        }
    }
    std::printf("%d series flagged NONLINEAR (threshold 1e-2)\n", flagged);
    return 0;
}

int cmd_delay_demo(const std::string& out_dir, double tau_d, int stages, double sigma) {
    const DelaySpec spec{tau_d, stages};
    const DelayRealization lag = lag_chain(spec);
    const DelayRealization pade = pade_chain(spec);
    const DelayRealization transport = transport_chain(spec);

    std::vector<double> times;
    for (double t = 0.0; t <= 5.0 * tau_d + 1e-12; t += tau_d / 200.0) times.push_back(t);

    const std::vector<double> y_lag = step_response(lag.system, times);
    const std::vector<double> y_pade = step_response(pade.system, times);
    const std::vector<double> y_transport = step_response(transport.system, times);
    std::vector<double> input(times.size(), 1.0);
    std::vector<double> y_exact(times.size());
    std::vector<double> y_algebraic(times.size());
    for (std::size_t i = 0; i < times.size(); ++i) {
        y_exact[i] = times[i] >= tau_d ? 1.0 : 0.0;
        y_algebraic[i] = algebraic_lag(times[i], sigma, tau_d) * input[i];
    }

    const fs::path out = prepare_out_dir(out_dir);
    const fs::path csv = out / "delay_comparison.csv";
    write_csv(csv.string(), times,
              {"input", "exact_delay", "lag", "pade", "transport", "algebraic"},
              {&input, &y_exact, &y_lag, &y_pade, &y_transport, &y_algebraic});

    const fs::path script = out / "delay_comparison.gp";
    std::ofstream gp(script, std::ios::binary);
    gp << "# gnuplot script; run from this directory: gnuplot delay_comparison.gp\n"
       << "set datafile separator ','\n"
       << "set key autotitle columnhead\n"
       << "set multiplot layout 5,1 title 'delay approximations, tau_d = " << tau_d
       << " min, M = " << stages << "'\n";
    const char* panels[4] = {"lag", "pade", "transport", "algebraic"};
    for (int i = 0; i < 4; ++i) {
        gp << "plot 'delay_comparison.csv' using 1:3 with lines title 'exact', \\\n"
           << "     'delay_comparison.csv' using 1:" << (4 + i) << " with lines title '"
           << panels[i] << "'\n";
    }
    gp << "plot 'delay_comparison.csv' using 1:2 with lines title 'input'\n"
       << "unset multiplot\npause -1 'press enter to close'\n";

    std::printf("wrote %s and %s\n", csv.string().c_str(), script.string().c_str());
    return 0;
}

int cmd_list_models() {
    std::printf("%-17s %-14s %-7s %-7s %s\n", "model", "equations", "states", "linear",
                "linear in meal size");
    for (const ModelSummary& m : model_catalog()) {
        std::printf("%-17s %-14s %-7s %-7s %s\n", m.id.c_str(), m.equation_types.c_str(),
                    m.state_count.c_str(), m.linear ? "yes" : "no",
                    m.linear_in_meal_size ? "yes" : "no");
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"simulation of gastrointestinal glucose absorption models"};
    app.require_subcommand(1);

    CommonFlags run_flags;
    auto* run = app.add_subcommand("run", "simulate one scenario and write a CSV");
    add_common_flags(run, run_flags, true);

    CommonFlags compare_flags;
    std::vector<double> carbs_g;
    auto* compare =
        app.add_subcommand("compare", "simulate scenarios across meal sizes");
    add_common_flags(compare, compare_flags, true);
    compare->add_option("--carbs", carbs_g, "meal sizes in grams (default from config)");

    CommonFlags lin_flags;
    auto* lin = app.add_subcommand("check-linearity",
                                   "compare direct and scaled unit-meal responses");
    add_common_flags(lin, lin_flags, true);

    std::string delay_out = ".";
    double tau_d = 10.0;
    int stages = 8;
    double sigma = 1.0;
    auto* delay = app.add_subcommand("delay-demo",
                                     "emit the delay-approximation comparison dataset");
    delay->add_option("--out", delay_out, "output directory")->capture_default_str();
    delay->add_option("--tau-d", tau_d, "delay in minutes")->capture_default_str();
    delay->add_option("--stages", stages, "series stages M")->capture_default_str();
    delay->add_option("--sigma", sigma, "algebraic lag steepness (1/min)")
        ->capture_default_str();

    auto* list = app.add_subcommand("list-models", "print the model catalog");

    CLI11_PARSE(app, argc, argv);

    try {
        if (run->parsed()) return cmd_run(run_flags);
        if (compare->parsed()) return cmd_compare(compare_flags, carbs_g);
        if (lin->parsed()) return cmd_check_linearity(lin_flags);
        if (delay->parsed()) return cmd_delay_demo(delay_out, tau_d, stages, sigma);
        if (list->parsed()) return cmd_list_models();
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
    return 0;
}
