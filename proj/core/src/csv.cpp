#include "mealsim/csv.hpp"

#include <charconv>
#include <cstring>
#include <fstream>
#include <system_error>

namespace mealsim {

namespace {

std::ofstream open_for_write(const std::string& path) {
    std::ofstream file(path, std::ios::binary);  // binary keeps LF endings everywhere
    if (!file) throw std::runtime_error(path + ": cannot open for writing");
    return file;
}

}  // namespace

std::string format_double(double value) {
    char buffer[64];
    const auto [ptr, ec] =
        std::to_chars(buffer, buffer + sizeof(buffer), value,
                      std::chars_format::general, 17);
    if (ec != std::errc{}) throw std::runtime_error("format_double failed");
    return std::string(buffer, ptr);
}

void write_csv(const std::string& path, const std::vector<double>& times,
               const std::vector<std::string>& series_names,
               const std::vector<const std::vector<double>*>& series) {
    if (series_names.size() != series.size()) {
        throw std::invalid_argument("write_csv: one name per series required");
    }
    for (const auto* s : series) {
        if (s->size() != times.size()) {
            throw std::invalid_argument("write_csv: series length mismatch");
        }
    }

    std::ofstream file = open_for_write(path);
    file << "time_min";
    for (const std::string& name : series_names) file << "," << name;
    file << "\n";
    for (std::size_t i = 0; i < times.size(); ++i) {
        file << format_double(times[i]);
        for (const auto* s : series) file << "," << format_double((*s)[i]);
        file << "\n";
    }
    if (!file) throw std::runtime_error(path + ": write failed");
}

void write_trajectory_csv(const std::string& path, const Trajectory& trajectory,
                          const ModelInstance& model, bool per_kg, bool include_states) {
    std::vector<std::string> names{"R_A_mg_per_min"};
    std::vector<const std::vector<double>*> series{&trajectory.outputs};
    if (per_kg) {
        names.push_back("R_A_mg_per_kg_min");
        series.push_back(&trajectory.per_kg_outputs);
    }

    std::vector<std::vector<double>> state_columns;
    if (include_states) {
        const auto n = static_cast<std::size_t>(model.state_dim);
        state_columns.resize(n);
        for (std::size_t j = 0; j < n; ++j) {
            state_columns[j].resize(trajectory.size());
            for (std::size_t i = 0; i < trajectory.size(); ++i) {
                state_columns[j][i] =
                    trajectory.states(static_cast<Eigen::Index>(i),
                                      static_cast<Eigen::Index>(j));
            }
            names.push_back(j < model.state_labels.size() ? model.state_labels[j]
                                                          : "x" + std::to_string(j));
            series.push_back(&state_columns[j]);
        }
    }
    write_csv(path, trajectory.times_min, names, series);
}

void write_report_csv(const std::string& path, const ComparisonReport& report) {
    std::vector<std::string> names;
    std::vector<const std::vector<double>*> series;
    for (const ComparisonEntry& entry : report.entries) {
        names.push_back(entry.label + (report.per_kg ? "_mg_per_kg_min" : "_mg_per_min"));
        series.push_back(&entry.series);
    }
    write_csv(path, report.times_min, names, series);
}

void write_report_plot_script(const std::string& path, const ComparisonReport& report,
                              const std::string& csv_filename) {
    std::ofstream file = open_for_write(path);
    file << "# gnuplot script; run from this directory: gnuplot " << path << "\n";
    file << "set datafile separator ','\n";
    file << "set key autotitle columnhead\n";
    file << "set xlabel 'time [min]'\n";
    file << "set ylabel 'R_A ["
         << (report.per_kg ? "mg/(kg min)" : "mg/min") << "]'\n";
    file << "set grid\n";
    file << "plot \\\n";
    for (std::size_t i = 0; i < report.entries.size(); ++i) {
        file << "  '" << csv_filename << "' using 1:" << (i + 2) << " with lines"
             << (i + 1 < report.entries.size() ? ", \\" : "") << "\n";
    }
    file << "pause -1 'press enter to close'\n";
    if (!file) throw std::runtime_error(path + ": write failed");
}

}  // namespace mealsim
