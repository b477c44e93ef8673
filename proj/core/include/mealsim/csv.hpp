#pragma once

#include "mealsim/scenario.hpp"
#include "mealsim/types.hpp"

#include <string>
#include <vector>

namespace mealsim {

/// Format a double with 17 significant digits (round-trip exact, C locale).
std::string format_double(double value);

/// Write a CSV with a `time_min` column followed by one column per series.
/// Values carry 17 significant digits, lines end with LF.
void write_csv(const std::string& path, const std::vector<double>& times,
               const std::vector<std::string>& series_names,
               const std::vector<const std::vector<double>*>& series);

/// Trajectory CSV: time, R_A (optionally per kg), and the state columns.
void write_trajectory_csv(const std::string& path, const Trajectory& trajectory,
                          const ModelInstance& model, bool per_kg,
                          bool include_states = true);

void write_report_csv(const std::string& path, const ComparisonReport& report);

/// A self-contained gnuplot script that plots every series of the report CSV
/// (referenced by its basename, so the script runs from its own directory).
void write_report_plot_script(const std::string& path, const ComparisonReport& report,
                              const std::string& csv_filename);

}  // namespace mealsim
