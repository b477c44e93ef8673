#pragma once

#include <vector>

namespace mealsim {

/// Trapezoidal integral of y over t.
double trapezoid(const std::vector<double>& t, const std::vector<double>& y);

/// Number of interior local maxima, counted with a hysteresis deadband: the
/// direction only flips after the series moves against it by more than
/// `deadband`, which suppresses integrator ripple.
int count_local_maxima(const std::vector<double>& y, double deadband);

struct SeriesStats {
    double peak_value = 0.0;
    double peak_time = 0.0;
    int local_maxima = 0;
    double integral = 0.0;
};

SeriesStats series_stats(const std::vector<double>& t, const std::vector<double>& y,
                         double deadband = 1e-3);

}  // namespace mealsim
