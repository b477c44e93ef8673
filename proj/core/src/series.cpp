#include "mealsim/series.hpp"

#include <algorithm>
#include <stdexcept>

namespace mealsim {

double trapezoid(const std::vector<double>& t, const std::vector<double>& y) {
    if (t.size() != y.size()) throw std::invalid_argument("trapezoid: size mismatch");
    double acc = 0.0;
    for (std::size_t i = 1; i < t.size(); ++i) {
        acc += 0.5 * (y[i] + y[i - 1]) * (t[i] - t[i - 1]);
    }
    return acc;
}

int count_local_maxima(const std::vector<double>& y, double deadband) {
    if (y.size() < 3) return 0;

    int maxima = 0;
    bool rising = false;
    bool direction_known = false;
    double extreme = y.front();

    for (std::size_t i = 1; i < y.size(); ++i) {
        const double v = y[i];
        if (!direction_known) {
            if (v > extreme + deadband) {
                rising = true;
                direction_known = true;
                extreme = v;
            } else if (v < extreme - deadband) {
                rising = false;
                direction_known = true;
                extreme = v;
            }
            continue;
        }
        if (rising) {
            if (v > extreme) {
                extreme = v;
            } else if (v < extreme - deadband) {
                ++maxima;  // confirmed turn down
                rising = false;
                extreme = v;
            }
        } else {
            if (v < extreme) {
                extreme = v;
            } else if (v > extreme + deadband) {
                rising = true;
                extreme = v;
            }
        }
    }
    return maxima;
}

SeriesStats series_stats(const std::vector<double>& t, const std::vector<double>& y,
                         double deadband) {
    if (t.size() != y.size() || t.empty()) {
        throw std::invalid_argument("series_stats: need equally sized, nonempty series");
    }
    SeriesStats stats;
    const auto it = std::max_element(y.begin(), y.end());
    stats.peak_value = *it;
    stats.peak_time = t[static_cast<std::size_t>(it - y.begin())];
    stats.local_maxima = count_local_maxima(y, deadband);
    stats.integral = trapezoid(t, y);
    return stats;
}

}  // namespace mealsim
