#include "mealsim/types.hpp"

#include <cmath>

namespace mealsim {

void MealSchedule::validate() const {
    double previous_end = -1.0;
    double previous_time = -1.0;
    for (std::size_t k = 0; k < events.size(); ++k) {
        const MealEvent& e = events[k];
        if (!(e.time_min >= 0.0) || !(e.carbs_mg >= 0.0) || !(e.duration_min >= 0.0)) {
            throw std::invalid_argument("meal event " + std::to_string(k) +
                                        ": time, carbs, and duration must be nonnegative");
        }
        if (k > 0 && !(e.time_min > previous_time)) {
            throw std::invalid_argument("meal event times must be strictly increasing");
        }
        if (e.duration_min > 0.0 && e.time_min < previous_end) {
            throw std::invalid_argument("flow-rate meal intervals must not overlap");
        }
        previous_time = e.time_min;
        previous_end = std::max(previous_end, e.time_min + e.duration_min);
    }
}

bool MealSchedule::all_impulses() const {
    for (const MealEvent& e : events) {
        if (e.duration_min != 0.0) return false;
    }
    return true;
}

bool MealSchedule::all_steps() const {
    for (const MealEvent& e : events) {
        if (e.duration_min <= 0.0) return false;
    }
    return true;
}

double MealSchedule::total_carbs_mg() const {
    double total = 0.0;
    for (const MealEvent& e : events) total += e.carbs_mg;
    return total;
}

MealSchedule MealSchedule::scaled(double factor) const {
    MealSchedule out = *this;
    for (MealEvent& e : out.events) e.carbs_mg *= factor;
    return out;
}

void IntegratorOptions::validate() const {
    if (!(rel_tol > 0.0) || !(abs_tol > 0.0) || !(max_step_min > 0.0) ||
        !(output_interval_min > 0.0)) {
        throw std::invalid_argument("integrator options must all be strictly positive");
    }
}

}  // namespace mealsim
