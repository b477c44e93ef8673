#include "mealsim/engine.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace mealsim {

namespace {

// Dormand-Prince 5(4) tableau.
constexpr double kC2 = 1.0 / 5.0;
constexpr double kC3 = 3.0 / 10.0;
constexpr double kC4 = 4.0 / 5.0;
constexpr double kC5 = 8.0 / 9.0;

constexpr double kA21 = 1.0 / 5.0;
constexpr double kA31 = 3.0 / 40.0, kA32 = 9.0 / 40.0;
constexpr double kA41 = 44.0 / 45.0, kA42 = -56.0 / 15.0, kA43 = 32.0 / 9.0;
constexpr double kA51 = 19372.0 / 6561.0, kA52 = -25360.0 / 2187.0,
                 kA53 = 64448.0 / 6561.0, kA54 = -212.0 / 729.0;
constexpr double kA61 = 9017.0 / 3168.0, kA62 = -355.0 / 33.0, kA63 = 46732.0 / 5247.0,
                 kA64 = 49.0 / 176.0, kA65 = -5103.0 / 18656.0;
constexpr double kB1 = 35.0 / 384.0, kB3 = 500.0 / 1113.0, kB4 = 125.0 / 192.0,
                 kB5 = -2187.0 / 6784.0, kB6 = 11.0 / 84.0;

// 5th-order minus embedded 4th-order weights.
constexpr double kE1 = 71.0 / 57600.0, kE3 = -71.0 / 16695.0, kE4 = 71.0 / 1920.0,
                 kE5 = -17253.0 / 339200.0, kE6 = 22.0 / 525.0, kE7 = -1.0 / 40.0;

// Coefficients of the 4th-order continuous extension.
constexpr double kD1 = -12715105075.0 / 11282082432.0;
constexpr double kD3 = 87487479700.0 / 32700410799.0;
constexpr double kD4 = -10690763975.0 / 1880347072.0;
constexpr double kD5 = 701980252875.0 / 199316789632.0;
constexpr double kD6 = -1453857185.0 / 822651844.0;
constexpr double kD7 = 69997945.0 / 29380423.0;

constexpr double kSafety = 0.9;
constexpr double kMinFactor = 0.2;
constexpr double kMaxFactor = 10.0;
constexpr double kBeta = 0.04;  // PI stabilization
constexpr double kAlpha = 0.2 - 0.75 * kBeta;

using Rhs = std::function<void(double, const Vector&, Vector&)>;

void check_finite(const Vector& dx) {
    if (!dx.allFinite()) {
        throw SimulationError(
            "non-finite right-hand-side value (invalid state or parameters)");
    }
}

/// Collects sampled rows and builds the Trajectory.
class Recorder {
public:
    Recorder(const ModelInstance& model, std::size_t reserve_hint) : model_(model) {
        times_.reserve(reserve_hint);
        rows_.reserve(reserve_hint);
    }

    std::size_t add(double t, const Vector& x) {
        times_.push_back(t);
        rows_.push_back(x);
        return rows_.size() - 1;
    }

    void add_impulse_record(std::size_t pre, std::size_t post, double carbs) {
        impulses_.push_back({pre, post, carbs});
    }

    bool empty() const { return rows_.empty(); }
    double last_time() const { return times_.back(); }
    std::size_t last_index() const { return rows_.size() - 1; }

    Trajectory finish() const {
        Trajectory out;
        out.times_min = times_;
        out.states.resize(static_cast<Eigen::Index>(rows_.size()), model_.state_dim);
        out.outputs.resize(rows_.size());
        out.per_kg_outputs.resize(rows_.size());
        for (std::size_t i = 0; i < rows_.size(); ++i) {
            out.states.row(static_cast<Eigen::Index>(i)) = rows_[i];
            out.outputs[i] = model_.output ? model_.output(rows_[i]) : 0.0;
            out.per_kg_outputs[i] = out.outputs[i] / model_.body_weight_kg;
        }
        out.impulses = impulses_;
        return out;
    }

private:
    const ModelInstance& model_;
    std::vector<double> times_;
    std::vector<Vector> rows_;
    std::vector<Trajectory::ImpulseRecord> impulses_;
};

/// Classic starting-step-size estimate for an order-5 method.
double initial_step(const Rhs& f, double t, const Vector& x, const Vector& dx,
                    double rel_tol, double abs_tol, double max_step) {
    const auto scaled_norm = [&](const Vector& v, const Vector& ref) {
        double acc = 0.0;
        for (Eigen::Index i = 0; i < v.size(); ++i) {
            const double sc = abs_tol + rel_tol * std::abs(ref[i]);
            acc += (v[i] / sc) * (v[i] / sc);
        }
        return std::sqrt(acc / static_cast<double>(std::max<Eigen::Index>(v.size(), 1)));
    };

    const double d0 = scaled_norm(x, x);
    const double d1 = scaled_norm(dx, x);
    double h0 = (d0 < 1e-5 || d1 < 1e-5) ? 1e-6 : 0.01 * (d0 / d1);
    h0 = std::min(h0, max_step);

    Vector x1 = x + h0 * dx;
    Vector dx1(x.size());
    f(t + h0, x1, dx1);
    check_finite(dx1);
    const double d2 = scaled_norm(dx1 - dx, x) / h0;

    double h1;
    if (std::max(d1, d2) <= 1e-15) {
        h1 = std::max(1e-6, h0 * 1e-3);
    } else {
        h1 = std::pow(0.01 / std::max(d1, d2), 0.2);
    }
    return std::min({100.0 * h0, h1, max_step});
}

/// Advances the state over [t_a, t_b] with the right-hand side f, serving
/// every pending sample time in (t_a, t_b] through dense output. The state
/// is updated in place to x(t_b).
void integrate_interval(const Rhs& f, double t_a, double t_b, Vector& x,
                        const IntegratorOptions& opts,
                        const std::vector<double>& sample_times, std::size_t& sample_pos,
                        const std::function<void(double, const Vector&)>& emit) {
    const Eigen::Index n = x.size();
    if (!(t_b > t_a)) return;

    Vector k1(n), k2(n), k3(n), k4(n), k5(n), k6(n), k7(n);
    Vector x_stage(n), x_new(n), err_vec(n);
    Vector rcont1(n), rcont2(n), rcont3(n), rcont4(n), rcont5(n);

    double t = t_a;
    f(t, x, k1);
    check_finite(k1);

    double h = initial_step(f, t, x, k1, opts.rel_tol, opts.abs_tol,
                            std::min(opts.max_step_min, t_b - t_a));
    double err_old = 1e-4;

    while (t < t_b) {
        const double h_floor = 16.0 * std::numeric_limits<double>::epsilon() *
                               std::max(std::abs(t), 1.0);
        if (h < h_floor) {
            throw SimulationError("step-size underflow at t = " + std::to_string(t) +
                                  " (problem too stiff for the tolerance)");
        }
        bool last_step = false;
        if (t + h >= t_b) {
            h = t_b - t;
            last_step = true;
        }

        x_stage = x + h * (kA21 * k1);
        f(t + kC2 * h, x_stage, k2);
        x_stage = x + h * (kA31 * k1 + kA32 * k2);
        f(t + kC3 * h, x_stage, k3);
        x_stage = x + h * (kA41 * k1 + kA42 * k2 + kA43 * k3);
        f(t + kC4 * h, x_stage, k4);
        x_stage = x + h * (kA51 * k1 + kA52 * k2 + kA53 * k3 + kA54 * k4);
        f(t + kC5 * h, x_stage, k5);
        x_stage = x + h * (kA61 * k1 + kA62 * k2 + kA63 * k3 + kA64 * k4 + kA65 * k5);
        f(t + h, x_stage, k6);
        x_new = x + h * (kB1 * k1 + kB3 * k3 + kB4 * k4 + kB5 * k5 + kB6 * k6);
        f(t + h, x_new, k7);
        check_finite(k7);

        err_vec = h * (kE1 * k1 + kE3 * k3 + kE4 * k4 + kE5 * k5 + kE6 * k6 + kE7 * k7);
        double err_acc = 0.0;
        for (Eigen::Index i = 0; i < n; ++i) {
            const double sc = opts.abs_tol +
                              opts.rel_tol * std::max(std::abs(x[i]), std::abs(x_new[i]));
            err_acc += (err_vec[i] / sc) * (err_vec[i] / sc);
        }
        const double err =
            std::sqrt(err_acc / static_cast<double>(std::max<Eigen::Index>(n, 1)));

        if (err <= 1.0) {
            const double t_next = last_step ? t_b : t + h;
            const double serve_bound =
                last_step ? t_b
                          : t_next + 1e-14 * std::max(1.0, std::abs(t_next));
            if (sample_pos < sample_times.size() &&
                sample_times[sample_pos] <= serve_bound) {
                rcont1 = x;
                rcont2 = x_new - x;
                rcont3 = h * k1 - rcont2;
                rcont4 = rcont2 - h * k7 - rcont3;
                rcont5 = h * (kD1 * k1 + kD3 * k3 + kD4 * k4 + kD5 * k5 + kD6 * k6 +
                              kD7 * k7);
                while (sample_pos < sample_times.size() &&
                       sample_times[sample_pos] <= serve_bound) {
                    const double ts = std::min(sample_times[sample_pos], t_next);
                    const double theta = std::clamp((ts - t) / h, 0.0, 1.0);
                    const double theta1 = 1.0 - theta;
                    x_stage =
                        rcont1 +
                        theta * (rcont2 +
                                 theta1 * (rcont3 + theta * (rcont4 + theta1 * rcont5)));
                    emit(ts, x_stage);
                    ++sample_pos;
                }
            }

            t = t_next;
            x.swap(x_new);
            k1.swap(k7);  // first-same-as-last

            const double err_clip = std::max(err, 1e-32);
            const double factor =
                kSafety * std::pow(err_old, kBeta) / std::pow(err_clip, kAlpha);
            h *= std::clamp(factor, kMinFactor, kMaxFactor);
            h = std::min(h, opts.max_step_min);
            err_old = err_clip;
        } else {
            h *= std::clamp(kSafety * std::pow(err, -0.2), kMinFactor, 1.0);
        }
    }
}

std::vector<double> output_grid(double t_begin, double t_end, double interval) {
    std::vector<double> grid;
    const double span = t_end - t_begin;
    const auto count = static_cast<std::size_t>(std::floor(span / interval + 1e-9));
    grid.reserve(count + 2);
    for (std::size_t k = 0; k <= count; ++k) {
        grid.push_back(t_begin + static_cast<double>(k) * interval);
    }
    if (grid.back() < t_end - 1e-9 * std::max(1.0, std::abs(t_end))) {
        grid.push_back(t_end);
    } else {
        grid.back() = t_end;
    }
    return grid;
}

MealContext meal_update(const ModelInstance& model, const MealContext& ctx, double t,
                        const Vector& x_pre, double carbs) {
    if (model.on_meal) return model.on_meal(ctx, t, x_pre, carbs);
    return MealContext{t, carbs};
}

void check_model_and_state(const ModelInstance& model, const Vector& x0) {
    if (!model.rhs) throw std::invalid_argument("model has no right-hand side");
    if (x0.size() != model.state_dim) {
        throw std::invalid_argument("initial state has dimension " +
                                    std::to_string(x0.size()) + ", model expects " +
                                    std::to_string(model.state_dim));
    }
}

}  // namespace

PiecewiseConstantInput PiecewiseConstantInput::from_schedule(const MealSchedule& schedule) {
    schedule.validate();
    if (!schedule.all_steps()) {
        throw std::invalid_argument("schedule contains instantaneous meals");
    }
    PiecewiseConstantInput input;
    for (const MealEvent& e : schedule.events) {
        const double t0 = e.time_min;
        const double t1 = e.time_min + e.duration_min;
        const double rate = e.carbs_mg / e.duration_min;
        if (!input.breaks.empty() && t0 > input.breaks.back()) {
            input.values.push_back(0.0);  // gap between meals
            input.breaks.push_back(t0);
        } else if (input.breaks.empty()) {
            input.breaks.push_back(t0);
        }
        input.values.push_back(rate);
        input.breaks.push_back(t1);
    }
    input.validate();
    return input;
}

double PiecewiseConstantInput::value_at(double t) const {
    if (breaks.empty()) return 0.0;
    if (t < breaks.front() || t >= breaks.back()) return 0.0;
    const auto it = std::upper_bound(breaks.begin(), breaks.end(), t);
    const auto idx = static_cast<std::size_t>(it - breaks.begin()) - 1;
    return values[idx];
}

void PiecewiseConstantInput::validate() const {
    if (breaks.empty() && values.empty()) return;
    if (breaks.size() != values.size() + 1) {
        throw std::invalid_argument(
            "piecewise input: need exactly one more breakpoint than values");
    }
    for (std::size_t i = 0; i + 1 < breaks.size(); ++i) {
        if (!(breaks[i] < breaks[i + 1])) {
            throw std::invalid_argument("piecewise input: breakpoints must be increasing");
        }
    }
}

Trajectory integrate(const ModelInstance& model, const Vector& x0,
                     const PiecewiseConstantInput& input, double t_begin, double t_end,
                     const IntegratorOptions& opts) {
    opts.validate();
    input.validate();
    check_model_and_state(model, x0);
    if (!(t_begin < t_end)) throw std::invalid_argument("integrate: need t_begin < t_end");

    const MealContext ctx{t_begin, 0.0};

    // Interval edges: span ends plus every breakpoint strictly inside.
    std::vector<double> edges{t_begin};
    for (double b : input.breaks) {
        if (b > t_begin && b < t_end) edges.push_back(b);
    }
    edges.push_back(t_end);
    std::sort(edges.begin(), edges.end());

    const std::vector<double> samples =
        output_grid(t_begin, t_end, opts.output_interval_min);
    Recorder recorder(model, samples.size());
    recorder.add(t_begin, x0);
    std::size_t sample_pos = 1;  // t_begin already recorded

    Vector x = x0;
    for (std::size_t seg = 0; seg + 1 < edges.size(); ++seg) {
        const double a = edges[seg];
        const double b = edges[seg + 1];
        const double d = input.value_at(0.5 * (a + b));
        const Rhs f = [&](double t, const Vector& y, Vector& dy) {
            model.rhs(t, y, d, ctx, dy);
        };
        integrate_interval(f, a, b, x, opts, samples, sample_pos,
                           [&](double t, const Vector& y) { recorder.add(t, y); });
    }
    return recorder.finish();
}

Trajectory simulate_step_meals(const ModelInstance& model, const Vector& x0,
                               const MealSchedule& schedule, double horizon_min,
                               const IntegratorOptions& opts) {
    opts.validate();
    schedule.validate();
    check_model_and_state(model, x0);
    if (!schedule.all_steps()) {
        throw std::invalid_argument("simulate_step_meals: all events need duration > 0");
    }
    if (!(horizon_min > 0.0)) throw std::invalid_argument("horizon must be positive");

    // Interval edges: 0, horizon, and every event start/end strictly inside.
    std::vector<double> edges{0.0, horizon_min};
    for (const MealEvent& e : schedule.events) {
        if (e.time_min < horizon_min) {
            if (e.time_min > 0.0) edges.push_back(e.time_min);
            const double t1 = e.time_min + e.duration_min;
            if (t1 < horizon_min) edges.push_back(t1);
        }
    }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());

    const PiecewiseConstantInput input = PiecewiseConstantInput::from_schedule(schedule);
    const std::vector<double> samples =
        output_grid(0.0, horizon_min, opts.output_interval_min);
    Recorder recorder(model, samples.size());
    recorder.add(0.0, x0);
    std::size_t sample_pos = 1;

    MealContext ctx{0.0, 0.0};
    std::size_t next_event = 0;
    Vector x = x0;

    const auto apply_meals_starting_at = [&](double t) {
        while (next_event < schedule.events.size() &&
               schedule.events[next_event].time_min == t) {
            ctx = meal_update(model, ctx, t, x, schedule.events[next_event].carbs_mg);
            ++next_event;
        }
    };

    apply_meals_starting_at(0.0);
    for (std::size_t seg = 0; seg + 1 < edges.size(); ++seg) {
        const double a = edges[seg];
        const double b = edges[seg + 1];
        const double d = input.value_at(0.5 * (a + b));
        const Rhs f = [&](double t, const Vector& y, Vector& dy) {
            model.rhs(t, y, d, ctx, dy);
        };
        integrate_interval(f, a, b, x, opts, samples, sample_pos,
                           [&](double t, const Vector& y) { recorder.add(t, y); });
        apply_meals_starting_at(b);
    }
    return recorder.finish();
}

Trajectory simulate_impulse_meals(const ModelInstance& model, const Vector& x0,
                                  const MealSchedule& schedule, double horizon_min,
                                  const IntegratorOptions& opts) {
    opts.validate();
    schedule.validate();
    check_model_and_state(model, x0);
    if (!schedule.all_impulses()) {
        throw std::invalid_argument(
            "simulate_impulse_meals: all events need duration == 0");
    }
    if (!model.injection) {
        throw std::invalid_argument("model '" + model.name +
                                    "' exposes no meal-injection map f_d; "
                                    "instantaneous meals are not available");
    }
    if (!(horizon_min > 0.0)) throw std::invalid_argument("horizon must be positive");

    const std::vector<double> samples =
        output_grid(0.0, horizon_min, opts.output_interval_min);
    Recorder recorder(model, samples.size() + 2 * schedule.events.size());

    MealContext ctx{0.0, 0.0};
    Vector x = x0;
    double t = 0.0;
    recorder.add(0.0, x);
    std::size_t sample_pos = 1;

    const auto integrate_to = [&](double t_stop) {
        const Rhs f = [&](double tt, const Vector& y, Vector& dy) {
            model.rhs(tt, y, 0.0, ctx, dy);
        };
        integrate_interval(f, t, t_stop, x, opts, samples, sample_pos,
                           [&](double ts, const Vector& y) { recorder.add(ts, y); });
        t = t_stop;
    };

    for (const MealEvent& e : schedule.events) {
        if (e.time_min > horizon_min) break;  // meals at the horizon are still applied
        if (e.time_min > t) integrate_to(e.time_min);

        // State immediately before the jump; reuse a sample that landed here.
        std::size_t pre;
        if (!recorder.empty() && recorder.last_time() == e.time_min) {
            pre = recorder.last_index();
        } else {
            pre = recorder.add(e.time_min, x);
        }
        while (sample_pos < samples.size() && samples[sample_pos] <= e.time_min) {
            ++sample_pos;
        }

        const Vector x_pre = x;
        x += model.injection(x_pre) * e.carbs_mg;
        ctx = meal_update(model, ctx, e.time_min, x_pre, e.carbs_mg);
        const std::size_t post = recorder.add(e.time_min, x);
        recorder.add_impulse_record(pre, post, e.carbs_mg);
    }
    if (t < horizon_min) integrate_to(horizon_min);
    return recorder.finish();
}

Vector steady_state(const ModelInstance& model, double tol) {
    if (!model.rhs) throw std::invalid_argument("model has no right-hand side");
    const Vector zero = Vector::Zero(model.state_dim);
    Vector dx(model.state_dim);
    model.rhs(0.0, zero, 0.0, MealContext{}, dx);
    if (dx.lpNorm<Eigen::Infinity>() > tol) {
        throw SimulationError("model '" + model.name +
                              "' does not have the zero vector as a steady state");
    }
    return zero;
}

}  // namespace mealsim
