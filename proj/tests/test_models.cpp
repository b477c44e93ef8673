#include <catch2/catch_amalgamated.hpp>

#include "mealsim/engine.hpp"
#include "mealsim/models/alskar.hpp"
#include "mealsim/models/dalla_man.hpp"
#include "mealsim/models/hovorka.hpp"
#include "mealsim/models/simo.hpp"
#include "mealsim/series.hpp"

#include <cmath>

using namespace mealsim;

TEST_CASE("hovorka_realization: default matrices") {
    const LinearRealization sys = hovorka_realization({});
    CHECK(sys.A(0, 0) == -0.025);
    CHECK(sys.A(0, 1) == 0.0);
    CHECK(sys.A(1, 0) == 0.025);
    CHECK(sys.A(1, 1) == -0.025);
    CHECK(sys.B(0, 0) == 0.8);
    CHECK(sys.B(1, 0) == 0.0);
    CHECK(sys.C(0) == 0.0);
    CHECK(sys.C(1) == 1.0 / 40.0);

    // Lower triangular: both eigenvalues are -1/tau_D.
    const Eigen::VectorXcd eigs = sys.A.eigenvalues();
    CHECK_THAT(eigs(0).real(), Catch::Matchers::WithinRel(-0.025, 1e-12));
    CHECK_THAT(eigs(1).real(), Catch::Matchers::WithinRel(-0.025, 1e-12));
}

TEST_CASE("hovorka impulse response matches the closed form") {
    // R_A(t) = f A_G D t e^{-t/tau} / tau^2, peaking at t = tau.
    const HovorkaParams p;
    const ModelInstance model = hovorka_model(p);
    const double carbs = 90000.0;

    MealSchedule schedule;
    schedule.events.push_back({0.0, carbs, 0.0});
    IntegratorOptions opts;
    opts.output_interval_min = 0.5;
    const Trajectory traj =
        simulate_impulse_meals(model, Vector::Zero(2), schedule, 400.0, opts);

    double peak_exact = 0.0;
    double worst = 0.0;
    for (std::size_t i = 0; i < traj.size(); ++i) {
        const double t = traj.times_min[i];
        const double exact =
            p.f * p.A_G * carbs * t * std::exp(-t / p.tau_D) / (p.tau_D * p.tau_D);
        if (traj.times_min[i] == 0.0) continue;  // pre/post rows share t = 0
        worst = std::max(worst, std::abs(traj.outputs[i] - exact));
        peak_exact = std::max(peak_exact, exact);
    }
    CHECK(worst <= 1e-6 * peak_exact);

    const SeriesStats stats = series_stats(traj.times_min, traj.outputs);
    CHECK_THAT(stats.peak_time, Catch::Matchers::WithinAbs(p.tau_D, 0.5 + 1e-12));
}

TEST_CASE("dalla_man_kempt is independent of the meal size along rays") {
    const DallaManParams p;
    for (double q = 0.0; q <= 2.0; q += 0.1) {
        const double small = dalla_man_kempt(q * 1e4, 1e4, p);
        const double large = dalla_man_kempt(q * 1e5, 1e5, p);
        CHECK(std::abs(small - large) <= 1e-12);
    }
}

TEST_CASE("dalla_man_kempt saturates at k_max for a full stomach") {
    const DallaManParams p;
    const double meal = 90000.0;
    CHECK_THAT(dalla_man_kempt(1e6 * meal, meal, p),
               Catch::Matchers::WithinRel(p.k_max, 1e-12));
}

TEST_CASE("dalla_man_kempt at an empty stomach matches the tanh expression") {
    const DallaManParams p;
    const double meal = 90000.0;
    const double expected =
        p.k_min + 0.5 * (p.k_max - p.k_min) *
                      (std::tanh(-2.5 * p.b / (1.0 - p.b)) - std::tanh(-2.5) + 2.0);
    CHECK_THAT(dalla_man_kempt(0.0, meal, p), Catch::Matchers::WithinRel(expected, 1e-14));
}

TEST_CASE("dalla_man_kempt stays inside its tanh bounds") {
    const DallaManParams p;
    const double meal = 90000.0;
    for (double q = 0.0; q <= 10.0; q += 0.01) {
        const double k = dalla_man_kempt(q * meal, meal, p);
        CHECK(k > p.k_min);
        CHECK(k < 2.0 * p.k_max - p.k_min);
        CHECK(k <= p.k_max * (1.0 + 1e-9));  // holds for b > c
    }
}

TEST_CASE("dalla_man_kempt rejects nonpositive meal sizes") {
    CHECK_THROWS_AS(dalla_man_kempt(0.0, 0.0, DallaManParams{}), std::invalid_argument);
    CHECK_THROWS_AS(dalla_man_kempt(0.0, -5.0, DallaManParams{}), std::invalid_argument);
}

TEST_CASE("dalla_man_rhs: zero state and output scale") {
    DallaManParams p;
    p.D_current = 90000.0;
    const Vector dx = dalla_man_rhs(Vector::Zero(3), 0.0, p);
    CHECK(dx.lpNorm<Eigen::Infinity>() == 0.0);
    CHECK(dalla_man_output(Vector::Zero(3), p) == 0.0);

    Vector state(3);
    state << 0.0, 0.0, 1000.0;
    CHECK_THAT(dalla_man_output(state, p), Catch::Matchers::WithinRel(20.7, 1e-12));
}

TEST_CASE("dalla_man_rhs telescopes: total mass changes by d minus absorption") {
    DallaManParams p;
    p.D_current = 90000.0;
    Vector state(3);
    state << 40000.0, 20000.0, 10000.0;
    const double d = 123.0;
    const Vector dx = dalla_man_rhs(state, d, p);
    CHECK_THAT(dx.sum(), Catch::Matchers::WithinAbs(d - p.k_abs * state[2], 1e-9));
}

TEST_CASE("simo_realization: printed matrix entries and column sums") {
    const SimoParams p;
    const LinearRealization sys = simo_realization(p);
    CHECK(sys.A(1, 0) == 0.026);
    CHECK_THAT(sys.A(1, 1), Catch::Matchers::WithinRel(-0.069, 1e-12));

    // Absorption is the only leak: columns drain by k_gj and k_gl alone.
    const RowVector column_sums = RowVector::Ones(4) * sys.A;
    CHECK_THAT(column_sums(0), Catch::Matchers::WithinAbs(0.0, 1e-15));
    CHECK_THAT(column_sums(1), Catch::Matchers::WithinAbs(-p.k_gj, 1e-15));
    CHECK_THAT(column_sums(2), Catch::Matchers::WithinAbs(0.0, 1e-15));
    CHECK_THAT(column_sums(3), Catch::Matchers::WithinAbs(-p.k_gl, 1e-15));

    Vector e2 = Vector::Zero(4);
    e2[1] = 1.0;
    CHECK(sys.C.dot(e2) == p.f * p.k_gj);
}

TEST_CASE("alskar pylorus rate: nominal value, Hill midpoint, saturation") {
    const AlskarParams p;
    CHECK(alskar_k_sd(0.0, p) == p.k_w);
    CHECK_THAT(alskar_k_sd(p.IG_D50, p), Catch::Matchers::WithinRel(0.5 * p.k_w, 1e-12));
    CHECK(alskar_k_sd(1e9, p) < 1e-12);
    // Large Hill coefficients must not overflow.
    AlskarParams steep = p;
    steep.gamma = 200.0;
    CHECK(std::isfinite(alskar_k_sd(1e8, steep)));
    CHECK(std::isfinite(alskar_k_sd(1e-8, steep)));
}

TEST_CASE("alskar absorption saturates at the segment capacity") {
    const AlskarParams p;
    Vector state(4);
    state << 0.0, 0.0, 1e9, 0.0;
    const double out = alskar_output(state, p);
    CHECK_THAT(out, Catch::Matchers::WithinRel(p.R_J_max, 1e-5));
}

TEST_CASE("alskar_rhs: flows balance and the lag gates the stomach") {
    const AlskarParams p;
    Vector state(4);
    state << 50000.0, 3000.0, 2000.0, 1000.0;

    // Long after the meal the lag is open (tau ~ 1).
    const Vector late = alskar_rhs(state, 0.0, 1000.0, p);
    CHECK_THAT(late.sum(), Catch::Matchers::WithinAbs(-alskar_output(state, p) / p.F_P, 1e-9));

    // Immediately after the meal the lag is nearly closed, so the stomach
    // drains much slower.
    const Vector early = alskar_rhs(state, 0.0, 0.0, p);
    CHECK(std::abs(early[0]) < std::abs(late[0]) * 1e-10);
}

TEST_CASE("every model has the zero vector as its steady state") {
    CHECK(steady_state(hovorka_model()).lpNorm<Eigen::Infinity>() == 0.0);
    CHECK(steady_state(dalla_man_model()).size() == 3);
    CHECK(steady_state(simo_model()).size() == 4);
    CHECK(steady_state(alskar_model()).size() == 4);
}

TEST_CASE("all four pure-ODE models keep states nonnegative to the noise floor") {
    // States above the error-control floor stay positive; decayed states may
    // undershoot zero by a small multiple of abs_tol (accumulated local
    // error), which is what the bound below checks.
    const std::vector<ModelInstance> models = {hovorka_model(), dalla_man_model(),
                                               simo_model(), alskar_model()};
    IntegratorOptions opts;
    opts.output_interval_min = 2.0;
    for (const ModelInstance& model : models) {
        MealSchedule impulse;
        impulse.events.push_back({0.0, 90000.0, 0.0});
        const Trajectory a = simulate_impulse_meals(model, Vector::Zero(model.state_dim),
                                                    impulse, 720.0, opts);
        CHECK(a.states.minCoeff() >= -4.0 * opts.abs_tol);

        MealSchedule step;
        step.events.push_back({0.0, 90000.0, 30.0});
        step.events.push_back({300.0, 45000.0, 15.0});
        const Trajectory b = simulate_step_meals(model, Vector::Zero(model.state_dim),
                                                 step, 720.0, opts);
        CHECK(b.states.minCoeff() >= -4.0 * opts.abs_tol);
    }
}

TEST_CASE("single-impulse mass accounting: integral of R_A matches the fractions") {
    const double carbs = 90000.0;
    MealSchedule schedule;
    schedule.events.push_back({0.0, carbs, 0.0});
    IntegratorOptions opts;
    opts.output_interval_min = 1.0;

    const auto absorbed = [&](const ModelInstance& model) {
        const Trajectory traj = simulate_impulse_meals(
            model, Vector::Zero(model.state_dim), schedule, 1440.0, opts);
        return trapezoid(traj.times_min, traj.outputs);
    };

    const HovorkaParams hp;
    CHECK_THAT(absorbed(hovorka_model(hp)),
               Catch::Matchers::WithinRel(hp.f * hp.A_G * carbs, 5e-3));

    const DallaManParams dp;
    CHECK_THAT(absorbed(dalla_man_model(dp)),
               Catch::Matchers::WithinRel(dp.f * carbs, 5e-3));

    const SimoParams sp;
    CHECK_THAT(absorbed(simo_model(sp)), Catch::Matchers::WithinRel(sp.f * carbs, 5e-3));

    const AlskarParams ap;
    CHECK_THAT(absorbed(alskar_model(ap)), Catch::Matchers::WithinRel(ap.F_P * carbs, 5e-3));
}
