#include <cmath>
#include <random>

#include "doctest.h"
#include "pathsens/analysis.hpp"
#include "pathsens/oracle.hpp"

using namespace pathsens;

TEST_CASE("closed form worked examples") {
    // theta = sigma^2/2 and W = 0 leave the exponent at zero
    const double sigma = 0.2;
    const double theta = 0.5 * sigma * sigma;
    const std::vector<double> times{0.0, 0.5, 1.0};
    const std::vector<double> w{0.0, 0.0, 0.0};
    const ClosedFormPath flat = gbm_closed_form(theta, sigma, 3.0, w, times);
    for (double s : flat.s) CHECK(s == 3.0);
    CHECK(flat.ds[0] == 0.0);

    const std::vector<double> t1{1.0};
    const std::vector<double> w1{0.5};
    const ClosedFormPath point = gbm_closed_form(0.05, 0.2, 1.0, w1, t1);
    CHECK(point.s[0] == doctest::Approx(std::exp(0.13)).epsilon(1e-14));
    CHECK(point.ds[0] == point.s[0]);  // ds = t * s at t = 1
}

TEST_CASE("closed form satisfies ds = t * s pointwise") {
    const IncrementGrid grid = sample_increments({77, 0}, 128, 1.0 / 128.0);
    const std::vector<double> w_inner = cumulative(grid);
    std::vector<double> w{0.0};
    w.insert(w.end(), w_inner.begin(), w_inner.end());
    std::vector<double> times(w.size());
    for (std::size_t n = 0; n < times.size(); ++n) times[n] = double(n) * grid.h;
    const ClosedFormPath path = gbm_closed_form(0.05, 0.2, 1.0, w, times);
    for (std::size_t n = 0; n < times.size(); ++n) CHECK(path.ds[n] == times[n] * path.s[n]);
}

TEST_CASE("closed form argument validation") {
    const std::vector<double> w{0.0, 0.1};
    const std::vector<double> times{0.0};
    CHECK_THROWS_AS(gbm_closed_form(0.05, 0.2, 1.0, w, times), std::invalid_argument);
    CHECK_THROWS_AS(gbm_closed_form(0.05, 0.2, 0.0, times, times), std::invalid_argument);
}

TEST_CASE("fd_tangent on the additive model is the time grid itself") {
    const auto& additive = get_model("additive");
    SimConfig cfg;
    cfg.theta = 0.25;
    cfg.n_steps = 64;
    const IncrementGrid grid = sample_increments({13, 1}, cfg.n_steps, cfg.step_size());

    // dyadic bumps keep every addend exact, the result is bitwise t_n
    const double eps_a = std::ldexp(1.0, -10);
    const double eps_b = std::ldexp(1.0, -12);
    const std::vector<double> fd_a = fd_tangent(additive, cfg, grid, eps_a);
    const std::vector<double> fd_b = fd_tangent(additive, cfg, grid, eps_b);
    for (std::size_t n = 0; n < fd_a.size(); ++n) {
        CHECK(fd_a[n] == double(n) * grid.h);
        CHECK(fd_b[n] == fd_a[n]);
    }
    const std::vector<double> fd2 = fd_second(additive, cfg, grid, eps_b);
    for (double v : fd2) CHECK(v == 0.0);

    // a generic bump is still correct to rounding
    const std::vector<double> fd_c = fd_tangent(additive, cfg, grid, 1e-4);
    for (std::size_t n = 0; n < fd_c.size(); ++n)
        CHECK(fd_c[n] == doctest::Approx(double(n) * grid.h).epsilon(1e-9));
}

namespace {

IncrementGrid zero_grid(std::size_t n, double h) {
    IncrementGrid grid;
    grid.h = h;
    grid.increments.assign(n, 0.0);
    return grid;
}

double max_abs_diff(std::span<const double> a, std::span<const double> b) {
    double worst = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) worst = std::max(worst, std::abs(a[i] - b[i]));
    return worst;
}

}  // namespace

TEST_CASE("finite differences of the deterministic GBM recursion") {
    const auto& gbm = get_model("gbm");
    SimConfig cfg;
    cfg.theta = 0.1;
    cfg.n_steps = 32;
    const double h = cfg.step_size();
    const IncrementGrid grid = zero_grid(cfg.n_steps, h);

    std::vector<double> exact_first(cfg.n_steps + 1);
    std::vector<double> exact_second(cfg.n_steps + 1);
    for (std::size_t n = 0; n <= cfg.n_steps; ++n) {
        const double nn = double(n);
        exact_first[n] = nn * h * std::pow(1.0 + cfg.theta * h, nn - 1.0);
        exact_second[n] = nn * (nn - 1.0) * h * h * std::pow(1.0 + cfg.theta * h, nn - 2.0);
    }

    const double err1_big = max_abs_diff(fd_tangent(gbm, cfg, grid, 1e-3), exact_first);
    const double err1_small = max_abs_diff(fd_tangent(gbm, cfg, grid, 1e-4), exact_first);
    CHECK(err1_big / err1_small == doctest::Approx(100.0).epsilon(0.5));

    const double err2 = max_abs_diff(fd_second(gbm, cfg, grid, 1e-3), exact_second);
    CHECK(err2 <= 1e-5);
}

TEST_CASE("Richardson ratio of tangent finite differences on random paths") {
    const double u = std::numeric_limits<double>::epsilon();
    for (const char* id : {"trig", "gbm"}) {
        const auto& model = get_model(id);
        SimConfig cfg;
        cfg.theta = std::string(id) == "gbm" ? 0.05 : 0.1;
        cfg.n_steps = 64;
        cfg.order = 2;
        const IncrementGrid grid = sample_increments({71, 2}, cfg.n_steps, cfg.step_size());
        const PathResult reference = simulate_path(model, cfg, grid);

        std::vector<double> ds(reference.grid.size());
        std::vector<double> dds(reference.grid.size());
        for (std::size_t n = 0; n < ds.size(); ++n) {
            ds[n] = reference.grid[n].ds;
            dds[n] = reference.grid[n].dds;
        }

        const double err1_big = max_abs_diff(fd_tangent(model, cfg, grid, 1e-3), ds);
        const double err1_small = max_abs_diff(fd_tangent(model, cfg, grid, 1e-4), ds);
        const double noise1 = 8.0 * u * std::max(1.0, reference.sup(Quantity::State)) / 2e-4;
        REQUIRE(err1_small > 10.0 * noise1);  // the guard engages at this scale
        const double ratio1 = err1_big / err1_small;
        CHECK(ratio1 >= 50.0);
        CHECK(ratio1 <= 200.0);

        // the second difference at eps = 1e-3 is still truncation-dominated
        const double err2 = max_abs_diff(fd_second(model, cfg, grid, 1e-3), dds);
        CHECK(err2 <= 1e-4 * std::max(1.0, reference.sup(Quantity::State)));
    }
}

TEST_CASE("default bump scales with theta") {
    CHECK(default_bump(0.05) == 1e-4);
    CHECK(default_bump(-3.0) == 3.0 * 1e-4);
}

TEST_CASE("EM error against the closed form shrinks at the strong rate") {
    const auto& gbm = get_model("gbm");
    SimConfig base;
    base.theta = 0.05;
    base.n_steps = 16;
    base.order = 0;
    std::vector<LevelRecord> records;
    for (int level = 3; level <= 6; ++level)
        records.push_back(
            estimate_exact_gbm_error(gbm, base, 2, Quantity::State, 2000, level, 4242));
    const RateFit fit = fit_rate(records);
    // slope of E[sup^2] is twice the RMS slope 1/2
    CHECK(fit.slope >= 0.6);
    CHECK(fit.slope <= 1.4);
}
