#include "pathsens/analysis.hpp"

#include <cmath>
#include <stdexcept>

#include "pathsens/errors.hpp"
#include "pathsens/oracle.hpp"
#include "pathsens/parallel.hpp"
#include "pathsens/regression.hpp"

namespace pathsens {

std::string_view payoff_name(PayoffKind kind) {
    switch (kind) {
        case PayoffKind::State: return "state";
        case PayoffKind::Tangent: return "tangent";
        default: return "call-tangent";
    }
}

namespace {

SimConfig level_config(const SimConfig& base, int level, int order) {
    if (level < 0) throw std::invalid_argument("level must be >= 0");
    if (base.n_steps % 2 != 0) throw std::invalid_argument("base step count must be even");
    SimConfig cfg = base;
    cfg.n_steps = base.n_steps << level;
    cfg.order = order;
    return cfg;
}

int max_required_order(std::span<const Quantity> quantities) {
    int order = 0;
    for (Quantity q : quantities) order = std::max(order, required_order(q));
    return order;
}

/// Runs body(i) -> per-path value over n paths, wrapping divergence errors
/// with the offending path index.
template <typename PerPath>
void fill_slots(std::size_t n_paths, int workers, PerPath&& per_path) {
    run_paths(n_paths, workers, [&](std::size_t i) {
        try {
            per_path(i);
        } catch (const DivergenceError& e) {
            throw DivergenceError(e.step(), static_cast<std::uint64_t>(i));
        }
    });
}

}  // namespace

namespace detail {

std::array<double, 3> coupled_sup_diffs(const ModelCoefficients& model, const SimConfig& fine_cfg,
                                        const IncrementGrid& fine) {
    const std::size_t coarse_steps = fine_cfg.n_steps / 2;
    const double h_fine = fine.h;
    const double h_coarse = 2.0 * fine.h;
    const int order = fine_cfg.order;
    PathState state_f{fine_cfg.s0, fine_cfg.ds0, fine_cfg.dds0};
    PathState state_c = state_f;
    std::array<double, 3> sup{};
    for (std::size_t m = 0; m < coarse_steps; ++m) {
        const double d0 = fine.increments[2 * m];
        const double d1 = fine.increments[2 * m + 1];
        state_f = em_step(model, fine_cfg.theta, state_f, h_fine, d0, order, 2 * m);
        state_f = em_step(model, fine_cfg.theta, state_f, h_fine, d1, order, 2 * m + 1);
        state_c = em_step(model, fine_cfg.theta, state_c, h_coarse, d0 + d1, order, m);
        sup[0] = std::max(sup[0], std::abs(state_f.s - state_c.s));
        sup[1] = std::max(sup[1], std::abs(state_f.ds - state_c.ds));
        sup[2] = std::max(sup[2], std::abs(state_f.dds - state_c.dds));
    }
    return sup;
}

}  // namespace detail

std::vector<LevelRecord> estimate_strong_error_table(const ModelCoefficients& model,
                                                     const SimConfig& base,
                                                     std::span<const Quantity> quantities,
                                                     std::span<const int> moment_orders, int level,
                                                     const EstimatorConfig& est) {
    if (quantities.empty() || moment_orders.empty())
        throw std::invalid_argument("estimate_strong_error_table: empty request");
    for (int p : moment_orders)
        if (p < 2) throw std::invalid_argument("estimate_strong_error_table: p must be >= 2");
    if (est.n_paths < 2)
        throw std::invalid_argument("estimate_strong_error_table: need at least two paths");

    const SimConfig cfg = level_config(base, level, max_required_order(quantities));
    const double h = cfg.step_size();

    // One slot array of sup differences per quantity.
    std::vector<std::vector<double>> sups(quantities.size(),
                                          std::vector<double>(est.n_paths, 0.0));
    const std::uint64_t block = detail::kBlockStrongError + static_cast<std::uint64_t>(level);
    fill_slots(est.n_paths, est.workers, [&](std::size_t i) {
        const SeedSpec seed{est.base_seed, substream_index(block, i)};
        const IncrementGrid fine = sample_increments(seed, cfg.n_steps, h);
        const std::array<double, 3> sup = detail::coupled_sup_diffs(model, cfg, fine);
        for (std::size_t qi = 0; qi < quantities.size(); ++qi)
            sups[qi][i] = sup[static_cast<int>(quantities[qi])];
    });

    std::vector<LevelRecord> records;
    records.reserve(quantities.size() * moment_orders.size());
    std::vector<double> powered(est.n_paths);
    for (std::size_t qi = 0; qi < quantities.size(); ++qi) {
        for (int p : moment_orders) {
            for (std::size_t i = 0; i < est.n_paths; ++i)
                powered[i] = std::pow(sups[qi][i], static_cast<double>(p));
            const MeanStdErr ms = mean_and_std_error(powered);
            records.push_back({level, h, p, quantities[qi], ms.mean, ms.std_error, est.n_paths});
        }
    }
    return records;
}

LevelRecord estimate_strong_error(const ModelCoefficients& model, const SimConfig& base, int p,
                                  Quantity quantity, std::size_t n_paths, int level,
                                  std::uint64_t base_seed, int workers) {
    const Quantity quantities[] = {quantity};
    const int ps[] = {p};
    return estimate_strong_error_table(model, base, quantities, ps, level,
                                       {base_seed, n_paths, workers})[0];
}

LevelRecord estimate_exact_gbm_error(const ModelCoefficients& gbm, const SimConfig& base, int p,
                                     Quantity quantity, std::size_t n_paths, int level,
                                     std::uint64_t base_seed, int workers) {
    if (quantity == Quantity::Tangent2)
        throw std::invalid_argument("estimate_exact_gbm_error: no closed form for tangent2");
    if (p < 2) throw std::invalid_argument("estimate_exact_gbm_error: p must be >= 2");
    if (n_paths < 2) throw std::invalid_argument("estimate_exact_gbm_error: need >= 2 paths");
    const double sigma = gbm.constant("sigma");
    const SimConfig cfg = level_config(base, level, required_order(quantity));
    const double h = cfg.step_size();

    std::vector<double> times(cfg.n_steps + 1);
    for (std::size_t n = 0; n < times.size(); ++n) times[n] = static_cast<double>(n) * h;

    std::vector<double> sups(n_paths, 0.0);
    const std::uint64_t block = detail::kBlockExactError + static_cast<std::uint64_t>(level);
    fill_slots(n_paths, workers, [&](std::size_t i) {
        const SeedSpec seed{base_seed, substream_index(block, i)};
        const IncrementGrid grid = sample_increments(seed, cfg.n_steps, h);
        const PathResult em = simulate_path(gbm, cfg, grid);
        const std::vector<double> w_inner = cumulative(grid);
        std::vector<double> w(cfg.n_steps + 1, 0.0);
        for (std::size_t n = 0; n < w_inner.size(); ++n) w[n + 1] = w_inner[n];
        const ClosedFormPath exact = gbm_closed_form(cfg.theta, sigma, cfg.s0, w, times);
        double sup = 0.0;
        for (std::size_t n = 0; n < em.grid.size(); ++n) {
            const double approx = quantity == Quantity::State ? em.grid[n].s : em.grid[n].ds;
            const double truth = quantity == Quantity::State ? exact.s[n] : exact.ds[n];
            sup = std::max(sup, std::abs(approx - truth));
        }
        sups[i] = std::pow(sup, static_cast<double>(p));
    });

    const MeanStdErr ms = mean_and_std_error(sups);
    return {level, h, p, quantity, ms.mean, ms.std_error, n_paths};
}

RateFit fit_rate(std::span<const LevelRecord> records) {
    if (records.size() < 3)
        throw InsufficientDataError("fit_rate: need at least three level records");
    for (const LevelRecord& r : records) {
        if (r.p != records[0].p || r.quantity != records[0].quantity)
            throw std::invalid_argument("fit_rate: records must share one (p, quantity)");
        if (r.estimate < 0.0) throw std::invalid_argument("fit_rate: negative estimate");
    }

    RateFit fit;
    std::vector<double> x;
    std::vector<double> y;
    for (const LevelRecord& r : records) {
        if (r.estimate > 0.0) {
            fit.used.push_back(r);
            x.push_back(std::log2(r.h));
            y.push_back(std::log2(r.estimate));
        } else {
            fit.excluded.push_back(r);
        }
    }
    if (fit.used.size() < 3)
        throw InsufficientDataError("fit_rate: fewer than three records with positive estimates");

    const LineFit line = fit_line(x, y);
    fit.slope = line.slope;
    fit.intercept = line.intercept;
    fit.r_squared = line.r_squared;
    fit.slope_ci_halfwidth = line.slope_ci_halfwidth;
    return fit;
}

std::vector<MomentEstimate> estimate_sup_moments(const ModelCoefficients& model,
                                                 const SimConfig& config,
                                                 std::span<const int> moment_orders,
                                                 Quantity quantity, const EstimatorConfig& est) {
    if (moment_orders.empty()) throw std::invalid_argument("estimate_sup_moments: empty request");
    for (int p : moment_orders)
        if (p < 2) throw std::invalid_argument("estimate_sup_moments: p must be >= 2");
    if (est.n_paths < 2) throw std::invalid_argument("estimate_sup_moments: need >= 2 paths");

    SimConfig cfg = config;
    cfg.order = std::max(cfg.order, required_order(quantity));
    const double h = cfg.step_size();

    std::vector<double> sups(est.n_paths, 0.0);
    const std::uint64_t block = detail::kBlockSupMoment + static_cast<std::uint64_t>(cfg.n_steps);
    fill_slots(est.n_paths, est.workers, [&](std::size_t i) {
        const SeedSpec seed{est.base_seed, substream_index(block, i)};
        const IncrementGrid grid = sample_increments(seed, cfg.n_steps, h);
        PathState state{cfg.s0, cfg.ds0, cfg.dds0};
        double sup = std::abs(state.component(quantity));
        for (std::size_t n = 0; n < cfg.n_steps; ++n) {
            state = em_step(model, cfg.theta, state, grid.h, grid.increments[n], cfg.order, n);
            sup = std::max(sup, std::abs(state.component(quantity)));
        }
        sups[i] = sup;
    });

    std::vector<MomentEstimate> out;
    out.reserve(moment_orders.size());
    std::vector<double> powered(est.n_paths);
    for (int p : moment_orders) {
        for (std::size_t i = 0; i < est.n_paths; ++i)
            powered[i] = std::pow(sups[i], static_cast<double>(p));
        const MeanStdErr ms = mean_and_std_error(powered);
        out.push_back({p, quantity, ms.mean, ms.std_error, h, est.n_paths});
    }
    return out;
}

MomentEstimate estimate_sup_moment(const ModelCoefficients& model, const SimConfig& config, int p,
                                   Quantity quantity, std::size_t n_paths,
                                   std::uint64_t base_seed, int workers) {
    const int ps[] = {p};
    return estimate_sup_moments(model, config, ps, quantity, {base_seed, n_paths, workers})[0];
}

namespace {

double evaluate_payoff(PayoffKind kind, double strike, const PathState& terminal) {
    switch (kind) {
        case PayoffKind::State: return terminal.s;
        case PayoffKind::Tangent: return terminal.ds;
        default: return std::max(terminal.s - strike, 0.0) * terminal.ds;
    }
}

}  // namespace

std::vector<MlmcRow> mlmc_variance_table(const ModelCoefficients& model, const SimConfig& base,
                                         PayoffKind payoff, double strike, int level_lo,
                                         int level_hi, const EstimatorConfig& est) {
    if (level_lo > level_hi) throw std::invalid_argument("mlmc_variance_table: empty level range");
    if (est.n_paths < 2) throw std::invalid_argument("mlmc_variance_table: need >= 2 paths");
    const int order = payoff == PayoffKind::State ? 0 : 1;

    std::vector<MlmcRow> rows;
    std::vector<double> dp(est.n_paths);
    for (int level = level_lo; level <= level_hi; ++level) {
        const SimConfig cfg = level_config(base, level, order);
        const double h = cfg.step_size();
        const std::uint64_t block = detail::kBlockMlmc + static_cast<std::uint64_t>(level);
        fill_slots(est.n_paths, est.workers, [&](std::size_t i) {
            const SeedSpec seed{est.base_seed, substream_index(block, i)};
            const IncrementGrid fine = sample_increments(seed, cfg.n_steps, h);
            const std::size_t coarse_steps = cfg.n_steps / 2;
            PathState state_f{cfg.s0, cfg.ds0, cfg.dds0};
            PathState state_c = state_f;
            for (std::size_t m = 0; m < coarse_steps; ++m) {
                const double d0 = fine.increments[2 * m];
                const double d1 = fine.increments[2 * m + 1];
                state_f = em_step(model, cfg.theta, state_f, fine.h, d0, cfg.order, 2 * m);
                state_f = em_step(model, cfg.theta, state_f, fine.h, d1, cfg.order, 2 * m + 1);
                state_c = em_step(model, cfg.theta, state_c, 2.0 * fine.h, d0 + d1, cfg.order, m);
            }
            dp[i] = evaluate_payoff(payoff, strike, state_f) -
                    evaluate_payoff(payoff, strike, state_c);
        });
        const MeanVariance mv = mean_and_variance(dp);
        rows.push_back({level, h, mv.mean, mv.variance, est.n_paths});
    }
    return rows;
}

MomentEstimate estimate_increment_moment(const ModelCoefficients& model, const SimConfig& config,
                                         double t0, double delta, int p,
                                         const EstimatorConfig& est) {
    if (p < 2) throw std::invalid_argument("estimate_increment_moment: p must be >= 2");
    if (est.n_paths < 2) throw std::invalid_argument("estimate_increment_moment: need >= 2 paths");
    const double h = config.step_size();
    const double k0_real = t0 / h;
    const double kd_real = delta / h;
    const auto k0 = static_cast<std::size_t>(std::llround(k0_real));
    const auto kd = static_cast<std::size_t>(std::llround(kd_real));
    if (std::abs(k0_real - static_cast<double>(k0)) > 1e-9 ||
        std::abs(kd_real - static_cast<double>(kd)) > 1e-9 || kd == 0 ||
        k0 + kd > config.n_steps)
        throw std::invalid_argument(
            "estimate_increment_moment: t0 and t0+delta must be grid points within the horizon");

    SimConfig cfg = config;
    cfg.order = std::max(cfg.order, 1);

    std::vector<double> diffs(est.n_paths);
    fill_slots(est.n_paths, est.workers, [&](std::size_t i) {
        const SeedSpec seed{est.base_seed, substream_index(detail::kBlockIncrement, i)};
        const IncrementGrid grid = sample_increments(seed, cfg.n_steps, h);
        PathState state{cfg.s0, cfg.ds0, cfg.dds0};
        double ds_at_t0 = state.ds;
        for (std::size_t n = 0; n < k0 + kd; ++n) {
            if (n == k0) ds_at_t0 = state.ds;
            state = em_step(model, cfg.theta, state, grid.h, grid.increments[n], cfg.order, n);
        }
        diffs[i] = std::pow(std::abs(state.ds - ds_at_t0), static_cast<double>(p));
    });

    const MeanStdErr ms = mean_and_std_error(diffs);
    return {p, Quantity::Tangent1, ms.mean, ms.std_error, h, est.n_paths};
}

}  // namespace pathsens
