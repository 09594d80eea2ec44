#pragma once

#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "pathsens/engine.hpp"
#include "pathsens/lemma.hpp"

namespace pathsens {

/// Monte Carlo estimate of E[sup_m |fine - coarse|^p] for one quantity at
/// one discretisation level. `h` is the fine timestep.
struct LevelRecord {
    int level = 0;
    double h = 0.0;
    int p = 2;
    Quantity quantity = Quantity::Tangent1;
    double estimate = 0.0;
    double std_error = 0.0;
    std::size_t n_paths = 0;
};

/// Least-squares fit of log2(estimate) against log2(h). Records with a zero
/// estimate cannot enter the log fit; they are excluded and reported.
struct RateFit {
    double slope = 0.0;
    double intercept = 0.0;
    double r_squared = 0.0;
    double slope_ci_halfwidth = 0.0;
    std::vector<LevelRecord> used;
    std::vector<LevelRecord> excluded;
};

struct MomentEstimate {
    int p = 2;
    Quantity quantity = Quantity::Tangent1;
    double estimate = 0.0;
    double std_error = 0.0;
    double h = 0.0;
    std::size_t n_paths = 0;
};

struct MlmcRow {
    int level = 0;
    double h = 0.0;
    double mean_dp = 0.0;
    double var_dp = 0.0;
    std::size_t n_paths = 0;
};

enum class PayoffKind { State, Tangent, CallTangent };

std::string_view payoff_name(PayoffKind kind);

/// Common Monte Carlo driver knobs. workers <= 0 means all hardware workers;
/// results are identical for every worker count.
struct EstimatorConfig {
    std::uint64_t base_seed = 0;
    std::size_t n_paths = 10000;
    int workers = 0;
};

/// Coupled coarse/fine strong-error estimates at level `level` (fine
/// N = base.n_steps * 2^level; base.n_steps must be even) for every
/// (quantity, p) combination, all measured on one shared set of paths.
/// Rows are ordered by quantity then p.
std::vector<LevelRecord> estimate_strong_error_table(const ModelCoefficients& model,
                                                     const SimConfig& base,
                                                     std::span<const Quantity> quantities,
                                                     std::span<const int> moment_orders, int level,
                                                     const EstimatorConfig& est);

LevelRecord estimate_strong_error(const ModelCoefficients& model, const SimConfig& base, int p,
                                  Quantity quantity, std::size_t n_paths, int level,
                                  std::uint64_t base_seed, int workers = 0);

/// Strong error of the EM state (or first tangent) against the exact
/// geometric Brownian motion path on shared Brownian values; sup over the
/// full fine grid.
LevelRecord estimate_exact_gbm_error(const ModelCoefficients& gbm, const SimConfig& base, int p,
                                     Quantity quantity, std::size_t n_paths, int level,
                                     std::uint64_t base_seed, int workers = 0);

/// Unweighted log2-log2 regression over records sharing one (p, quantity).
/// Throws InsufficientDataError when fewer than three records remain after
/// excluding zero estimates.
RateFit fit_rate(std::span<const LevelRecord> records);

/// Monte Carlo estimates of E[(sup_n |quantity_n|)^p], one shared set of
/// paths for all requested p.
std::vector<MomentEstimate> estimate_sup_moments(const ModelCoefficients& model,
                                                 const SimConfig& config,
                                                 std::span<const int> moment_orders,
                                                 Quantity quantity, const EstimatorConfig& est);

MomentEstimate estimate_sup_moment(const ModelCoefficients& model, const SimConfig& config, int p,
                                   Quantity quantity, std::size_t n_paths,
                                   std::uint64_t base_seed, int workers = 0);

/// Per-level mean and sample variance of P(fine) - P(coarse) for a payoff of
/// (S_T, dS_T) on coupled paths.
std::vector<MlmcRow> mlmc_variance_table(const ModelCoefficients& model, const SimConfig& base,
                                         PayoffKind payoff, double strike, int level_lo,
                                         int level_hi, const EstimatorConfig& est);

/// E[|dS_{t0+delta} - dS_{t0}|^p] on the configured grid; t0 and t0+delta
/// must be grid points.
MomentEstimate estimate_increment_moment(const ModelCoefficients& model, const SimConfig& config,
                                         double t0, double delta, int p,
                                         const EstimatorConfig& est);

namespace detail {

/// Stream-index blocks, one per estimator family, so different experiments
/// draw from disjoint path streams. Level (or step count) is added to the
/// family base.
inline constexpr std::uint64_t kBlockStrongError = 0;
inline constexpr std::uint64_t kBlockExactError = 1024;
inline constexpr std::uint64_t kBlockSupMoment = std::uint64_t{1} << 20;
inline constexpr std::uint64_t kBlockMlmc = std::uint64_t{1} << 21;
inline constexpr std::uint64_t kBlockIncrement = (std::uint64_t{1} << 21) + 1024;
inline constexpr std::uint64_t kBlockValidate = (std::uint64_t{1} << 21) + 2048;
inline constexpr std::uint64_t kBlockSimulate = (std::uint64_t{1} << 21) + 3072;

/// Sup over coarse grid points of |fine - coarse| per component, computed by
/// stepping the coupled pair without storing the grids. Bitwise-identical to
/// the simulate_coupled route.
std::array<double, 3> coupled_sup_diffs(const ModelCoefficients& model, const SimConfig& fine_cfg,
                                        const IncrementGrid& fine);

}  // namespace detail

}  // namespace pathsens
