#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

#include "pathsens/brownian.hpp"
#include "pathsens/models.hpp"

namespace pathsens {

/// Which component of the path system a statistic refers to.
enum class Quantity { State = 0, Tangent1 = 1, Tangent2 = 2 };

/// Lowest simulation order that produces the component.
constexpr int required_order(Quantity q) { return static_cast<int>(q); }

std::string_view quantity_name(Quantity q);
std::optional<Quantity> parse_quantity(std::string_view name);

struct SimConfig {
    double theta = 0.1;
    double s0 = 1.0;
    double ds0 = 0.0;   // initial first sensitivity
    double dds0 = 0.0;  // initial second sensitivity
    double horizon = 1.0;
    std::size_t n_steps = 16;
    int order = 2;  // 0 = state only, 1 = + first tangent, 2 = + second

    double step_size() const { return horizon / static_cast<double>(n_steps); }
};

struct PathState {
    double s = 0.0;
    double ds = 0.0;
    double dds = 0.0;

    double component(Quantity q) const {
        switch (q) {
            case Quantity::State: return s;
            case Quantity::Tangent1: return ds;
            default: return dds;
        }
    }
};

struct PathResult {
    double h = 0.0;
    std::vector<PathState> grid;       // n = 0..N, grid[0] is the initial state
    std::array<double, 3> sup_abs{};   // max |s|, |ds|, |dds| over the grid

    double sup(Quantity q) const { return sup_abs[static_cast<int>(q)]; }
};

/// One explicit Euler-Maruyama step of the state and, order permitting, its
/// first and second theta-sensitivities. All coefficients are evaluated at
/// the pre-step state. Throws DivergenceError (tagged with `step_index`)
/// when a component becomes non-finite.
PathState em_step(const ModelCoefficients& model, double theta, const PathState& state, double h,
                  double dw, int order, std::size_t step_index = 0);

/// Folds em_step over the supplied increments from the configured initial
/// data, recording every grid state and running sup statistics.
PathResult simulate_path(const ModelCoefficients& model, const SimConfig& config,
                         const IncrementGrid& increments);

struct CoupledResult {
    PathResult fine;
    PathResult coarse;
};

/// Fine path on `fine`, coarse path on coarsen(fine): same Brownian path,
/// same initial data, half the steps.
CoupledResult simulate_coupled(const ModelCoefficients& model, const SimConfig& config,
                               const IncrementGrid& fine);

/// The order-0 EM recursion evaluated in Jet2 arithmetic with theta seeded
/// as (theta, 1, 0); the jet components are returned as (s, ds, dds). Always
/// propagates both tangent orders regardless of config.order.
PathResult simulate_path_jet(const ModelCoefficients& model, const SimConfig& config,
                             const IncrementGrid& increments);

}  // namespace pathsens
