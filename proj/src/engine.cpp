#include "pathsens/engine.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "pathsens/errors.hpp"
#include "pathsens/jet.hpp"

namespace pathsens {

std::string_view quantity_name(Quantity q) {
    switch (q) {
        case Quantity::State: return "state";
        case Quantity::Tangent1: return "tangent1";
        default: return "tangent2";
    }
}

std::optional<Quantity> parse_quantity(std::string_view name) {
    if (name == "state") return Quantity::State;
    if (name == "tangent1") return Quantity::Tangent1;
    if (name == "tangent2") return Quantity::Tangent2;
    return std::nullopt;
}

PathState em_step(const ModelCoefficients& model, double theta, const PathState& state, double h,
                  double dw, int order, std::size_t step_index) {
    CoeffDerivs a{};
    CoeffDerivs b{};
    model.eval_derivs(Which::Drift, theta, state.s, order, a);
    model.eval_derivs(Which::Diffusion, theta, state.s, order, b);

    PathState next = state;
    next.s = state.s + a.f * h + b.f * dw;
    bool finite = std::isfinite(next.s);
    if (order >= 1) {
        next.ds = state.ds + (a.d_theta + a.d_s * state.ds) * h +
                  (b.d_theta + b.d_s * state.ds) * dw;
        finite = finite && std::isfinite(next.ds);
    }
    if (order >= 2) {
        const double ds_sq = state.ds * state.ds;
        next.dds = state.dds +
                   (a.d_theta2 + 2.0 * a.d_theta_s * state.ds + a.d_s2 * ds_sq +
                    a.d_s * state.dds) * h +
                   (b.d_theta2 + 2.0 * b.d_theta_s * state.ds + b.d_s2 * ds_sq +
                    b.d_s * state.dds) * dw;
        finite = finite && std::isfinite(next.dds);
    }
    if (!finite) throw DivergenceError(step_index);
    return next;
}

namespace {

void check_grid_matches(const SimConfig& config, const IncrementGrid& increments) {
    if (config.n_steps < 1) throw std::invalid_argument("simulate: n_steps must be >= 1");
    if (!(config.horizon > 0.0)) throw std::invalid_argument("simulate: horizon must be > 0");
    if (config.order < 0 || config.order > 2)
        throw std::invalid_argument("simulate: order must be 0, 1 or 2");
    if (increments.steps() != config.n_steps)
        throw std::invalid_argument("simulate: increment count does not match n_steps");
    const double h = config.step_size();
    if (std::abs(increments.h - h) > 4.0 * std::numeric_limits<double>::epsilon() * h)
        throw std::invalid_argument("simulate: increment step size does not match horizon/n_steps");
}

void record(PathResult& result, const PathState& state) {
    result.grid.push_back(state);
    result.sup_abs[0] = std::max(result.sup_abs[0], std::abs(state.s));
    result.sup_abs[1] = std::max(result.sup_abs[1], std::abs(state.ds));
    result.sup_abs[2] = std::max(result.sup_abs[2], std::abs(state.dds));
}

}  // namespace

PathResult simulate_path(const ModelCoefficients& model, const SimConfig& config,
                         const IncrementGrid& increments) {
    check_grid_matches(config, increments);
    PathResult result;
    result.h = increments.h;
    result.grid.reserve(config.n_steps + 1);
    PathState state{config.s0, config.ds0, config.dds0};
    record(result, state);
    for (std::size_t n = 0; n < config.n_steps; ++n) {
        state = em_step(model, config.theta, state, increments.h, increments.increments[n],
                        config.order, n);
        record(result, state);
    }
    return result;
}

CoupledResult simulate_coupled(const ModelCoefficients& model, const SimConfig& config,
                               const IncrementGrid& fine) {
    if (fine.steps() % 2 != 0)
        throw std::invalid_argument("simulate_coupled: fine grid must have an even step count");
    CoupledResult out;
    out.fine = simulate_path(model, config, fine);
    SimConfig coarse_config = config;
    coarse_config.n_steps = config.n_steps / 2;
    out.coarse = simulate_path(model, coarse_config, coarsen(fine));
    return out;
}

PathResult simulate_path_jet(const ModelCoefficients& model, const SimConfig& config,
                             const IncrementGrid& increments) {
    check_grid_matches(config, increments);
    PathResult result;
    result.h = increments.h;
    result.grid.reserve(config.n_steps + 1);
    Jet2 s{config.s0, config.ds0, config.dds0};
    record(result, PathState{s.v0, s.v1, s.v2});
    for (std::size_t n = 0; n < config.n_steps; ++n) {
        const Jet2 a = jet_apply_coeff(model, Which::Drift, config.theta, s);
        const Jet2 b = jet_apply_coeff(model, Which::Diffusion, config.theta, s);
        s = s + a * increments.h + b * increments.increments[n];
        if (!(std::isfinite(s.v0) && std::isfinite(s.v1) && std::isfinite(s.v2)))
            throw DivergenceError(n);
        record(result, PathState{s.v0, s.v1, s.v2});
    }
    return result;
}

}  // namespace pathsens
