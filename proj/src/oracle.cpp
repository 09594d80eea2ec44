#include "pathsens/oracle.hpp"

#include <cmath>
#include <stdexcept>

namespace pathsens {

ClosedFormPath gbm_closed_form(double theta, double sigma, double s0, std::span<const double> w,
                               std::span<const double> times) {
    if (w.size() != times.size())
        throw std::invalid_argument("gbm_closed_form: w and times must have equal length");
    if (!(s0 > 0.0)) throw std::invalid_argument("gbm_closed_form: s0 must be > 0");
    ClosedFormPath path;
    path.s.resize(w.size());
    path.ds.resize(w.size());
    const double drift = theta - 0.5 * sigma * sigma;
    for (std::size_t n = 0; n < w.size(); ++n) {
        const double t = times[n];
        path.s[n] = s0 * std::exp(drift * t + sigma * w[n]);
        path.ds[n] = t * path.s[n];
    }
    return path;
}

namespace {

std::vector<double> state_series(const ModelCoefficients& model, const SimConfig& config,
                                 const IncrementGrid& increments, double theta) {
    SimConfig bumped = config;
    bumped.theta = theta;
    bumped.order = 0;
    const PathResult result = simulate_path(model, bumped, increments);
    std::vector<double> s(result.grid.size());
    for (std::size_t n = 0; n < s.size(); ++n) s[n] = result.grid[n].s;
    return s;
}

}  // namespace

std::vector<double> fd_tangent(const ModelCoefficients& model, const SimConfig& config,
                               const IncrementGrid& increments, double eps) {
    if (!(eps > 0.0)) throw std::invalid_argument("fd_tangent: eps must be > 0");
    const std::vector<double> up = state_series(model, config, increments, config.theta + eps);
    const std::vector<double> down = state_series(model, config, increments, config.theta - eps);
    std::vector<double> fd(up.size());
    for (std::size_t n = 0; n < fd.size(); ++n) fd[n] = (up[n] - down[n]) / (2.0 * eps);
    return fd;
}

std::vector<double> fd_second(const ModelCoefficients& model, const SimConfig& config,
                              const IncrementGrid& increments, double eps) {
    if (!(eps > 0.0)) throw std::invalid_argument("fd_second: eps must be > 0");
    const std::vector<double> up = state_series(model, config, increments, config.theta + eps);
    const std::vector<double> mid = state_series(model, config, increments, config.theta);
    const std::vector<double> down = state_series(model, config, increments, config.theta - eps);
    std::vector<double> fd(up.size());
    for (std::size_t n = 0; n < fd.size(); ++n)
        fd[n] = (up[n] - 2.0 * mid[n] + down[n]) / (eps * eps);
    return fd;
}

double default_bump(double theta) { return 1e-4 * std::max(1.0, std::abs(theta)); }

}  // namespace pathsens
