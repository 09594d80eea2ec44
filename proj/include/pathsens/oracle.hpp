#pragma once

#include <span>
#include <vector>

#include "pathsens/engine.hpp"

namespace pathsens {

/// Exact geometric Brownian motion path and its theta-sensitivity evaluated
/// on supplied Brownian values. Satisfies ds[n] == times[n] * s[n].
struct ClosedFormPath {
    std::vector<double> s;
    std::vector<double> ds;
};

/// S_t = s0 exp((theta - sigma^2/2) t + sigma W_t) and its theta-derivative
/// t S_t, evaluated at each (times[n], w[n]). Throws std::invalid_argument
/// when w and times differ in length.
ClosedFormPath gbm_closed_form(double theta, double sigma, double s0, std::span<const double> w,
                               std::span<const double> times);

/// Central finite difference (S(theta+eps) - S(theta-eps)) / (2 eps) per grid
/// point, with the Brownian increments held fixed.
std::vector<double> fd_tangent(const ModelCoefficients& model, const SimConfig& config,
                               const IncrementGrid& increments, double eps);

/// Second central difference (S(theta+eps) - 2 S(theta) + S(theta-eps)) / eps^2.
std::vector<double> fd_second(const ModelCoefficients& model, const SimConfig& config,
                              const IncrementGrid& increments, double eps);

/// Default finite-difference bump: 1e-4 * max(1, |theta|).
double default_bump(double theta);

}  // namespace pathsens
