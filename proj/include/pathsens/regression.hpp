#pragma once

#include <cstddef>
#include <span>

namespace pathsens {

/// Unweighted least-squares line fit, slope confidence half-width from
/// standard regression theory (Student t at 97.5%, df = n - 2).
struct LineFit {
    double slope = 0.0;
    double intercept = 0.0;
    double r_squared = 1.0;
    double slope_ci_halfwidth = 0.0;
    std::size_t n = 0;
};

/// Fit y = slope * x + intercept. Throws InsufficientDataError for n < 3.
LineFit fit_line(std::span<const double> x, std::span<const double> y);

/// Two-sided 95% Student t quantile for the given degrees of freedom.
double student_t_975(std::size_t df);

}  // namespace pathsens
