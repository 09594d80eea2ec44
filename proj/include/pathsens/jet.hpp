#pragma once

#include "pathsens/models.hpp"

namespace pathsens {

/// Second-order truncated Taylor coefficient triple in a single parameter:
/// value, first derivative and raw (not halved) second derivative.
struct Jet2 {
    double v0 = 0.0;
    double v1 = 0.0;
    double v2 = 0.0;

    friend constexpr bool operator==(const Jet2&, const Jet2&) = default;
};

constexpr Jet2 operator+(const Jet2& x, const Jet2& y) {
    return {x.v0 + y.v0, x.v1 + y.v1, x.v2 + y.v2};
}

constexpr Jet2 operator-(const Jet2& x, const Jet2& y) {
    return {x.v0 - y.v0, x.v1 - y.v1, x.v2 - y.v2};
}

constexpr Jet2 operator*(const Jet2& x, double c) { return {x.v0 * c, x.v1 * c, x.v2 * c}; }

constexpr Jet2 operator*(double c, const Jet2& x) { return x * c; }

/// Leibniz product of two jets.
constexpr Jet2 jet_mul(const Jet2& x, const Jet2& y) {
    return {x.v0 * y.v0, x.v0 * y.v1 + x.v1 * y.v0,
            x.v0 * y.v2 + 2.0 * x.v1 * y.v1 + x.v2 * y.v0};
}

constexpr Jet2 operator*(const Jet2& x, const Jet2& y) { return jet_mul(x, y); }

/// Composition of a model coefficient f(theta, .) with the jet x, the
/// parameter itself carrying the seed (theta, 1, 0). Propagates the chain
/// rule through both arguments up to second order.
Jet2 jet_apply_coeff(const ModelCoefficients& model, Which which, double theta, const Jet2& x);

}  // namespace pathsens
