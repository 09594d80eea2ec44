#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "pathsens/errors.hpp"

namespace pathsens {

enum class Which { Drift, Diffusion };

/// Value and partial derivatives of one coefficient at a point (theta, S).
/// Members beyond the requested order are left at zero.
struct CoeffDerivs {
    double f = 0.0;         // f(theta, S)
    double d_theta = 0.0;   // df/dtheta
    double d_s = 0.0;       // df/dS
    double d_theta2 = 0.0;  // d2f/dtheta2
    double d_theta_s = 0.0; // d2f/dtheta dS
    double d_s2 = 0.0;      // d2f/dS2
};

/// Declared uniform bounds on all order >= 1 coefficient partials.
/// Absent when the model has no such bound (e.g. geometric Brownian motion,
/// whose drift has an unbounded theta-derivative).
struct DerivativeBounds {
    std::optional<double> l_a;  // drift bound
    std::optional<double> l_b;  // diffusion bound
};

/// An SDE model dS = a(theta,S) dt + b(theta,S) dW together with every
/// partial derivative of a and b up to total order 2. Partials are supplied
/// analytically; they default to identically zero so custom test models only
/// set the entries they need. Immutable once registered, safe for concurrent
/// reads.
class ModelCoefficients {
public:
    using PartialFn = std::function<double(double theta, double s)>;
    using FusedFn = std::function<void(double theta, double s, int order, CoeffDerivs& out)>;

    ModelCoefficients(std::string id, std::string description,
                      std::map<std::string, double> constants, DerivativeBounds bounds);

    void set_partial(Which which, int theta_order, int s_order, PartialFn fn);
    /// Optional single-call evaluator covering all partials up to `order`.
    /// Must agree exactly with the individual partials.
    void set_fused(Which which, FusedFn fn);

    const std::string& id() const noexcept { return id_; }
    const std::string& description() const noexcept { return description_; }
    const std::map<std::string, double>& constants() const noexcept { return constants_; }
    double constant(const std::string& name) const;
    const DerivativeBounds& bounds() const noexcept { return bounds_; }

    /// Exact analytic partial d^{i+j} f / dtheta^i dS^j at (theta, s).
    /// (i, j) = (0, 0) is f itself. Throws UnsupportedOrderError for i + j > 2.
    double eval_partial(Which which, int theta_order, int s_order, double theta, double s) const;

    /// All partials up to `order` in one call; uses the fused evaluator when
    /// one is registered, otherwise falls back to the partial table.
    void eval_derivs(Which which, double theta, double s, int order, CoeffDerivs& out) const;

private:
    static int slot(int theta_order, int s_order);

    std::string id_;
    std::string description_;
    std::map<std::string, double> constants_;
    DerivativeBounds bounds_;
    PartialFn partials_[2][6];
    FusedFn fused_[2];
};

double eval_partial(const ModelCoefficients& model, Which which, int theta_order, int s_order,
                    double theta, double s);
DerivativeBounds derivative_bounds(const ModelCoefficients& model);

struct ModelInfo {
    std::string id;
    std::string description;
    std::map<std::string, double> constants;
};

/// Registry lookup; throws RegistryError for unknown ids.
const ModelCoefficients& get_model(std::string_view id);
std::vector<ModelInfo> list_models();

ModelCoefficients make_gbm(double sigma = 0.2);
ModelCoefficients make_trig();
ModelCoefficients make_additive(double beta = 1.0);

}  // namespace pathsens
