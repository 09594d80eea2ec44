#include "pathsens/models.hpp"

#include <cmath>
#include <utility>

namespace pathsens {

namespace {

ModelCoefficients::PartialFn zero_fn() {
    return [](double, double) { return 0.0; };
}

}  // namespace

ModelCoefficients::ModelCoefficients(std::string id, std::string description,
                                     std::map<std::string, double> constants,
                                     DerivativeBounds bounds)
    : id_(std::move(id)),
      description_(std::move(description)),
      constants_(std::move(constants)),
      bounds_(bounds) {
    for (auto& table : partials_)
        for (auto& fn : table) fn = zero_fn();
}

int ModelCoefficients::slot(int theta_order, int s_order) {
    if (theta_order < 0 || s_order < 0 || theta_order + s_order > 2)
        throw UnsupportedOrderError("partial order (" + std::to_string(theta_order) + ", " +
                                    std::to_string(s_order) + ") outside supported range i+j <= 2");
    // (0,0) (1,0) (0,1) (2,0) (1,1) (0,2)
    static constexpr int index[3][3] = {{0, 2, 5}, {1, 4, -1}, {3, -1, -1}};
    return index[theta_order][s_order];
}

void ModelCoefficients::set_partial(Which which, int theta_order, int s_order, PartialFn fn) {
    partials_[static_cast<int>(which)][slot(theta_order, s_order)] = std::move(fn);
}

void ModelCoefficients::set_fused(Which which, FusedFn fn) {
    fused_[static_cast<int>(which)] = std::move(fn);
}

double ModelCoefficients::constant(const std::string& name) const {
    auto it = constants_.find(name);
    if (it == constants_.end())
        throw RegistryError("model '" + id_ + "' has no constant '" + name + "'");
    return it->second;
}

double ModelCoefficients::eval_partial(Which which, int theta_order, int s_order, double theta,
                                       double s) const {
    return partials_[static_cast<int>(which)][slot(theta_order, s_order)](theta, s);
}

void ModelCoefficients::eval_derivs(Which which, double theta, double s, int order,
                                    CoeffDerivs& out) const {
    const auto& fused = fused_[static_cast<int>(which)];
    if (fused) {
        fused(theta, s, order, out);
        return;
    }
    const auto& table = partials_[static_cast<int>(which)];
    out.f = table[0](theta, s);
    if (order >= 1) {
        out.d_theta = table[1](theta, s);
        out.d_s = table[2](theta, s);
    }
    if (order >= 2) {
        out.d_theta2 = table[3](theta, s);
        out.d_theta_s = table[4](theta, s);
        out.d_s2 = table[5](theta, s);
    }
}

double eval_partial(const ModelCoefficients& model, Which which, int theta_order, int s_order,
                    double theta, double s) {
    return model.eval_partial(which, theta_order, s_order, theta, s);
}

DerivativeBounds derivative_bounds(const ModelCoefficients& model) { return model.bounds(); }

ModelCoefficients make_gbm(double sigma) {
    ModelCoefficients m("gbm",
                        "dS = theta*S dt + sigma*S dW; closed form available; "
                        "drift theta-derivative is unbounded in S",
                        {{"sigma", sigma}}, DerivativeBounds{});
    m.set_partial(Which::Drift, 0, 0, [](double theta, double s) { return theta * s; });
    m.set_partial(Which::Drift, 1, 0, [](double, double s) { return s; });
    m.set_partial(Which::Drift, 0, 1, [](double theta, double) { return theta; });
    m.set_partial(Which::Drift, 1, 1, [](double, double) { return 1.0; });
    m.set_fused(Which::Drift, [](double theta, double s, int order, CoeffDerivs& out) {
        out.f = theta * s;
        if (order >= 1) {
            out.d_theta = s;
            out.d_s = theta;
        }
        if (order >= 2) out.d_theta_s = 1.0;
    });
    m.set_partial(Which::Diffusion, 0, 0, [sigma](double, double s) { return sigma * s; });
    m.set_partial(Which::Diffusion, 0, 1, [sigma](double, double) { return sigma; });
    m.set_fused(Which::Diffusion, [sigma](double, double s, int order, CoeffDerivs& out) {
        out.f = sigma * s;
        if (order >= 1) out.d_s = sigma;
    });
    return m;
}

ModelCoefficients make_trig() {
    ModelCoefficients m("trig",
                        "dS = sin(theta+S) dt + (0.5 + 0.25*cos(theta-S)) dW; "
                        "all coefficient partials uniformly bounded",
                        {}, DerivativeBounds{1.0, 0.25});
    m.set_partial(Which::Drift, 0, 0, [](double theta, double s) { return std::sin(theta + s); });
    m.set_partial(Which::Drift, 1, 0, [](double theta, double s) { return std::cos(theta + s); });
    m.set_partial(Which::Drift, 0, 1, [](double theta, double s) { return std::cos(theta + s); });
    m.set_partial(Which::Drift, 2, 0, [](double theta, double s) { return -std::sin(theta + s); });
    m.set_partial(Which::Drift, 1, 1, [](double theta, double s) { return -std::sin(theta + s); });
    m.set_partial(Which::Drift, 0, 2, [](double theta, double s) { return -std::sin(theta + s); });
    m.set_fused(Which::Drift, [](double theta, double s, int order, CoeffDerivs& out) {
        const double u = theta + s;
        const double sn = std::sin(u);
        out.f = sn;
        if (order >= 1) {
            const double cs = std::cos(u);
            out.d_theta = cs;
            out.d_s = cs;
        }
        if (order >= 2) {
            out.d_theta2 = -sn;
            out.d_theta_s = -sn;
            out.d_s2 = -sn;
        }
    });
    m.set_partial(Which::Diffusion, 0, 0,
                  [](double theta, double s) { return 0.5 + 0.25 * std::cos(theta - s); });
    m.set_partial(Which::Diffusion, 1, 0,
                  [](double theta, double s) { return -0.25 * std::sin(theta - s); });
    m.set_partial(Which::Diffusion, 0, 1,
                  [](double theta, double s) { return 0.25 * std::sin(theta - s); });
    m.set_partial(Which::Diffusion, 2, 0,
                  [](double theta, double s) { return -0.25 * std::cos(theta - s); });
    m.set_partial(Which::Diffusion, 1, 1,
                  [](double theta, double s) { return 0.25 * std::cos(theta - s); });
    m.set_partial(Which::Diffusion, 0, 2,
                  [](double theta, double s) { return -0.25 * std::cos(theta - s); });
    m.set_fused(Which::Diffusion, [](double theta, double s, int order, CoeffDerivs& out) {
        const double u = theta - s;
        const double cs = std::cos(u);
        out.f = 0.5 + 0.25 * cs;
        if (order >= 1) {
            const double sn = std::sin(u);
            out.d_theta = -0.25 * sn;
            out.d_s = 0.25 * sn;
        }
        if (order >= 2) {
            out.d_theta2 = -0.25 * cs;
            out.d_theta_s = 0.25 * cs;
            out.d_s2 = -0.25 * cs;
        }
    });
    return m;
}

ModelCoefficients make_additive(double beta) {
    ModelCoefficients m("additive",
                        "dS = theta dt + beta dW; Euler-Maruyama reproduces the "
                        "solution at grid points, zero-error sentinel",
                        {{"beta", beta}}, DerivativeBounds{1.0, 0.0});
    m.set_partial(Which::Drift, 0, 0, [](double theta, double) { return theta; });
    m.set_partial(Which::Drift, 1, 0, [](double, double) { return 1.0; });
    m.set_fused(Which::Drift, [](double theta, double, int order, CoeffDerivs& out) {
        out.f = theta;
        if (order >= 1) out.d_theta = 1.0;
    });
    m.set_partial(Which::Diffusion, 0, 0, [beta](double, double) { return beta; });
    m.set_fused(Which::Diffusion, [beta](double, double, int, CoeffDerivs& out) { out.f = beta; });
    return m;
}

namespace {

const std::vector<ModelCoefficients>& registry() {
    static const std::vector<ModelCoefficients> models = [] {
        std::vector<ModelCoefficients> v;
        v.push_back(make_gbm());
        v.push_back(make_trig());
        v.push_back(make_additive());
        return v;
    }();
    return models;
}

}  // namespace

const ModelCoefficients& get_model(std::string_view id) {
    for (const auto& m : registry())
        if (m.id() == id) return m;
    throw RegistryError("unknown model '" + std::string(id) + "'");
}

std::vector<ModelInfo> list_models() {
    std::vector<ModelInfo> out;
    for (const auto& m : registry()) out.push_back({m.id(), m.description(), m.constants()});
    return out;
}

}  // namespace pathsens
