#include "pathsens/jet.hpp"

namespace pathsens {

Jet2 jet_apply_coeff(const ModelCoefficients& model, Which which, double theta, const Jet2& x) {
    const double f = model.eval_partial(which, 0, 0, theta, x.v0);
    const double f_t = model.eval_partial(which, 1, 0, theta, x.v0);
    const double f_s = model.eval_partial(which, 0, 1, theta, x.v0);
    const double f_tt = model.eval_partial(which, 2, 0, theta, x.v0);
    const double f_ts = model.eval_partial(which, 1, 1, theta, x.v0);
    const double f_ss = model.eval_partial(which, 0, 2, theta, x.v0);
    Jet2 out;
    out.v0 = f;
    out.v1 = f_t + f_s * x.v1;
    out.v2 = f_tt + 2.0 * f_ts * x.v1 + f_ss * (x.v1 * x.v1) + f_s * x.v2;
    return out;
}

}  // namespace pathsens
