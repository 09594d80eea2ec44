#include <cmath>
#include <random>

#include "doctest.h"
#include "pathsens/models.hpp"

using namespace pathsens;

TEST_CASE("registry contains the three built-in models") {
    const auto infos = list_models();
    auto has = [&](const char* id) {
        for (const auto& info : infos)
            if (info.id == id) return true;
        return false;
    };
    CHECK(has("gbm"));
    CHECK(has("trig"));
    CHECK(has("additive"));
    CHECK_THROWS_AS(get_model("heston"), RegistryError);
}

TEST_CASE("eval_partial worked examples") {
    const auto& gbm = get_model("gbm");
    CHECK(eval_partial(gbm, Which::Drift, 0, 0, 0.05, 2.0) == 0.05 * 2.0);
    CHECK(eval_partial(gbm, Which::Drift, 1, 1, 0.05, 2.0) == 1.0);

    const auto& trig = get_model("trig");
    CHECK(eval_partial(trig, Which::Diffusion, 0, 1, 0.0, 0.0) == 0.0);

    const auto& additive = get_model("additive");
    CHECK(eval_partial(additive, Which::Drift, 0, 1, 1.0, 7.0) == 0.0);
}

TEST_CASE("orders above two are rejected") {
    const auto& trig = get_model("trig");
    CHECK_THROWS_AS(eval_partial(trig, Which::Drift, 3, 0, 0.0, 0.0), UnsupportedOrderError);
    CHECK_THROWS_AS(eval_partial(trig, Which::Drift, 1, 2, 0.0, 0.0), UnsupportedOrderError);
    CHECK_THROWS_AS(eval_partial(trig, Which::Drift, -1, 0, 0.0, 0.0), UnsupportedOrderError);
}

TEST_CASE("declared derivative bounds") {
    const DerivativeBounds trig = derivative_bounds(get_model("trig"));
    REQUIRE(trig.l_a.has_value());
    REQUIRE(trig.l_b.has_value());
    CHECK(*trig.l_a == 1.0);
    CHECK(*trig.l_b == 0.25);

    const DerivativeBounds additive = derivative_bounds(get_model("additive"));
    CHECK(*additive.l_a == 1.0);
    CHECK(*additive.l_b == 0.0);

    const DerivativeBounds gbm = derivative_bounds(get_model("gbm"));
    CHECK_FALSE(gbm.l_a.has_value());
    CHECK_FALSE(gbm.l_b.has_value());
}

namespace {

double random_in(std::mt19937_64& gen, double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(gen);
}

}  // namespace

TEST_CASE("finite differences of each partial match the next analytic partial") {
    std::mt19937_64 gen(2024);
    for (const char* id : {"gbm", "trig", "additive"}) {
        const auto& model = get_model(id);
        const double s_lo = std::string(id) == "gbm" ? 0.1 : -2.0;
        const double s_hi = std::string(id) == "gbm" ? 5.0 : 2.0;
        for (int trial = 0; trial < 100; ++trial) {
            const double theta = random_in(gen, -2.0, 2.0);
            const double s = random_in(gen, s_lo, s_hi);
            for (Which which : {Which::Drift, Which::Diffusion}) {
                for (int i = 0; i <= 1; ++i) {
                    for (int j = 0; i + j <= 1; ++j) {
                        for (double eps : {1e-3, 1e-4}) {
                            const double fd_theta =
                                (model.eval_partial(which, i, j, theta + eps, s) -
                                 model.eval_partial(which, i, j, theta - eps, s)) /
                                (2.0 * eps);
                            CHECK(std::abs(fd_theta -
                                           model.eval_partial(which, i + 1, j, theta, s)) <=
                                  1.0 * eps * eps);
                            const double fd_s =
                                (model.eval_partial(which, i, j, theta, s + eps) -
                                 model.eval_partial(which, i, j, theta, s - eps)) /
                                (2.0 * eps);
                            CHECK(std::abs(fd_s -
                                           model.eval_partial(which, i, j + 1, theta, s)) <=
                                  1.0 * eps * eps);
                        }
                    }
                }
            }
        }
    }
}

TEST_CASE("sampled order >= 1 partials never exceed the declared bounds") {
    std::mt19937_64 gen(7);
    for (const char* id : {"trig", "additive"}) {
        const auto& model = get_model(id);
        const DerivativeBounds bounds = model.bounds();
        for (int trial = 0; trial < 10000; ++trial) {
            const double theta = random_in(gen, -50.0, 50.0);
            const double s = random_in(gen, -50.0, 50.0);
            for (int i = 0; i <= 2; ++i) {
                for (int j = 0; i + j <= 2; ++j) {
                    if (i + j == 0) continue;
                    CHECK(std::abs(model.eval_partial(Which::Drift, i, j, theta, s)) <= *bounds.l_a);
                    CHECK(std::abs(model.eval_partial(Which::Diffusion, i, j, theta, s)) <=
                          *bounds.l_b);
                }
            }
        }
    }
}

TEST_CASE("fused evaluators agree exactly with the partial tables") {
    std::mt19937_64 gen(99);
    for (const char* id : {"gbm", "trig", "additive"}) {
        const auto& model = get_model(id);
        for (int trial = 0; trial < 200; ++trial) {
            const double theta = random_in(gen, -2.0, 2.0);
            const double s = random_in(gen, 0.1, 3.0);
            for (Which which : {Which::Drift, Which::Diffusion}) {
                CoeffDerivs d{};
                model.eval_derivs(which, theta, s, 2, d);
                CHECK(d.f == model.eval_partial(which, 0, 0, theta, s));
                CHECK(d.d_theta == model.eval_partial(which, 1, 0, theta, s));
                CHECK(d.d_s == model.eval_partial(which, 0, 1, theta, s));
                CHECK(d.d_theta2 == model.eval_partial(which, 2, 0, theta, s));
                CHECK(d.d_theta_s == model.eval_partial(which, 1, 1, theta, s));
                CHECK(d.d_s2 == model.eval_partial(which, 0, 2, theta, s));
            }
        }
    }
}

TEST_CASE("model constants are exposed") {
    CHECK(get_model("gbm").constant("sigma") == 0.2);
    CHECK(get_model("additive").constant("beta") == 1.0);
    CHECK_THROWS_AS(get_model("trig").constant("sigma"), RegistryError);
}
