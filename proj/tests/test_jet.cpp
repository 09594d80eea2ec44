#include <cmath>
#include <random>

#include "doctest.h"
#include "pathsens/jet.hpp"

using namespace pathsens;

TEST_CASE("jet_mul Leibniz expansion") {
    const Jet2 x{1.0, 2.0, 3.0};
    const Jet2 y{4.0, 5.0, 6.0};
    CHECK(jet_mul(x, y) == Jet2{4.0, 13.0, 38.0});
    CHECK(jet_mul(x, Jet2{1.0, 0.0, 0.0}) == x);
    CHECK(jet_mul(Jet2{0.0, 1.0, 0.0}, Jet2{0.0, 1.0, 0.0}) == Jet2{0.0, 0.0, 2.0});
}

TEST_CASE("jet_mul is commutative and associative on integer jets") {
    std::mt19937_64 gen(11);
    std::uniform_int_distribution<int> dist(-6, 6);
    for (int trial = 0; trial < 500; ++trial) {
        const Jet2 a{double(dist(gen)), double(dist(gen)), double(dist(gen))};
        const Jet2 b{double(dist(gen)), double(dist(gen)), double(dist(gen))};
        const Jet2 c{double(dist(gen)), double(dist(gen)), double(dist(gen))};
        CHECK(jet_mul(a, b) == jet_mul(b, a));
        CHECK(jet_mul(jet_mul(a, b), c) == jet_mul(a, jet_mul(b, c)));
    }
}

TEST_CASE("jet_apply_coeff worked examples") {
    const auto& gbm = get_model("gbm");
    const Jet2 r = jet_apply_coeff(gbm, Which::Drift, 0.1, Jet2{2.0, 3.0, 4.0});
    CHECK(r.v0 == 0.1 * 2.0);
    CHECK(r.v1 == 2.0 + 0.1 * 3.0);
    CHECK(r.v2 == 2.0 * 3.0 + 0.1 * 4.0);

    const auto& additive = get_model("additive");
    const Jet2 ra = jet_apply_coeff(additive, Which::Drift, 0.7, Jet2{-3.0, 5.0, 9.0});
    CHECK(ra == Jet2{0.7, 1.0, 0.0});

    const auto& trig = get_model("trig");
    const Jet2 rt = jet_apply_coeff(trig, Which::Drift, 0.0, Jet2{0.0, 0.0, 0.0});
    CHECK(rt == Jet2{0.0, 1.0, 0.0});
}

namespace {

// Reference: derivatives of g(theta) = f(theta, S(theta)) for a quadratic
// test path S(theta), via central differences of the (0,0) partial alone.
struct FdPair {
    double first;
    double second;
};

FdPair fd_of_composition(const ModelCoefficients& model, Which which, double theta, double c0,
                         double c1, double c2, double eps) {
    const auto g = [&](double th) {
        const double s = c0 + c1 * th + c2 * th * th;
        return model.eval_partial(which, 0, 0, th, s);
    };
    return {(g(theta + eps) - g(theta - eps)) / (2.0 * eps),
            (g(theta + eps) - 2.0 * g(theta) + g(theta - eps)) / (eps * eps)};
}

}  // namespace

TEST_CASE("jet_apply_coeff matches finite differences of the composed map") {
    std::mt19937_64 gen(31);
    std::uniform_real_distribution<double> coeff(-1.0, 1.0);
    const double u = std::numeric_limits<double>::epsilon();
    for (const char* id : {"trig", "gbm"}) {
        const auto& model = get_model(id);
        for (int trial = 0; trial < 50; ++trial) {
            const double theta = coeff(gen);
            const double c0 = coeff(gen) + 1.5;  // keep gbm paths away from zero
            const double c1 = coeff(gen);
            const double c2 = coeff(gen);
            const Jet2 x{c0 + c1 * theta + c2 * theta * theta, c1 + 2.0 * c2 * theta, 2.0 * c2};
            for (Which which : {Which::Drift, Which::Diffusion}) {
                const Jet2 jet = jet_apply_coeff(model, which, theta, x);
                for (double eps : {1e-3, 1e-4}) {
                    const FdPair fd = fd_of_composition(model, which, theta, c0, c1, c2, eps);
                    CHECK(std::abs(fd.first - jet.v1) <= 50.0 * eps * eps);
                    CHECK(std::abs(fd.second - jet.v2) <=
                          100.0 * eps * eps + 40.0 * u / (eps * eps));
                }
            }
        }
    }
}
