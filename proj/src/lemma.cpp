#include "pathsens/lemma.hpp"

#include <cmath>
#include <stdexcept>

#include "pathsens/errors.hpp"

namespace pathsens {

namespace {

constexpr double kHoldsSlack = 1e-12;
constexpr std::size_t kMaxJointSupport = 1000000;

void validate(const LemmaInstance& instance) {
    if (instance.p < 1) throw std::invalid_argument("product_lemma_check: p must be >= 1");
    if (instance.components.empty())
        throw std::invalid_argument("product_lemma_check: need at least one component");
    std::size_t joint = 1;
    for (const auto& component : instance.components) {
        if (component.atoms.empty())
            throw std::invalid_argument("product_lemma_check: empty component support");
        double total = 0.0;
        for (const auto& atom : component.atoms) {
            if (!(atom.prob > 0.0))
                throw std::invalid_argument("product_lemma_check: probabilities must be positive");
            if (!std::isfinite(atom.u) || !std::isfinite(atom.v))
                throw std::invalid_argument("product_lemma_check: support values must be finite");
            total += atom.prob;
        }
        if (std::abs(total - 1.0) > 1e-9)
            throw std::invalid_argument("product_lemma_check: probabilities must sum to 1");
        if (joint > kMaxJointSupport / component.atoms.size())
            throw SupportTooLargeError("product_lemma_check: joint support exceeds 10^6 points");
        joint *= component.atoms.size();
    }
}

}  // namespace

LemmaCheck product_lemma_check(const LemmaInstance& instance) {
    validate(instance);
    const std::size_t k = instance.k();
    const double p = static_cast<double>(instance.p);
    const double pk = p * static_cast<double>(k);

    // Per-component moments E|u|^{pk}, E|v|^{pk}, E|u-v|^{pk}.
    double c_pk = 0.0;
    double d_pk = 0.0;
    for (const auto& component : instance.components) {
        double mu = 0.0;
        double mv = 0.0;
        double md = 0.0;
        for (const auto& atom : component.atoms) {
            mu += atom.prob * std::pow(std::abs(atom.u), pk);
            mv += atom.prob * std::pow(std::abs(atom.v), pk);
            md += atom.prob * std::pow(std::abs(atom.u - atom.v), pk);
        }
        c_pk = std::max(c_pk, std::max(mu, mv));
        d_pk = std::max(d_pk, md);
    }

    // lhs by enumeration of the product distribution.
    std::vector<std::size_t> choice(k, 0);
    double lhs = 0.0;
    while (true) {
        double prob = 1.0;
        double prod_u = 1.0;
        double prod_v = 1.0;
        for (std::size_t i = 0; i < k; ++i) {
            const LemmaAtom& atom = instance.components[i].atoms[choice[i]];
            prob *= atom.prob;
            prod_u *= atom.u;
            prod_v *= atom.v;
        }
        lhs += prob * std::pow(std::abs(prod_u - prod_v), p);

        std::size_t i = 0;
        while (i < k && ++choice[i] == instance.components[i].atoms.size()) {
            choice[i] = 0;
            ++i;
        }
        if (i == k) break;
    }

    LemmaCheck result;
    result.lhs = lhs;
    const double kd = static_cast<double>(k);
    result.rhs = std::pow(kd, p) * std::pow(c_pk, 1.0 - 1.0 / kd) * std::pow(d_pk, 1.0 / kd);
    result.holds = lhs <= result.rhs * (1.0 + kHoldsSlack);
    return result;
}

LemmaInstance random_lemma_instance(std::mt19937_64& gen, int k, int p, int max_support,
                                    double value_range) {
    if (k < 1 || max_support < 1)
        throw std::invalid_argument("random_lemma_instance: k and max_support must be >= 1");
    std::uniform_int_distribution<int> size_dist(1, max_support);
    std::uniform_real_distribution<double> value_dist(-value_range, value_range);
    std::uniform_real_distribution<double> weight_dist(0.1, 1.0);

    LemmaInstance instance;
    instance.p = p;
    instance.components.resize(static_cast<std::size_t>(k));
    for (auto& component : instance.components) {
        const int size = size_dist(gen);
        component.atoms.resize(static_cast<std::size_t>(size));
        double total = 0.0;
        for (auto& atom : component.atoms) {
            atom.prob = weight_dist(gen);
            atom.u = value_dist(gen);
            atom.v = value_dist(gen);
            total += atom.prob;
        }
        for (auto& atom : component.atoms) atom.prob /= total;
    }
    return instance;
}

}  // namespace pathsens
