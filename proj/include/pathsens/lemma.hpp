#pragma once

#include <cstddef>
#include <random>
#include <vector>

namespace pathsens {

/// One support point of the joint law of (u_i, v_i) within a component.
struct LemmaAtom {
    double prob = 0.0;
    double u = 0.0;
    double v = 0.0;
};

/// Finite joint distribution of one (u_i, v_i) pair. Components are
/// independent across i.
struct LemmaComponent {
    std::vector<LemmaAtom> atoms;
};

/// Instance of the product-difference moment inequality: k factor pairs and
/// the moment order p.
struct LemmaInstance {
    int p = 2;
    std::vector<LemmaComponent> components;

    std::size_t k() const noexcept { return components.size(); }
};

struct LemmaCheck {
    double lhs = 0.0;   // E |prod u - prod v|^p by exact enumeration
    double rhs = 0.0;   // k^p C_{pk}^{1-1/k} D_{pk}^{1/k}
    bool holds = false; // lhs <= rhs (1 + 1e-12)
};

/// Evaluates both sides of the inequality by enumerating the product
/// distribution. Throws SupportTooLargeError when the joint support exceeds
/// 10^6 points and std::invalid_argument for malformed instances.
LemmaCheck product_lemma_check(const LemmaInstance& instance);

/// Random instance with k components, supports of size <= max_support and
/// values uniform in [-value_range, value_range].
LemmaInstance random_lemma_instance(std::mt19937_64& gen, int k, int p, int max_support = 4,
                                    double value_range = 3.0);

}  // namespace pathsens
