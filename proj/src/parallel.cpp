#include "pathsens/parallel.hpp"

#include <cmath>
#include <stdexcept>
#include <thread>
#include <vector>

namespace pathsens {

int hardware_workers() {
#ifdef _OPENMP
    return omp_get_max_threads();
#else
    const unsigned n = std::thread::hardware_concurrency();
    return n == 0 ? 1 : static_cast<int>(n);
#endif
}

int resolve_workers(int requested) { return requested > 0 ? requested : hardware_workers(); }

namespace {

double pairwise_sum_range(const double* data, std::size_t n) {
    if (n <= 4) {
        double sum = 0.0;
        for (std::size_t i = 0; i < n; ++i) sum += data[i];
        return sum;
    }
    const std::size_t half = n / 2;
    return pairwise_sum_range(data, half) + pairwise_sum_range(data + half, n - half);
}

}  // namespace

double pairwise_sum(std::span<const double> values) {
    return pairwise_sum_range(values.data(), values.size());
}

MeanStdErr mean_and_std_error(std::span<const double> values) {
    const MeanVariance mv = mean_and_variance(values);
    return {mv.mean, std::sqrt(mv.variance / static_cast<double>(values.size()))};
}

MeanVariance mean_and_variance(std::span<const double> values) {
    const std::size_t n = values.size();
    if (n < 2) throw std::invalid_argument("mean_and_variance: need at least two values");
    const double mean = pairwise_sum(values) / static_cast<double>(n);
    std::vector<double> sq(n);
    for (std::size_t i = 0; i < n; ++i) {
        const double d = values[i] - mean;
        sq[i] = d * d;
    }
    const double rss = pairwise_sum(sq);
    return {mean, rss / static_cast<double>(n - 1)};
}

}  // namespace pathsens
