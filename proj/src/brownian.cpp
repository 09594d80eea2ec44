#include "pathsens/brownian.hpp"

#include <cmath>
#include <stdexcept>

namespace pathsens {

namespace {

constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ULL;

std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t z = (state += kGolden);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

constexpr int kLatticeBits = 32;

}  // namespace

std::uint64_t mix_seed(const SeedSpec& spec) {
    std::uint64_t state = spec.base_seed;
    std::uint64_t mixed = splitmix64(state);
    state = mixed ^ spec.path_index;
    mixed = splitmix64(state);
    return splitmix64(state) ^ mixed;
}

std::mt19937_64 make_stream(const SeedSpec& spec) { return std::mt19937_64(mix_seed(spec)); }

std::uint64_t substream_index(std::uint64_t block, std::uint64_t index) {
    return (block << 40) + index;
}

double quantize_increment(double x) {
    return std::ldexp(std::nearbyint(std::ldexp(x, kLatticeBits)), -kLatticeBits);
}

IncrementGrid sample_increments(const SeedSpec& seed, std::size_t n_steps, double h) {
    if (n_steps == 0) throw std::invalid_argument("sample_increments: n_steps must be >= 1");
    if (!(h > 0.0)) throw std::invalid_argument("sample_increments: h must be > 0");
    std::mt19937_64 gen = make_stream(seed);
    std::normal_distribution<double> normal(0.0, 1.0);
    const double scale = std::sqrt(h);
    IncrementGrid grid;
    grid.h = h;
    grid.increments.resize(n_steps);
    for (double& d : grid.increments) d = quantize_increment(scale * normal(gen));
    return grid;
}

IncrementGrid coarsen(const IncrementGrid& fine) {
    if (fine.steps() % 2 != 0)
        throw std::invalid_argument("coarsen: fine grid must have an even number of steps");
    IncrementGrid coarse;
    coarse.h = 2.0 * fine.h;
    coarse.increments.resize(fine.steps() / 2);
    for (std::size_t m = 0; m < coarse.increments.size(); ++m)
        coarse.increments[m] = fine.increments[2 * m] + fine.increments[2 * m + 1];
    return coarse;
}

std::vector<double> cumulative(const IncrementGrid& grid) {
    std::vector<double> w(grid.steps());
    double sum = 0.0;
    for (std::size_t n = 0; n < w.size(); ++n) {
        sum += grid.increments[n];
        w[n] = sum;
    }
    return w;
}

}  // namespace pathsens
