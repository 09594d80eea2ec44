#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

namespace pathsens {

/// Identifies one Brownian path stream. The mapping (base_seed, path_index)
/// -> generator state is a pure function, so paths can be sampled on any
/// number of workers in any order with identical results.
struct SeedSpec {
    std::uint64_t base_seed = 0;
    std::uint64_t path_index = 0;
};

/// Fixed 64-bit mix of (base_seed, path_index) into a generator seed.
std::uint64_t mix_seed(const SeedSpec& spec);

/// Fresh generator for the given stream.
std::mt19937_64 make_stream(const SeedSpec& spec);

/// Path index for experiment `block`, path `index` within it. Distinct
/// blocks never collide for block < 2^24 and index < 2^40.
std::uint64_t substream_index(std::uint64_t block, std::uint64_t index);

/// Brownian increments on a uniform grid, increment n ~ N(0, h).
/// Sampled increments lie on a 2^-32 lattice, so every partial sum a path or
/// a coarsening can form is exact in double precision; coarse and fine grids
/// therefore couple with no rounding discrepancy at shared grid points.
struct IncrementGrid {
    double h = 0.0;
    std::vector<double> increments;

    std::size_t steps() const noexcept { return increments.size(); }
};

/// Snap a value to the increment lattice.
double quantize_increment(double x);

/// N independent N(0, h) draws for the stream. Identical inputs give
/// bitwise-identical output. Throws std::invalid_argument for n_steps = 0 or
/// h <= 0.
IncrementGrid sample_increments(const SeedSpec& seed, std::size_t n_steps, double h);

/// Pairwise-sum coarsening: result.h = 2 h, result[m] = fine[2m] + fine[2m+1].
/// Throws std::invalid_argument when the fine step count is odd.
IncrementGrid coarsen(const IncrementGrid& fine);

/// Partial sums W_n = sum_{m <= n} increments[m] at t_n = (n+1) h, n = 0..N-1.
std::vector<double> cumulative(const IncrementGrid& grid);

}  // namespace pathsens
