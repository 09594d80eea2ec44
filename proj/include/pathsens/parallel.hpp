#pragma once

#include <cstddef>
#include <exception>
#include <limits>
#include <span>
#include <utility>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace pathsens {

/// Number of workers the host offers.
int hardware_workers();

/// Map a requested worker count (<= 0 means "use hardware") to an effective one.
int resolve_workers(int requested);

/// Serial reference for the path fan-out: body(i) for i in [0, n).
template <typename Body>
void run_paths_serial(std::size_t n, Body&& body) {
    for (std::size_t i = 0; i < n; ++i) body(i);
}

/// OpenMP fan-out of body(i) over i in [0, n). Each iteration must write only
/// to its own pre-assigned slots; results are then independent of the worker
/// count and schedule. Exceptions are captured per iteration and the one with
/// the smallest path index is rethrown after the loop.
template <typename Body>
void run_paths(std::size_t n, int workers, Body&& body) {
    workers = resolve_workers(workers);
#ifdef _OPENMP
    if (workers > 1 && n > 1) {
        std::exception_ptr first_error = nullptr;
        std::size_t first_error_index = std::numeric_limits<std::size_t>::max();
#pragma omp parallel for schedule(static) num_threads(workers)
        for (long long i = 0; i < static_cast<long long>(n); ++i) {
            try {
                body(static_cast<std::size_t>(i));
            } catch (...) {
#pragma omp critical(pathsens_run_paths_error)
                {
                    if (static_cast<std::size_t>(i) < first_error_index) {
                        first_error_index = static_cast<std::size_t>(i);
                        first_error = std::current_exception();
                    }
                }
            }
        }
        if (first_error) std::rethrow_exception(first_error);
        return;
    }
#endif
    run_paths_serial(n, std::forward<Body>(body));
}

/// Deterministic pairwise-tree sum over a slot array; independent of how the
/// slots were filled.
double pairwise_sum(std::span<const double> values);

struct MeanStdErr {
    double mean = 0.0;
    double std_error = 0.0;
};

/// Two-pass mean and standard error of the mean, both via pairwise sums.
/// Requires at least two values.
MeanStdErr mean_and_std_error(std::span<const double> values);

struct MeanVariance {
    double mean = 0.0;
    double variance = 0.0;  // sample variance, n - 1 denominator
};

MeanVariance mean_and_variance(std::span<const double> values);

}  // namespace pathsens
