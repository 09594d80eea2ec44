#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

namespace pathsens {

/// Lookup of a model id that is not in the registry.
class RegistryError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Request for a coefficient partial of total order > 2 (or negative order).
class UnsupportedOrderError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A simulated state became non-finite. Carries the step index at which the
/// blow-up was detected and, when raised from a Monte Carlo driver, the index
/// of the offending path.
class DivergenceError : public std::runtime_error {
public:
    explicit DivergenceError(std::size_t step,
                             std::optional<std::uint64_t> path_index = std::nullopt)
        : std::runtime_error(describe(step, path_index)),
          step_(step),
          path_index_(path_index) {}

    std::size_t step() const noexcept { return step_; }
    std::optional<std::uint64_t> path_index() const noexcept { return path_index_; }

private:
    static std::string describe(std::size_t step, std::optional<std::uint64_t> path_index) {
        std::string msg = "state became non-finite at step " + std::to_string(step);
        if (path_index) msg += " (path " + std::to_string(*path_index) + ")";
        return msg;
    }

    std::size_t step_;
    std::optional<std::uint64_t> path_index_;
};

/// Rate fit asked for with fewer than three usable records.
class InsufficientDataError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Product-lemma instance whose joint support is too large to enumerate.
class SupportTooLargeError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace pathsens
