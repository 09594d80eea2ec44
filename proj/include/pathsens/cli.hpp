#pragma once

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "pathsens/analysis.hpp"
#include "pathsens/engine.hpp"

namespace pathsens {

enum class Subcommand { Models, Simulate, Converge, Moments, Mlmc, Validate, Lemma };

/// A command-line (or config-file) error; maps to exit code 2.
class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Raised when --help is requested; what() carries the help text.
class HelpRequested : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct RunConfig {
    Subcommand subcommand = Subcommand::Models;
    std::string model_id = "trig";
    double theta = 0.1;
    double s0 = 1.0;
    double ds0 = 0.0;
    double dds0 = 0.0;
    double horizon = 1.0;
    std::size_t base_n = 16;
    int level_lo = 4;
    int level_hi = 9;
    std::vector<int> moment_orders = {2};
    std::size_t n_paths = 10000;
    std::uint64_t base_seed = 0;
    std::vector<Quantity> quantities = {Quantity::Tangent1};
    std::string output = "-";  // "-" = standard output
    double eps = 0.0;          // validate; 0 = default bump
    int workers = 0;           // 0 = all hardware workers
    PayoffKind payoff = PayoffKind::Tangent;
    double strike = 1.0;
    int lemma_k = 2;
    std::size_t lemma_trials = 1000;

    SimConfig sim_config() const;
};

/// Parse argv (without the program name). Flags override config-file entries;
/// unknown keys, malformed numbers and empty level ranges raise UsageError.
RunConfig parse_config(const std::vector<std::string>& args);

/// Execute the configured subcommand; CSV goes to the output path or `out`.
/// Returns the process exit code: 0 success, 1 failed validation,
/// 3 divergence.
int dispatch(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Full front end: parse, dispatch and map errors to exit codes
/// (2 usage, 3 divergence).
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace pathsens
