// Times the strong-error kernel serially and with OpenMP workers and checks
// that both produce identical estimates.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <string>

#include "pathsens/analysis.hpp"
#include "pathsens/models.hpp"
#include "pathsens/parallel.hpp"

namespace {

double seconds_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

}  // namespace

int main(int argc, char** argv) {
    std::size_t n_paths = 20000;
    int level = 5;
    if (argc > 1) n_paths = std::strtoull(argv[1], nullptr, 10);
    if (argc > 2) level = std::atoi(argv[2]);

    const pathsens::ModelCoefficients& model = pathsens::get_model("trig");
    pathsens::SimConfig base;
    base.n_steps = 16;
    const pathsens::Quantity quantities[] = {pathsens::Quantity::Tangent1,
                                             pathsens::Quantity::Tangent2};
    const int ps[] = {2};

    const int workers = pathsens::hardware_workers();
    std::printf("strong-error benchmark: trig model, level %d, %zu paths, %d hardware workers\n",
                level, n_paths, workers);

    auto start = std::chrono::steady_clock::now();
    const auto serial = pathsens::estimate_strong_error_table(model, base, quantities, ps, level,
                                                              {0, n_paths, 1});
    const double t_serial = seconds_since(start);

    start = std::chrono::steady_clock::now();
    const auto parallel = pathsens::estimate_strong_error_table(model, base, quantities, ps, level,
                                                                {0, n_paths, workers});
    const double t_parallel = seconds_since(start);

    for (std::size_t i = 0; i < serial.size(); ++i) {
        if (serial[i].estimate != parallel[i].estimate ||
            serial[i].std_error != parallel[i].std_error) {
            std::printf("FAIL: serial and parallel estimates differ at row %zu\n", i);
            return 1;
        }
    }

    std::printf("serial:   %8.3f s\n", t_serial);
    std::printf("parallel: %8.3f s  (speedup %.2fx, estimates identical)\n", t_parallel,
                t_serial / t_parallel);
    return 0;
}
