#include "wildfire/bench.hpp"

#include <algorithm>
#include <chrono>
#include <iterator>

#include <fmt/format.h>

#include "wildfire/simulation.hpp"

namespace wildfire {

namespace {

double time_run(const scenario_config& config, int workers) {
    const executor exec{workers};
    simulation sim{config, exec};
    const auto start = std::chrono::steady_clock::now();
    for (int n = 0; n < config.steps; ++n) {
        if (sim.advance() == step_status::diverged) {
            break;
        }
    }
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

}  // namespace

std::vector<bench_row> run_bench(const scenario_config& config, const std::vector<int>& worker_counts) {
    std::vector<double> times;
    for (int w : worker_counts) {
        times.push_back(time_run(config, w));
    }
    const auto one = std::find(worker_counts.begin(), worker_counts.end(), 1);
    const double baseline =
        one != worker_counts.end() ? times[static_cast<std::size_t>(one - worker_counts.begin())] : time_run(config, 1);

    std::vector<bench_row> rows;
    for (std::size_t k = 0; k < worker_counts.size(); ++k) {
        const int w = worker_counts[k];
        const double speedup = w == 1 ? 1.0 : baseline / times[k];
        rows.push_back({w, config.degree, config.nx, config.steps, times[k], speedup, speedup / w});
    }
    return rows;
}

void write_bench_csv(std::ostream& out, const std::vector<bench_row>& rows) {
    fmt::memory_buffer buf;
    fmt::format_to(std::back_inserter(buf), "workers,p,mesh,steps,seconds,speedup,efficiency\n");
    for (const auto& r : rows) {
        fmt::format_to(std::back_inserter(buf), "{},{},{}x{},{},{:.6f},{:.4f},{:.4f}\n", r.workers, r.degree, r.mesh,
                       r.mesh, r.steps, r.seconds, r.speedup, r.efficiency);
    }
    out.write(buf.data(), static_cast<std::streamsize>(buf.size()));
}

}  // namespace wildfire
