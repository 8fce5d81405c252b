#ifndef WILDFIRE_BENCH_HPP_
#define WILDFIRE_BENCH_HPP_

#include <ostream>
#include <vector>

#include "wildfire/config.hpp"

namespace wildfire {

struct bench_row {
    int workers;
    int degree;
    int mesh;
    int steps;
    double seconds;
    double speedup;
    double efficiency;
};

/// Strong-scaling table: times config.steps steps (no output) once per entry
/// of worker_counts. Speedup is relative to the first single-worker timing,
/// measured separately when the list has no 1; rows with one worker report
/// speedup 1 by definition.
std::vector<bench_row> run_bench(const scenario_config& config, const std::vector<int>& worker_counts);

// workers,p,mesh,steps,seconds,speedup,efficiency
void write_bench_csv(std::ostream& out, const std::vector<bench_row>& rows);

}  // namespace wildfire

#endif  // WILDFIRE_BENCH_HPP_
