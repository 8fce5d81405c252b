#include <benchmark/benchmark.h>

#include "wildfire/discretization.hpp"
#include "wildfire/kron.hpp"

namespace {

using namespace wildfire;

// Mass-matrix Kronecker solve on an N x N mesh of degree p.
void BM_KronSolve(benchmark::State& state) {
    const auto n = static_cast<int>(state.range(0));
    const auto p = static_cast<int>(state.range(1));
    const auto disc = make_square_discretization(n, p);
    auto rhs = disc.make_grid(1.0);
    for (auto _ : state) {
        kron_solve_inplace(disc.mass_x_lu(), disc.mass_y_lu(), rhs);
        benchmark::DoNotOptimize(rhs.data());
    }
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(rhs.size()));
}
BENCHMARK(BM_KronSolve)->ArgsProduct({{50, 100, 200, 400}, {1, 2, 3}})->Unit(benchmark::kMicrosecond);

void BM_KronApply(benchmark::State& state) {
    const auto n = static_cast<int>(state.range(0));
    const auto disc = make_square_discretization(n, 2);
    const auto T = disc.make_grid(1.0);
    for (auto _ : state) {
        auto out = kron_apply(disc.mass_x(), disc.stiffness_y(), T);
        benchmark::DoNotOptimize(out.data());
    }
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(T.size()));
}
BENCHMARK(BM_KronApply)->Arg(50)->Arg(100)->Arg(200)->Arg(400)->Unit(benchmark::kMicrosecond);

}  // namespace
