#ifndef WILDFIRE_SIMULATION_HPP_
#define WILDFIRE_SIMULATION_HPP_

#include <filesystem>
#include <functional>
#include <memory>
#include <vector>

#include "wildfire/config.hpp"
#include "wildfire/discretization.hpp"
#include "wildfire/parallel.hpp"
#include "wildfire/schemes.hpp"

namespace wildfire {

// 1 for t < r, 0 for t > R, ((h - 1)(h + 1))^2 with h = (t - r) / (R - r) between.
double falloff(double r, double R, double t) noexcept;

// T0 + Tcomb * falloff(r/200, R/200, dist(p, center)/100).
double ignition_temperature(const ignition_spec& ignition, double x, double y) noexcept;

discretization make_discretization(const scenario_config& config);

// Projected ignition temperature and fuel source. Fuel CSV errors propagate.
sim_state init_state(const scenario_config& config, const discretization& disc,
                     const executor& exec = serial_executor());

/// One configured run: discretization, state and scheme context.
class simulation {
public:
    simulation(const scenario_config& config, const executor& exec);

    const scenario_config& config() const noexcept { return config_; }
    const discretization& disc() const noexcept { return *disc_; }
    const sim_state& state() const noexcept { return state_; }
    sim_state& state() noexcept { return state_; }
    int steps_taken() const noexcept { return steps_; }

    step_status advance();

private:
    scenario_config config_;
    std::unique_ptr<discretization> disc_;
    sim_state state_;
    std::unique_ptr<scheme_context> ctx_;
    int steps_ = 0;
};

struct run_summary {
    int steps = 0;
    bool diverged = false;
    std::vector<std::filesystem::path> files{};
};

/// Runs config.steps steps, writing snapshots at step 0, every output_every
/// steps and after the last step. A diverged step stops the run.
run_summary run_scenario(const scenario_config& config, const executor& exec,
                         const std::function<void(const simulation&)>& on_step = {});

}  // namespace wildfire

#endif  // WILDFIRE_SIMULATION_HPP_
