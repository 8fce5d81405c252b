#include "wildfire/simulation.hpp"

#include <cmath>

#include "wildfire/assembly.hpp"
#include "wildfire/fuel_map.hpp"
#include "wildfire/snapshot.hpp"

namespace wildfire {

double falloff(double r, double R, double t) noexcept {
    if (t < r) {
        return 1.0;
    }
    if (t > R) {
        return 0.0;
    }
    const double h = (t - r) / (R - r);
    const double v = (h - 1.0) * (h + 1.0);
    return v * v;
}

double ignition_temperature(const ignition_spec& ig, double x, double y) noexcept {
    const double dist = std::hypot(x - ig.cx, y - ig.cy);
    return ig.T0 + ig.Tcomb * falloff(ig.r / 200.0, ig.R / 200.0, dist / 100.0);
}

discretization make_discretization(const scenario_config& c) {
    return discretization{bspline_space{c.degree, c.nx, c.domain.x0, c.domain.x1},
                          bspline_space{c.degree, c.ny, c.domain.y0, c.domain.y1}};
}

sim_state init_state(const scenario_config& config, const discretization& disc, const executor& exec) {
    sim_state state;
    state.T = project(disc, [&](double x, double y) { return ignition_temperature(config.ignition, x, y); }, exec);
    if (config.fuel.csv.empty()) {
        // Constants are reproduced exactly by the partition of unity.
        state.fuel = disc.make_grid(config.fuel.constant);
    } else {
        auto map = load_csv(config.fuel.csv);
        map.set_availability_scale(config.fuel.availability_scale);
        const auto mode = config.fuel.strict ? sample_mode::strict : sample_mode::clamp_edges;
        state.fuel = project(disc, [&](double x, double y) { return sample(map, x, y, config.domain, mode); }, exec);
    }
    state.t = 0.0;
    return state;
}

simulation::simulation(const scenario_config& config, const executor& exec)
: config_{config}
, disc_{std::make_unique<discretization>(make_discretization(config))} {
    validate(config_);
    state_ = init_state(config_, *disc_, exec);
    auto wind = config_.wind.empty() ? wind_schedule::constant({0.0, 0.0}) : config_.wind;
    ctx_ = std::make_unique<scheme_context>(*disc_, config_.params, std::move(wind), scheme_options{}, exec);
}

step_status simulation::advance() {
    const auto status = step(config_.scheme, state_, config_.dt, *ctx_);
    ++steps_;
    return status;
}

run_summary run_scenario(const scenario_config& config, const executor& exec,
                         const std::function<void(const simulation&)>& on_step) {
    simulation sim{config, exec};
    run_summary summary;
    const snapshot_writer writer{sim.disc(), config};
    auto emit = [&](int step) {
        auto files = writer.write(sim.state(), step);
        summary.files.insert(summary.files.end(), files.begin(), files.end());
    };
    emit(0);
    for (int n = 1; n <= config.steps; ++n) {
        if (sim.advance() == step_status::diverged) {
            summary.diverged = true;
            break;
        }
        summary.steps = n;
        if (on_step) {
            on_step(sim);
        }
        const bool periodic = config.output_every > 0 && n % config.output_every == 0;
        if (periodic || n == config.steps) {
            emit(n);
        }
    }
    return summary;
}

}  // namespace wildfire
