#include <exception>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <stdexcept>
#include <string>

#include <fmt/format.h>

#include "wildfire/bench.hpp"
#include "wildfire/config.hpp"
#include "wildfire/errors.hpp"
#include "wildfire/mms.hpp"
#include "wildfire/parallel.hpp"
#include "wildfire/simulation.hpp"

namespace {

int simulate(const wildfire::scenario_config& config) {
    const wildfire::executor exec{config.workers};
    const auto summary = wildfire::run_scenario(config, exec, [](const wildfire::simulation& sim) {
        fmt::print("step {:5d}  t = {:.6g}\n", sim.steps_taken(), sim.state().t);
    });
    fmt::print("wrote {} files to {}\n", summary.files.size(), config.out_dir.string());
    if (summary.diverged) {
        fmt::print(stderr, "simulation diverged after {} steps\n", summary.steps);
        return 3;
    }
    return 0;
}

int mms(const wildfire::cli_request& req) {
    const auto& config = req.config;
    wildfire::mms_config mc;
    mc.params = config.params;
    mc.problem = req.problem;
    mc.solution.index_free = req.index_free_modes;
    if (!config.wind.empty()) {
        mc.wind = config.wind.at(0.0);
    }
    const wildfire::executor exec{config.workers};
    const auto records = wildfire::run_sweep(req.sweep, mc, exec);

    std::filesystem::create_directories(config.out_dir);
    const auto csv_path = config.out_dir / "mms_sweep.csv";
    const auto plot_path = config.out_dir / "mms_sweep.dat";
    std::ofstream csv{csv_path};
    std::ofstream plot{plot_path};
    if (!csv || !plot) {
        throw std::runtime_error{"cannot write sweep output in " + config.out_dir.string()};
    }
    wildfire::write_sweep_csv(csv, records);
    wildfire::write_plot_data(plot, records);
    wildfire::write_sweep_csv(std::cout, records);
    for (auto scheme : req.sweep.schemes) {
        for (int mesh : req.sweep.meshes) {
            const auto order = wildfire::fit_order(records, scheme, mesh);
            fmt::print("# {} {}x{}: fitted order {}\n", wildfire::to_string(scheme), mesh, mesh,
                       order ? fmt::format("{:.3f}", *order) : std::string{"n/a"});
        }
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        const auto req = wildfire::parse_cli(argc, argv);
        if (req.show_help) {
            std::cout << req.help;
            return 0;
        }
        switch (req.mode) {
        case wildfire::run_mode::bench:
            wildfire::write_bench_csv(std::cout, wildfire::run_bench(req.config, req.bench_workers));
            return 0;
        case wildfire::run_mode::mms:
            return mms(req);
        case wildfire::run_mode::simulate:
            return simulate(req.config);
        }
    } catch (const wildfire::config_error& e) {
        fmt::print(stderr, "usage error: {}\nrun 'fire --help' for usage\n", e.what());
        return 2;
    } catch (const std::exception& e) {
        fmt::print(stderr, "error: {}\n", e.what());
        return 1;
    }
    return 0;
}
