#ifndef WILDFIRE_CONFIG_HPP_
#define WILDFIRE_CONFIG_HPP_

#include <filesystem>
#include <istream>
#include <optional>
#include <string>
#include <vector>

#include "wildfire/fuel_map.hpp"
#include "wildfire/mms.hpp"
#include "wildfire/physics.hpp"
#include "wildfire/schemes.hpp"

namespace wildfire {

/// Smooth circular ignition: T0 + Tcomb * bump, where the bump is 1 within
/// r/200 and 0 beyond R/200 of the center, in units of distance / 100.
struct ignition_spec {
    double cx = 50.0;
    double cy = 50.0;
    double r = 10.0;
    double R = 30.0;
    double T0 = 300.0;
    double Tcomb = 1200.0;

    friend bool operator==(const ignition_spec&, const ignition_spec&) = default;
};

struct fuel_source {
    // Constant fuel when csv is empty.
    double constant = 1.0;
    std::filesystem::path csv{};
    double availability_scale = 0.725;
    bool strict = false;

    friend bool operator==(const fuel_source&, const fuel_source&) = default;
};

struct scenario_config {
    int nx = 100;
    int ny = 100;
    int degree = 2;
    rectangle domain{};
    scheme_kind scheme = scheme_kind::peaceman_rachford;
    double dt = 1e-6;
    int steps = 120;
    int output_every = 10;
    int workers = 1;
    model_params params{};
    wind_schedule wind{};
    ignition_spec ignition{};
    fuel_source fuel{};
    std::filesystem::path out_dir{"."};
    int samples = 0;  // snapshot resolution N_s per direction; 0 means mesh size
    bool write_pgm = false;
    bool dump_coeffs = false;

    friend bool operator==(const scenario_config&, const scenario_config&) = default;
};

// Throws config_error on any invalid or inconsistent field.
void validate(const scenario_config& config);

/// Applies `key = value` lines onto `config`. '#' starts a comment. Relative
/// fuel CSV paths resolve against base_dir. Unknown keys are rejected.
void apply_config_text(scenario_config& config, std::istream& in,
                       const std::filesystem::path& base_dir = {});
scenario_config load_config(const std::filesystem::path& path, scenario_config base = {});

// Inverse of apply_config_text: every field, full precision.
std::string serialize(const scenario_config& config);

enum class run_mode { simulate, bench, mms };

struct cli_request {
    run_mode mode = run_mode::simulate;
    scenario_config config{};
    std::vector<int> bench_workers{};
    sweep_spec sweep{};
    mms_problem problem = mms_problem::nonlinear;
    bool index_free_modes = false;
    bool show_help = false;
    std::string help{};
};

/// `fire [N p threads] [--config file] [--scheme s] [--dt x] [--steps n]
/// [--fuel value|file.csv] [--out-dir d] [--output-every k] [--bench list]
/// [--mms] ...`. Command-line values override the config file, which
/// overrides the defaults. Throws config_error on any usage problem.
cli_request parse_cli(int argc, const char* const* argv);

}  // namespace wildfire

#endif  // WILDFIRE_CONFIG_HPP_
