#include "wildfire/config.hpp"

#include <charconv>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>

#include <CLI11.hpp>
#include <fmt/format.h>

#include "wildfire/errors.hpp"

namespace wildfire {

namespace {

std::string trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) {
        return {};
    }
    const auto last = s.find_last_not_of(" \t\r");
    return std::string{s.substr(first, last - first + 1)};
}

std::vector<std::string> split_ws(const std::string& s) {
    std::istringstream in{s};
    std::vector<std::string> out;
    for (std::string tok; in >> tok;) {
        out.push_back(tok);
    }
    return out;
}

double to_double(const std::string& s, const std::string& key) {
    double v = 0.0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size()) {
        throw config_error{"'" + key + "': cannot parse number '" + s + "'"};
    }
    return v;
}

int to_int(const std::string& s, const std::string& key) {
    int v = 0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size()) {
        throw config_error{"'" + key + "': cannot parse integer '" + s + "'"};
    }
    return v;
}

bool to_bool(const std::string& s, const std::string& key) {
    if (s == "true" || s == "1" || s == "yes") {
        return true;
    }
    if (s == "false" || s == "0" || s == "no") {
        return false;
    }
    throw config_error{"'" + key + "': expected true/false, got '" + s + "'"};
}

std::vector<double> numbers(const std::string& value, std::size_t count, const std::string& key) {
    const auto toks = split_ws(value);
    if (toks.size() != count) {
        throw config_error{"'" + key + "': expected " + std::to_string(count) + " numbers"};
    }
    std::vector<double> out;
    for (const auto& t : toks) {
        out.push_back(to_double(t, key));
    }
    return out;
}

using param_field = double model_params::*;

const std::map<std::string, param_field>& param_fields() {
    static const std::map<std::string, param_field> fields{
        {"cp", &model_params::cp},
        {"rho", &model_params::rho},
        {"kappa", &model_params::kappa},
        {"sigma", &model_params::sigma},
        {"emissivity", &model_params::emissivity},
        {"ch", &model_params::ch},
        {"hc", &model_params::hc},
        {"cw", &model_params::cw},
        {"chi", &model_params::chi},
        {"t_amb", &model_params::t_amb},
        {"t_ig", &model_params::t_ig},
        {"delta_x", &model_params::delta_x},
        {"delta_z", &model_params::delta_z},
        {"arrhenius", &model_params::arrhenius},
        {"activation_temperature", &model_params::activation_temperature},
        {"molar_mass_ratio", &model_params::molar_mass_ratio},
        {"combustion_scale", &model_params::combustion_scale},
        {"fuel_rate", &model_params::fuel_rate},
        {"fuel_threshold", &model_params::fuel_threshold},
    };
    return fields;
}

void set_fuel(fuel_source& fuel, const std::string& value, const std::filesystem::path& base_dir) {
    const auto toks = split_ws(value);
    if (toks.size() == 2 && toks[0] == "constant") {
        fuel.constant = to_double(toks[1], "fuel");
        fuel.csv.clear();
    } else if (toks.size() == 2 && toks[0] == "csv") {
        std::filesystem::path p{toks[1]};
        fuel.csv = p.is_relative() && !base_dir.empty() ? base_dir / p : p;
    } else {
        throw config_error{"'fuel': expected 'constant <value>' or 'csv <path>'"};
    }
}

void apply_key(scenario_config& c, std::map<int, wind_schedule::segment>& wind, const std::string& key,
               const std::string& value, const std::filesystem::path& base_dir) {
    if (key == "mesh") {
        c.nx = c.ny = to_int(value, key);
    } else if (key == "mesh.nx") {
        c.nx = to_int(value, key);
    } else if (key == "mesh.ny") {
        c.ny = to_int(value, key);
    } else if (key == "degree") {
        c.degree = to_int(value, key);
    } else if (key == "domain") {
        const auto v = numbers(value, 4, key);
        c.domain = rectangle{v[0], v[1], v[2], v[3]};
    } else if (key == "scheme") {
        c.scheme = parse_scheme(value);
    } else if (key == "dt") {
        c.dt = to_double(value, key);
    } else if (key == "steps") {
        c.steps = to_int(value, key);
    } else if (key == "output_every") {
        c.output_every = to_int(value, key);
    } else if (key == "workers") {
        c.workers = to_int(value, key);
    } else if (key.rfind("param.", 0) == 0) {
        const auto name = key.substr(6);
        const auto it = param_fields().find(name);
        if (it == param_fields().end()) {
            throw config_error{"unknown parameter '" + name + "'"};
        }
        c.params.*(it->second) = to_double(value, key);
    } else if (key.rfind("wind.", 0) == 0) {
        const int index = to_int(key.substr(5), key);
        const auto v = numbers(value, 4, key);
        wind[index] = wind_schedule::segment{v[0], v[1], {v[2], v[3]}};
    } else if (key == "ignition") {
        const auto v = numbers(value, 6, key);
        c.ignition = ignition_spec{v[0], v[1], v[2], v[3], v[4], v[5]};
    } else if (key == "fuel") {
        set_fuel(c.fuel, value, base_dir);
    } else if (key == "fuel.scale") {
        c.fuel.availability_scale = to_double(value, key);
    } else if (key == "fuel.strict") {
        c.fuel.strict = to_bool(value, key);
    } else if (key == "out_dir") {
        c.out_dir = value;
    } else if (key == "output.samples") {
        c.samples = to_int(value, key);
    } else if (key == "output.pgm") {
        c.write_pgm = to_bool(value, key);
    } else if (key == "output.coeffs") {
        c.dump_coeffs = to_bool(value, key);
    } else {
        throw config_error{"unknown config key '" + key + "'"};
    }
}

}  // namespace

void validate(const scenario_config& c) {
    if (c.degree < 1) {
        throw config_error{"degree must be >= 1"};
    }
    if (c.nx < 1 || c.ny < 1) {
        throw config_error{"mesh size must be >= 1"};
    }
    if (!(c.domain.x0 < c.domain.x1) || !(c.domain.y0 < c.domain.y1)) {
        throw config_error{"domain must have x0 < x1 and y0 < y1"};
    }
    if (!(c.dt > 0.0)) {
        throw config_error{"dt must be positive"};
    }
    if (c.steps < 0) {
        throw config_error{"steps must be non-negative"};
    }
    if (c.output_every < 0) {
        throw config_error{"output_every must be non-negative"};
    }
    if (c.workers < 1) {
        throw config_error{"workers must be >= 1"};
    }
    if (c.samples < 0) {
        throw config_error{"output.samples must be non-negative"};
    }
    if (!(c.ignition.r >= 0.0) || !(c.ignition.R > c.ignition.r)) {
        throw config_error{"ignition radii must satisfy 0 <= r < R"};
    }
    if (c.fuel.csv.empty() && !(c.fuel.constant >= 0.0 && c.fuel.constant <= 1.0)) {
        throw config_error{"constant fuel must lie in [0, 1]"};
    }
    if (!(c.fuel.availability_scale >= 0.0)) {
        throw config_error{"fuel.scale must be non-negative"};
    }
    if (!c.wind.empty() && !c.wind.covers(0.0, c.steps * c.dt)) {
        throw config_error{"wind schedule does not cover the simulated time interval"};
    }
    validate(c.params);
}

void apply_config_text(scenario_config& config, std::istream& in, const std::filesystem::path& base_dir) {
    std::map<int, wind_schedule::segment> wind;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const auto hash = line.find('#');
        const auto body = trim(line.substr(0, hash));
        if (body.empty()) {
            continue;
        }
        const auto eq = body.find('=');
        if (eq == std::string::npos) {
            throw config_error{"config line " + std::to_string(line_no) + ": expected 'key = value'"};
        }
        const auto key = trim(body.substr(0, eq));
        const auto value = trim(body.substr(eq + 1));
        try {
            apply_key(config, wind, key, value, base_dir);
        } catch (const config_error& e) {
            throw config_error{"config line " + std::to_string(line_no) + ": " + e.what()};
        }
    }
    if (!wind.empty()) {
        std::vector<wind_schedule::segment> segments;
        for (const auto& [index, s] : wind) {
            segments.push_back(s);
        }
        config.wind = wind_schedule{std::move(segments)};
    }
}

scenario_config load_config(const std::filesystem::path& path, scenario_config base) {
    std::ifstream in{path};
    if (!in) {
        throw config_error{"cannot open config file " + path.string()};
    }
    apply_config_text(base, in, path.parent_path());
    return base;
}

std::string serialize(const scenario_config& c) {
    std::string out;
    auto line = [&](const std::string& key, const std::string& value) { out += key + " = " + value + "\n"; };
    auto num = [](double v) { return fmt::format("{:.17g}", v); };

    line("mesh.nx", std::to_string(c.nx));
    line("mesh.ny", std::to_string(c.ny));
    line("degree", std::to_string(c.degree));
    line("domain", fmt::format("{:.17g} {:.17g} {:.17g} {:.17g}", c.domain.x0, c.domain.x1, c.domain.y0, c.domain.y1));
    line("scheme", std::string{to_string(c.scheme)});
    line("dt", num(c.dt));
    line("steps", std::to_string(c.steps));
    line("output_every", std::to_string(c.output_every));
    line("workers", std::to_string(c.workers));
    for (const auto& [name, field] : param_fields()) {
        line("param." + name, num(c.params.*field));
    }
    int index = 0;
    for (const auto& s : c.wind.segments()) {
        line("wind." + std::to_string(index++),
             fmt::format("{:.17g} {:.17g} {:.17g} {:.17g}", s.t_begin, s.t_end, s.velocity.bx, s.velocity.by));
    }
    const auto& ig = c.ignition;
    line("ignition", fmt::format("{:.17g} {:.17g} {:.17g} {:.17g} {:.17g} {:.17g}", ig.cx, ig.cy, ig.r, ig.R, ig.T0,
                                 ig.Tcomb));
    if (c.fuel.csv.empty()) {
        line("fuel", "constant " + num(c.fuel.constant));
    } else {
        line("fuel", "csv " + c.fuel.csv.string());
    }
    line("fuel.scale", num(c.fuel.availability_scale));
    line("fuel.strict", c.fuel.strict ? "true" : "false");
    line("out_dir", c.out_dir.string());
    line("output.samples", std::to_string(c.samples));
    line("output.pgm", c.write_pgm ? "true" : "false");
    line("output.coeffs", c.dump_coeffs ? "true" : "false");
    return out;
}

namespace {

template <typename T, typename Convert>
std::vector<T> parse_list(const std::string& text, const std::string& what, Convert convert) {
    std::vector<T> out;
    std::string_view rest{text};
    while (!rest.empty()) {
        const auto comma = rest.find(',');
        out.push_back(convert(trim(rest.substr(0, comma)), what));
        if (comma == std::string_view::npos) {
            break;
        }
        rest.remove_prefix(comma + 1);
    }
    if (out.empty()) {
        throw config_error{what + ": empty list"};
    }
    return out;
}

}  // namespace

cli_request parse_cli(int argc, const char* const* argv) {
    CLI::App app{"Wildfire simulation with tensor-product B-splines and alternating-direction time stepping",
                 "fire"};
    app.allow_extras(false);

    std::vector<std::string> positional;
    std::optional<std::string> config_path, scheme, fuel, out_dir, bench, mms_meshes, mms_schemes, mms_dts,
        mms_problem_name;
    std::optional<double> dt;
    std::optional<int> steps, output_every;
    bool mms = false;
    bool dump_coeffs = false;
    bool pgm = false;
    bool index_free = false;

    app.add_option("positional", positional, "N p threads")->expected(0, 3);
    app.add_option("--config", config_path, "scenario config file");
    app.add_option("--scheme", scheme, "explicit | pr | strang");
    app.add_option("--dt", dt, "time step [s]");
    app.add_option("--steps", steps, "number of time steps");
    app.add_option("--fuel", fuel, "constant fuel value or path to a fuel CSV");
    app.add_option("--out-dir", out_dir, "output directory");
    app.add_option("--output-every", output_every, "snapshot period in steps (0: final only)");
    app.add_option("--bench", bench, "comma-separated worker counts for the strong-scaling benchmark");
    app.add_flag("--mms", mms, "run the manufactured-solution time-step sweep");
    app.add_option("--mms-meshes", mms_meshes, "comma-separated mesh sizes for --mms (default 50,100,200)");
    app.add_option("--mms-schemes", mms_schemes, "comma-separated schemes for --mms");
    app.add_option("--mms-dts", mms_dts, "comma-separated time steps for --mms");
    app.add_option("--mms-problem", mms_problem_name, "linear | nonlinear");
    app.add_flag("--mms-index-free", index_free, "use mode frequencies without the mode indices");
    app.add_flag("--dump-coeffs", dump_coeffs, "also write raw spline coefficients");
    app.add_flag("--pgm", pgm, "also write grayscale PGM images of each snapshot");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        cli_request req;
        req.show_help = true;
        req.help = app.help();
        return req;
    } catch (const CLI::ParseError& e) {
        throw config_error{e.what()};
    }

    cli_request req;
    auto& c = req.config;
    if (mms) {
        // Config-file parameters apply on top of the manufactured-solution set.
        c.params = mms_default_params();
    }
    if (config_path) {
        c = load_config(*config_path, c);
    }
    if (!positional.empty()) {
        c.nx = c.ny = to_int(positional[0], "N");
    }
    if (positional.size() > 1) {
        c.degree = to_int(positional[1], "p");
    }
    if (positional.size() > 2) {
        c.workers = to_int(positional[2], "threads");
    }
    if (scheme) {
        c.scheme = parse_scheme(*scheme);
    }
    if (dt) {
        c.dt = *dt;
    }
    if (steps) {
        c.steps = *steps;
    }
    if (output_every) {
        c.output_every = *output_every;
    }
    if (out_dir) {
        c.out_dir = *out_dir;
    }
    if (fuel) {
        double value = 0.0;
        const auto [ptr, ec] = std::from_chars(fuel->data(), fuel->data() + fuel->size(), value);
        if (ec == std::errc{} && ptr == fuel->data() + fuel->size()) {
            c.fuel.constant = value;
            c.fuel.csv.clear();
        } else {
            if (!std::filesystem::exists(*fuel)) {
                throw config_error{"fuel file not found: " + *fuel};
            }
            c.fuel.csv = *fuel;
        }
    }
    c.dump_coeffs = c.dump_coeffs || dump_coeffs;
    c.write_pgm = c.write_pgm || pgm;

    if (bench && mms) {
        throw config_error{"--bench and --mms are mutually exclusive"};
    }
    if (bench) {
        req.mode = run_mode::bench;
        req.bench_workers = parse_list<int>(*bench, "--bench", [](const std::string& s, const std::string& w) {
            const int v = to_int(s, w);
            if (v < 1) {
                throw config_error{w + ": worker counts must be >= 1"};
            }
            return v;
        });
    }
    if (mms) {
        req.mode = run_mode::mms;
        req.sweep.degree = c.degree;
        if (mms_meshes) {
            req.sweep.meshes = parse_list<int>(*mms_meshes, "--mms-meshes", to_int);
        }
        if (mms_schemes) {
            req.sweep.schemes = parse_list<scheme_kind>(
                *mms_schemes, "--mms-schemes", [](const std::string& s, const std::string&) { return parse_scheme(s); });
        }
        if (mms_dts) {
            req.sweep.dts = parse_list<double>(*mms_dts, "--mms-dts", to_double);
        }
        if (mms_problem_name) {
            if (*mms_problem_name == "linear") {
                req.problem = mms_problem::linear;
            } else if (*mms_problem_name == "nonlinear") {
                req.problem = mms_problem::nonlinear;
            } else {
                throw config_error{"--mms-problem: expected linear or nonlinear"};
            }
        }
        req.index_free_modes = index_free;
    }
    validate(c);
    return req;
}

}  // namespace wildfire
