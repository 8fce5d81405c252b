#include "wildfire/mms.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include <fmt/format.h>
#include <fmt/ostream.h>

#include "wildfire/assembly.hpp"
#include "wildfire/errors.hpp"

namespace wildfire {

namespace {

double frequency(const manufactured_solution& sol, int index) {
    return 2.0 * std::numbers::pi * (sol.index_free ? 1 : index) / sol.length;
}

}  // namespace

exact_eval exact_value(const manufactured_solution& sol, double x, double y, double t) {
    exact_eval r{sol.offset, 0.0, 0.0, 0.0, 0.0, 0.0};
    for (const auto& m : sol.modes) {
        const double kx = frequency(sol, m.nx);
        const double ky = frequency(sol, m.ny);
        const double decay = m.amplitude * std::exp(-m.lambda * t);
        const double X = 1.0 - std::cos(kx * x);
        const double Y = 1.0 - std::cos(ky * y);
        const double Xd = kx * std::sin(kx * x);
        const double Yd = ky * std::sin(ky * y);
        const double Xdd = kx * kx * std::cos(kx * x);
        const double Ydd = ky * ky * std::cos(ky * y);
        r.u += decay * X * Y;
        r.ux += decay * Xd * Y;
        r.uy += decay * X * Yd;
        r.uxx += decay * Xdd * Y;
        r.uyy += decay * X * Ydd;
        r.ut += -m.lambda * decay * X * Y;
    }
    return r;
}

double manufactured_forcing(const manufactured_solution& sol, double x, double y, double t,
                            const model_params& params, wind_velocity b, mms_problem problem) {
    const auto c = derive(params);
    const auto e = exact_value(sol, x, y, t);
    const double lap = e.uxx + e.uyy;
    double f = e.ut + c.advection * (b.bx * e.ux + b.by * e.uy) - c.diffusion * lap - c.reaction * e.u;
    if (problem == mms_problem::nonlinear) {
        const double u2 = e.u * e.u;
        // div(u^3 grad u) = 3 u^2 |grad u|^2 + u^3 lap u
        const double nl_diff = c.nonlinear_diffusion * (3.0 * u2 * (e.ux * e.ux + e.uy * e.uy) + u2 * e.u * lap);
        const double ignition = ignited(e.u, 1.0, params)
                                    ? c.ignition * e.u * std::exp(-params.activation_temperature / e.u)
                                    : 0.0;
        f -= nl_diff + ignition + c.forcing - c.radiation * u2 * u2;
    }
    return f;
}

error_integrator::error_integrator(const discretization& disc, const manufactured_solution& sol)
: disc_{&disc}
, sol_{sol}
, tx_{tabulate(disc.space_x(), gauss_legendre(disc.degree() + 2))}
, ty_{tabulate(disc.space_y(), gauss_legendre(disc.degree() + 2))} {
    const auto nqx = tx_.points.size();
    const auto nqy = ty_.points.size();
    mode_x_.resize(sol_.modes.size() * nqx);
    mode_y_.resize(sol_.modes.size() * nqy);
    for (std::size_t m = 0; m < sol_.modes.size(); ++m) {
        const double kx = frequency(sol_, sol_.modes[m].nx);
        const double ky = frequency(sol_, sol_.modes[m].ny);
        for (std::size_t k = 0; k < nqx; ++k) {
            mode_x_[m * nqx + k] = 1.0 - std::cos(kx * tx_.points[k]);
        }
        for (std::size_t k = 0; k < nqy; ++k) {
            mode_y_[m * nqy + k] = 1.0 - std::cos(ky * ty_.points[k]);
        }
    }
}

double error_integrator::relative_error(const coefficient_grid& state, double t) const {
    if (!state.all_finite()) {
        return std::numeric_limits<double>::quiet_NaN();
    }
    const int n = disc_->degree() + 1;
    const auto nqx = tx_.points.size();
    const auto nqy = ty_.points.size();
    std::vector<double> decay(sol_.modes.size());
    for (std::size_t m = 0; m < sol_.modes.size(); ++m) {
        decay[m] = sol_.modes[m].amplitude * std::exp(-sol_.modes[m].lambda * t);
    }

    double err2 = 0.0;
    double ref2 = 0.0;
    std::vector<double> partial(n);
    for (int ex = 0; ex < tx_.elements; ++ex) {
        for (int ey = 0; ey < ty_.elements; ++ey) {
            for (int qx = 0; qx < tx_.points_per_element; ++qx) {
                const auto kx = tx_.at(ex, qx);
                const double* Bx = tx_.value_row(ex, qx);
                for (int qy = 0; qy < ty_.points_per_element; ++qy) {
                    const auto ky = ty_.at(ey, qy);
                    const double* By = ty_.value_row(ey, qy);
                    double uh = 0.0;
                    for (int a = 0; a < n; ++a) {
                        double s = 0.0;
                        for (int b = 0; b < n; ++b) {
                            s += state(static_cast<std::size_t>(ex + a), static_cast<std::size_t>(ey + b)) * By[b];
                        }
                        uh += Bx[a] * s;
                    }
                    double u = sol_.offset;
                    for (std::size_t m = 0; m < decay.size(); ++m) {
                        u += decay[m] * mode_x_[m * nqx + kx] * mode_y_[m * nqy + ky];
                    }
                    const double w = tx_.weights[kx] * ty_.weights[ky];
                    err2 += w * (uh - u) * (uh - u);
                    ref2 += w * u * u;
                }
            }
        }
    }
    return std::sqrt(err2 / ref2);
}

double relative_error(const discretization& disc, const coefficient_grid& state, const manufactured_solution& sol,
                      double t) {
    return error_integrator{disc, sol}.relative_error(state, t);
}

model_params mms_default_params() {
    model_params p;
    p.emissivity = 5e-4;
    p.arrhenius = 1e-6;
    return p;
}

error_record run_case(scheme_kind scheme, int mesh, int degree, double dt, const mms_config& config,
                      const executor& exec) {
    if (!(dt > 0.0) || !(config.horizon > 0.0)) {
        throw config_error{"run_case: dt and horizon must be positive"};
    }
    const auto disc = make_square_discretization(mesh, degree, 0.0, config.solution.length);
    const auto& sol = config.solution;
    const error_integrator errors{disc, sol};

    scheme_options options;
    options.update_fuel = false;
    options.nonlinear_terms = config.problem == mms_problem::nonlinear;
    options.source = [&](double x, double y, double t) {
        return manufactured_forcing(sol, x, y, t, config.params, config.wind, config.problem);
    };
    scheme_context ctx{disc, config.params, wind_schedule::constant(config.wind), options, exec};

    sim_state state{project(disc, [&](double x, double y) { return exact_value(sol, x, y, 0.0).u; }, exec),
                    disc.make_grid(1.0), 0.0};

    const auto steps = static_cast<int>(std::lround(config.horizon / dt));
    error_record rec{scheme, mesh, degree, dt, 0.0, 0.0, false};
    double prev = errors.relative_error(state.T, 0.0);
    double integral = 0.0;
    for (int n = 1; n <= steps; ++n) {
        const auto status = step(scheme, state, dt, ctx);
        const double e = status == step_status::ok ? errors.relative_error(state.T, n * dt)
                                                   : std::numeric_limits<double>::quiet_NaN();
        if (!std::isfinite(e) || e > config.divergence_threshold) {
            rec.diverged = true;
            break;
        }
        rec.error_max = std::max(rec.error_max, e);
        integral += 0.5 * dt * (prev + e);
        prev = e;
    }
    if (rec.diverged) {
        rec.error_max = std::numeric_limits<double>::quiet_NaN();
        rec.error_avg = std::numeric_limits<double>::quiet_NaN();
    } else {
        rec.error_avg = integral / (steps * dt);
    }
    return rec;
}

std::vector<error_record> run_sweep(const sweep_spec& sweep, const mms_config& config, const executor& exec) {
    std::vector<error_record> out;
    for (int mesh : sweep.meshes) {
        for (auto scheme : sweep.schemes) {
            for (double dt : sweep.dts) {
                out.push_back(run_case(scheme, mesh, sweep.degree, dt, config, exec));
            }
        }
    }
    return out;
}

namespace {

std::vector<const error_record*> stable_series(const std::vector<error_record>& records, scheme_kind scheme,
                                               int mesh) {
    std::vector<const error_record*> s;
    for (const auto& r : records) {
        if (r.scheme == scheme && r.mesh == mesh && !r.diverged) {
            s.push_back(&r);
        }
    }
    std::sort(s.begin(), s.end(), [](const error_record* a, const error_record* b) { return a->dt < b->dt; });
    return s;
}

}  // namespace

std::optional<double> fit_order(const std::vector<error_record>& records, scheme_kind scheme, int mesh, int count) {
    const auto series = stable_series(records, scheme, mesh);
    if (static_cast<int>(series.size()) < count || count < 2) {
        return std::nullopt;
    }
    double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
    for (int k = 0; k < count; ++k) {
        const double x = std::log(series[k]->dt);
        const double y = std::log(series[k]->error_max);
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
    }
    return (count * sxy - sx * sy) / (count * sxx - sx * sx);
}

std::optional<double> largest_stable_dt(const std::vector<error_record>& records, scheme_kind scheme, int mesh) {
    const auto series = stable_series(records, scheme, mesh);
    if (series.empty()) {
        return std::nullopt;
    }
    return series.back()->dt;
}

const error_record* find_record(const std::vector<error_record>& records, scheme_kind scheme, int mesh, double dt) {
    for (const auto& r : records) {
        if (r.scheme == scheme && r.mesh == mesh && r.dt == dt) {
            return &r;
        }
    }
    return nullptr;
}

void write_sweep_csv(std::ostream& out, const std::vector<error_record>& records) {
    out << "scheme,mesh,p,dt,error_max,error_avg,diverged\n";
    for (const auto& r : records) {
        if (r.diverged) {
            fmt::print(out, "{},{}x{},{},{:.17g},,,1\n", to_string(r.scheme), r.mesh, r.mesh, r.degree, r.dt);
        } else {
            fmt::print(out, "{},{}x{},{},{:.17g},{:.17g},{:.17g},0\n", to_string(r.scheme), r.mesh, r.mesh, r.degree,
                       r.dt, r.error_max, r.error_avg);
        }
    }
}

void write_plot_data(std::ostream& out, const std::vector<error_record>& records) {
    std::vector<std::pair<scheme_kind, int>> series;
    for (const auto& r : records) {
        const std::pair key{r.scheme, r.mesh};
        if (std::find(series.begin(), series.end(), key) == series.end()) {
            series.push_back(key);
        }
    }
    bool first = true;
    for (const auto& [scheme, mesh] : series) {
        if (!first) {
            out << "\n\n";
        }
        first = false;
        fmt::print(out, "# scheme={} mesh={}x{}\n# dt error_max\n", to_string(scheme), mesh, mesh);
        for (const auto* r : stable_series(records, scheme, mesh)) {
            fmt::print(out, "{:.17g} {:.17g}\n", r->dt, r->error_max);
        }
    }
}

}  // namespace wildfire
