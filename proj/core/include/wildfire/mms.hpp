#ifndef WILDFIRE_MMS_HPP_
#define WILDFIRE_MMS_HPP_

#include <optional>
#include <ostream>
#include <vector>

#include "wildfire/discretization.hpp"
#include "wildfire/kron.hpp"
#include "wildfire/parallel.hpp"
#include "wildfire/physics.hpp"
#include "wildfire/schemes.hpp"

namespace wildfire {

/// One separable mode
///   amplitude (1 - cos(2 pi n_x x / L)) (1 - cos(2 pi n_y y / L)) exp(-lambda t).
struct mms_mode {
    int nx;
    int ny;
    double lambda;
    double amplitude;
};

/// Sum of modes plus a constant offset on [0, L]^2. Every mode has zero normal
/// derivative on the boundary. With index_free set, the mode indices are
/// ignored and every mode uses the base frequency 2 pi / L.
struct manufactured_solution {
    std::vector<mms_mode> modes{{1, 1, 3.0, 80.0}, {2, 1, 5.0, 30.0}, {2, 2, 1.5, 110.0}};
    double offset = 300.0;
    double length = 100.0;
    bool index_free = false;
};

struct exact_eval {
    double u;
    double ux;
    double uy;
    double uxx;
    double uyy;
    double ut;
};

exact_eval exact_value(const manufactured_solution& sol, double x, double y, double t);

enum class mms_problem { linear, nonlinear };

/// Forcing f that makes the manufactured solution exact for
///   u_t + C_adv b.grad u - C_diff lap u - C_react u = f [+ nonlinear terms].
/// The nonlinear variant evaluates T^3 diffusion, ignition (fuel = 1), ambient
/// forcing and T^4 loss on the exact solution.
double manufactured_forcing(const manufactured_solution& sol, double x, double y, double t,
                            const model_params& params, wind_velocity wind, mms_problem problem);

/// Relative L2 error ||T_h - u(t)|| / ||u(t)|| by Gauss quadrature with p+2
/// points per direction. Mode shapes are tabulated once per instance.
class error_integrator {
public:
    error_integrator(const discretization& disc, const manufactured_solution& sol);

    double relative_error(const coefficient_grid& state, double t) const;

private:
    const discretization* disc_;
    manufactured_solution sol_;
    basis_table tx_;
    basis_table ty_;
    std::vector<double> mode_x_;  // [m * nqx + k]
    std::vector<double> mode_y_;
};

double relative_error(const discretization& disc, const coefficient_grid& state, const manufactured_solution& sol,
                      double t);

struct error_record {
    scheme_kind scheme;
    int mesh;
    int degree;
    double dt;
    double error_max;  // max over steps of the relative L2 error; NaN when diverged
    double error_avg;  // trapezoidal time average over [0, horizon]; NaN when diverged
    bool diverged;

    // A diverged record has no error values, so they take no part in equality.
    friend bool operator==(const error_record& a, const error_record& b) noexcept {
        return a.scheme == b.scheme && a.mesh == b.mesh && a.degree == b.degree && a.dt == b.dt
            && a.diverged == b.diverged && (a.diverged || (a.error_max == b.error_max && a.error_avg == b.error_avg));
    }
};

/// Coefficients for the manufactured-solution study: the default parameters
/// with an effective emissivity of 5e-4 (absorption and emission lengths kept
/// at their default values) and an Arrhenius prefactor of 1e-6. With the
/// default emissivity the lagged T^4 loss has a linearized rate of 30-80 1/s
/// on this solution, which dominates every scheme's error for tau >= 1/128.
model_params mms_default_params();

struct mms_config {
    manufactured_solution solution{};
    model_params params = mms_default_params();
    wind_velocity wind{};
    mms_problem problem = mms_problem::nonlinear;
    double horizon = 1.0;
    // A relative error above this marks the run unstable.
    double divergence_threshold = 1.0;
};

error_record run_case(scheme_kind scheme, int mesh, int degree, double dt, const mms_config& config,
                      const executor& exec = serial_executor());

struct sweep_spec {
    std::vector<scheme_kind> schemes{scheme_kind::explicit_euler, scheme_kind::peaceman_rachford,
                                     scheme_kind::strang_cn};
    std::vector<int> meshes{50, 100, 200};
    int degree = 2;
    std::vector<double> dts{1.0, 1.0 / 2, 1.0 / 4, 1.0 / 8, 1.0 / 16, 1.0 / 32, 1.0 / 64, 1.0 / 128};
};

std::vector<error_record> run_sweep(const sweep_spec& sweep, const mms_config& config,
                                    const executor& exec = serial_executor());

/// Least-squares slope of log(error_max) against log(dt) over the `count`
/// smallest stable time steps of one (scheme, mesh) series.
std::optional<double> fit_order(const std::vector<error_record>& records, scheme_kind scheme, int mesh,
                                int count = 4);

// Largest dt of a (scheme, mesh) series that did not diverge.
std::optional<double> largest_stable_dt(const std::vector<error_record>& records, scheme_kind scheme, int mesh);

const error_record* find_record(const std::vector<error_record>& records, scheme_kind scheme, int mesh, double dt);

// scheme,mesh,p,dt,error_max,error_avg,diverged; diverged rows leave the errors empty.
void write_sweep_csv(std::ostream& out, const std::vector<error_record>& records);
// gnuplot-style blocks "dt error_max", one per (scheme, mesh), diverged points omitted.
void write_plot_data(std::ostream& out, const std::vector<error_record>& records);

}  // namespace wildfire

#endif  // WILDFIRE_MMS_HPP_
