#include "wildfire/assembly.hpp"

#include <algorithm>

#include "wildfire/errors.hpp"

namespace wildfire {

namespace {

void check_conformable(const discretization& disc, const coefficient_grid& g, const char* what) {
    if (g.nx() != disc.nx() || g.ny() != disc.ny()) {
        throw dimension_error{std::string{what} + ": grid does not match the discretization"};
    }
}

}  // namespace

field_value evaluate(const discretization& disc, const coefficient_grid& field, double x, double y) {
    const auto& sx = disc.space_x();
    const auto& sy = disc.space_y();
    const int n = disc.degree() + 1;
    std::vector<double> vx(n), dx(n), vy(n), dy(n);
    const int fx = sx.eval_nonzero(sx.element_of(x), x, vx, dx);
    const int fy = sy.eval_nonzero(sy.element_of(y), y, vy, dy);

    field_value out{0.0, 0.0, 0.0};
    for (int a = 0; a < n; ++a) {
        for (int b = 0; b < n; ++b) {
            const double c = field(static_cast<std::size_t>(fx + a), static_cast<std::size_t>(fy + b));
            out.value += c * vx[a] * vy[b];
            out.dx += c * dx[a] * vy[b];
            out.dy += c * vx[a] * dy[b];
        }
    }
    return out;
}

rhs_grid assemble_forcing(const discretization& disc, const coefficient_grid& T_prev,
                          const coefficient_grid& fuel_prev, const forcing_spec& spec, double t,
                          const executor& exec) {
    check_conformable(disc, T_prev, "assemble_forcing");
    check_conformable(disc, fuel_prev, "assemble_forcing");

    const derived_coeffs c = derive(spec.params);
    const wind_velocity b = spec.wind.at(t);
    const double inv_heat = 1.0 / (spec.params.rho * spec.params.cp);

    return assemble_weak_form(
        disc, &T_prev, &fuel_prev,
        [&](double x, double y, const point_state& s) {
            source_contribution out{};
            if (spec.linear_terms && spec.nonlinear_terms) {
                out = source_terms(s, b, spec.params);
                out.volumetric *= inv_heat;
                out.flux_x *= inv_heat;
                out.flux_y *= inv_heat;
            } else if (spec.linear_terms) {
                out = linear_terms(s, b, c);
            } else if (spec.nonlinear_terms) {
                out = nonlinear_forcing(s, spec.params, c);
            }
            if (spec.source) {
                out.volumetric += spec.source(x, y, t);
            }
            return out;
        },
        exec);
}

coefficient_grid update_fuel(const discretization& disc, const coefficient_grid& fuel_prev,
                             const coefficient_grid& T_prev, double tau, const model_params& params,
                             const executor& exec) {
    check_conformable(disc, T_prev, "update_fuel");
    check_conformable(disc, fuel_prev, "update_fuel");
    if (!(tau > 0.0)) {
        throw config_error{"update_fuel: time step must be positive"};
    }

    auto burn = assemble_weak_form(
        disc, &T_prev, &fuel_prev,
        [&](double, double, const point_state& s) {
            const double fval = -params.fuel_rate * reaction_rate(s.T, s.fuel, params) * s.fuel;
            return source_contribution{tau * fval, 0.0, 0.0};
        },
        exec);
    kron_solve_inplace(disc.mass_x_lu(), disc.mass_y_lu(), burn, exec);

    coefficient_grid out = fuel_prev;
    auto dst = out.values();
    auto delta = burn.values();
    for (std::size_t k = 0; k < dst.size(); ++k) {
        const double prev = dst[k];
        const double upper = std::max(0.0, std::min(1.0, prev));
        dst[k] = std::clamp(prev + delta[k], 0.0, upper);
    }
    return out;
}

coefficient_grid project(const discretization& disc, const std::function<double(double, double)>& g,
                         const executor& exec) {
    auto rhs = assemble_weak_form(
        disc, nullptr, nullptr,
        [&](double x, double y, const point_state&) { return source_contribution{g(x, y), 0.0, 0.0}; }, exec);
    kron_solve_inplace(disc.mass_x_lu(), disc.mass_y_lu(), rhs, exec);
    return rhs;
}

}  // namespace wildfire
