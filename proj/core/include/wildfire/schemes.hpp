#ifndef WILDFIRE_SCHEMES_HPP_
#define WILDFIRE_SCHEMES_HPP_

#include <optional>
#include <string>
#include <string_view>

#include "wildfire/assembly.hpp"
#include "wildfire/discretization.hpp"
#include "wildfire/kron.hpp"
#include "wildfire/operators1d.hpp"
#include "wildfire/parallel.hpp"
#include "wildfire/physics.hpp"

namespace wildfire {

enum class scheme_kind { explicit_euler, peaceman_rachford, strang_cn };

std::string_view to_string(scheme_kind kind) noexcept;
// Accepts "explicit", "pr", "peaceman-rachford", "strang", "strang-cn".
scheme_kind parse_scheme(std::string_view name);

struct sim_state {
    coefficient_grid T;
    coefficient_grid fuel;
    double t = 0.0;
};

struct scheme_options {
    bool update_fuel = true;
    // false drops T^3 diffusion, ignition and radiation: the linear problem.
    bool nonlinear_terms = true;
    external_source source{};
};

/// Directional operators for one (scheme, tau, wind) combination. The x
/// operators carry the Newton-cooling reaction; the y operators do not.
///   left_x  = M_x + w_x (C_diff K_x + C_adv b_x G_x^T - C_react M_x)
///   right_x = M_x - w_x (...)
/// and likewise in y with weight w_y and no reaction.
struct direction_operators {
    scheme_kind kind;
    double tau;
    wind_velocity wind;
    double weight_x;
    double weight_y;
    band_matrix left_x;
    band_matrix right_x;
    band_matrix left_y;
    band_matrix right_y;
    banded_lu lu_left_x;
    banded_lu lu_left_y;
};

direction_operators build_direction_operators(const discretization& disc, const derived_coeffs& coeffs,
                                              scheme_kind kind, double tau, wind_velocity wind);

/// Everything a step needs besides the state. Directional operators are
/// cached and refactored only when tau, the scheme or the wind changes.
class scheme_context {
public:
    scheme_context(const discretization& disc, model_params params, wind_schedule wind, scheme_options options = {},
                   const executor& exec = serial_executor());

    const discretization& disc() const noexcept { return *disc_; }
    const model_params& params() const noexcept { return params_; }
    const derived_coeffs& coeffs() const noexcept { return coeffs_; }
    const wind_schedule& wind() const noexcept { return wind_; }
    const scheme_options& options() const noexcept { return options_; }
    const executor& exec() const noexcept { return *exec_; }

    // Operators with the wind frozen at t_mid.
    const direction_operators& operators(scheme_kind kind, double tau, double t_mid);

    rhs_grid nonlinear_forcing(const coefficient_grid& T, const coefficient_grid& fuel, double t) const;
    rhs_grid full_forcing(const coefficient_grid& T, const coefficient_grid& fuel, double t) const;

    int factorizations() const noexcept { return factorizations_; }

private:
    const discretization* disc_;
    model_params params_;
    derived_coeffs coeffs_;
    wind_schedule wind_;
    scheme_options options_;
    const executor* exec_;
    std::optional<direction_operators> cache_;
    int factorizations_ = 0;
};

enum class step_status { ok, diverged };

// (M (x) M) T_new = (M (x) M) T + tau R(T, t_n); R holds every term.
step_status step_explicit(sim_state& state, double tau, scheme_context& ctx);

// Two alternating half steps, implicit in x then y, with F at t_n + tau/2.
step_status step_peaceman_rachford(sim_state& state, double tau, scheme_context& ctx);

// Crank-Nicolson half step in x, full step in y, half step in x.
step_status step_strang_cn(sim_state& state, double tau, scheme_context& ctx);

step_status step(scheme_kind kind, sim_state& state, double tau, scheme_context& ctx);

}  // namespace wildfire

#endif  // WILDFIRE_SCHEMES_HPP_
