#ifndef WILDFIRE_PHYSICS_HPP_
#define WILDFIRE_PHYSICS_HPP_

#include <cstddef>
#include <optional>
#include <vector>

namespace wildfire {

/// Physical constants of the reduced energy-balance model. Defaults are the
/// reference parameter set; the Arrhenius prefactor and molar-mass ratio are
/// not fixed by the model and default to 1.
struct model_params {
    double cp = 1.0;              // J kg^-1 K^-1
    double rho = 1.293;           // kg m^-3
    double kappa = 0.3;           // W m^-1 K^-1
    double sigma = 5.67e-8;       // W m^-2 K^-4
    double emissivity = 0.05;
    double ch = 1.0;              // enthalpy correction
    double hc = -70.0;            // J kg^-1, negative
    double cw = 0.5;              // wind reduction
    double chi = 2e-2;            // W m^-2 K^-1
    double t_amb = 300.0;         // K
    double t_ig = 800.0;          // K
    double delta_x = 3.5e-2 / 0.05;  // m, radiative absorption length
    double delta_z = 1.5 * 0.05;     // m, vertical emission length
    double arrhenius = 1.0;       // s^-1
    double activation_temperature = 300.0;  // K
    double molar_mass_ratio = 1.0;          // M / M1
    double combustion_scale = 1e4;
    double fuel_rate = 3e2;
    double fuel_threshold = 0.2;

    friend bool operator==(const model_params&, const model_params&) = default;
};

// Throws config_error when a parameter is outside its physical range.
void validate(const model_params& params);

/// Coefficients of the temperature equation after division by rho * cp:
///
///   dT/dt + C_adv b.grad T - C_diff lap T - C_react T
///       - div(C_nl T^3 grad T) = C_ign [ignited] T exp(-Ta/T) + C_forcing - C_rad T^4
struct derived_coeffs {
    double diffusion;
    double advection;
    double reaction;  // negative: -C_react T on the left is Newton cooling
    double radiation;
    double nonlinear_diffusion;
    double forcing;
    double ignition;
};

derived_coeffs derive(const model_params& params);

struct wind_velocity {
    double bx = 0.0;
    double by = 0.0;

    friend bool operator==(const wind_velocity&, const wind_velocity&) = default;
};

/// Piecewise-constant wind: segment k applies on [t_begin, t_end). Times not
/// covered by any segment have zero wind.
class wind_schedule {
public:
    struct segment {
        double t_begin;
        double t_end;
        wind_velocity velocity;

        friend bool operator==(const segment&, const segment&) = default;
    };

    wind_schedule() = default;
    explicit wind_schedule(std::vector<segment> segments);

    static wind_schedule constant(wind_velocity b);

    wind_velocity at(double t) const noexcept;
    // Segment containing t, or nullopt when none does.
    std::optional<std::size_t> segment_index(double t) const noexcept;

    bool covers(double t_begin, double t_end) const noexcept;
    const std::vector<segment>& segments() const noexcept { return segments_; }
    bool empty() const noexcept { return segments_.empty(); }

    friend bool operator==(const wind_schedule&, const wind_schedule&) = default;

private:
    std::vector<segment> segments_;
};

// Temperature, gradient and fuel availability at one point.
struct point_state {
    double T;
    double dTdx;
    double dTdy;
    double fuel;
};

/// Pointwise weak-form integrand: contributes volumetric * v + flux . grad v.
struct source_contribution {
    double volumetric = 0.0;
    double flux_x = 0.0;
    double flux_y = 0.0;
};

bool ignited(double T, double fuel, const model_params& params) noexcept;

// [T > T_ig and fuel > threshold] * A_r * T * exp(-Ta / T)
double reaction_rate(double T, double fuel, const model_params& params) noexcept;

/// Right-hand side of rho d(cp T)/dt in physical units: combustion (scaled by
/// fuel availability), wind transport, Newton cooling and vertical radiation as
/// the volumetric part; conduction plus radiative diffusion as the flux part.
source_contribution source_terms(const point_state& s, wind_velocity wind, const model_params& params) noexcept;

// Advection, linear diffusion and Newton-cooling decay, per unit rho * cp.
source_contribution linear_terms(const point_state& s, wind_velocity wind, const derived_coeffs& c) noexcept;

// T^3 diffusion, ignition source, ambient forcing and T^4 loss, per unit rho * cp.
source_contribution nonlinear_forcing(const point_state& s, const model_params& params,
                                      const derived_coeffs& c) noexcept;

}  // namespace wildfire

#endif  // WILDFIRE_PHYSICS_HPP_
