#include "wildfire/physics.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "wildfire/errors.hpp"

namespace wildfire {

void validate(const model_params& p) {
    auto require_positive = [](double v, const char* name) {
        if (!(v > 0.0)) {
            throw config_error{std::string{"parameter "} + name + " must be positive"};
        }
    };
    require_positive(p.cp, "cp");
    require_positive(p.rho, "rho");
    require_positive(p.t_amb, "t_amb");
    require_positive(p.t_ig, "t_ig");
    require_positive(p.delta_x, "delta_x");
    require_positive(p.delta_z, "delta_z");
    if (!(p.kappa >= 0.0) || !(p.sigma >= 0.0) || !(p.chi >= 0.0) || !(p.cw >= 0.0)) {
        throw config_error{"kappa, sigma, chi and cw must be non-negative"};
    }
    if (!(p.emissivity > 0.0 && p.emissivity <= 1.0)) {
        throw config_error{"emissivity must lie in (0, 1]"};
    }
    if (!(p.hc < 0.0)) {
        throw config_error{"combustion enthalpy hc must be negative"};
    }
    if (!(p.arrhenius >= 0.0) || !(p.activation_temperature >= 0.0) || !(p.molar_mass_ratio > 0.0)
        || !(p.combustion_scale >= 0.0) || !(p.fuel_rate >= 0.0)) {
        throw config_error{"combustion parameters must be non-negative"};
    }
    if (!(p.fuel_threshold >= 0.0 && p.fuel_threshold <= 1.0)) {
        throw config_error{"fuel_threshold must lie in [0, 1]"};
    }
}

derived_coeffs derive(const model_params& p) {
    const double heat = p.rho * p.cp;
    derived_coeffs c{};
    c.diffusion = p.kappa / heat;
    c.advection = p.cw;
    c.reaction = -p.chi / heat;
    c.radiation = p.sigma * p.emissivity / (p.delta_z * heat);
    c.nonlinear_diffusion = 4.0 * p.sigma * p.emissivity * p.delta_x / heat;
    const double t4 = p.t_amb * p.t_amb * p.t_amb * p.t_amb;
    c.forcing = (p.chi * p.t_amb + p.sigma * p.emissivity * t4 / p.delta_z) / heat;
    c.ignition = -p.combustion_scale * p.ch * p.hc * p.molar_mass_ratio * p.arrhenius / p.cp;
    return c;
}

wind_schedule::wind_schedule(std::vector<segment> segments)
: segments_{std::move(segments)} {
    for (const auto& s : segments_) {
        if (!(s.t_begin < s.t_end)) {
            throw config_error{"wind segment must have t_begin < t_end"};
        }
    }
    std::sort(segments_.begin(), segments_.end(),
              [](const segment& a, const segment& b) { return a.t_begin < b.t_begin; });
    for (std::size_t k = 1; k < segments_.size(); ++k) {
        if (segments_[k].t_begin < segments_[k - 1].t_end) {
            throw config_error{"wind segments overlap"};
        }
    }
}

wind_schedule wind_schedule::constant(wind_velocity b) {
    return wind_schedule{{segment{-1e300, 1e300, b}}};
}

std::optional<std::size_t> wind_schedule::segment_index(double t) const noexcept {
    for (std::size_t k = 0; k < segments_.size(); ++k) {
        if (t >= segments_[k].t_begin && t < segments_[k].t_end) {
            return k;
        }
    }
    return std::nullopt;
}

wind_velocity wind_schedule::at(double t) const noexcept {
    const auto k = segment_index(t);
    return k ? segments_[*k].velocity : wind_velocity{};
}

bool wind_schedule::covers(double t_begin, double t_end) const noexcept {
    double reached = t_begin;
    for (const auto& s : segments_) {
        if (s.t_begin > reached) {
            return false;
        }
        reached = std::max(reached, s.t_end);
        if (reached >= t_end) {
            return true;
        }
    }
    return reached >= t_end;
}

bool ignited(double T, double fuel, const model_params& p) noexcept {
    return T > p.t_ig && fuel > p.fuel_threshold;
}

double reaction_rate(double T, double fuel, const model_params& p) noexcept {
    if (!ignited(T, fuel, p)) {
        return 0.0;
    }
    return p.arrhenius * T * std::exp(-p.activation_temperature / T);
}

namespace {

double availability(double fuel) noexcept {
    return std::clamp(fuel, 0.0, 1.0);
}

}  // namespace

source_contribution source_terms(const point_state& s, wind_velocity b, const model_params& p) noexcept {
    const double r = reaction_rate(s.T, s.fuel, p);
    const double rc = -p.combustion_scale * p.rho * p.ch * p.hc * p.molar_mass_ratio * r * availability(s.fuel);
    const double qw = -p.rho * p.cw * p.cp * (b.bx * s.dTdx + b.by * s.dTdy);
    const double qconv = p.chi * (p.t_amb - s.T);
    const double ta2 = p.t_amb * p.t_amb;
    const double t2 = s.T * s.T;
    const double qrz = p.sigma * p.emissivity / p.delta_z * (ta2 * ta2 - t2 * t2);
    const double k = p.kappa + 4.0 * p.sigma * p.emissivity * p.delta_x * t2 * s.T;

    return {rc + qw + qconv + qrz, -k * s.dTdx, -k * s.dTdy};
}

source_contribution linear_terms(const point_state& s, wind_velocity b, const derived_coeffs& c) noexcept {
    return {
        -c.advection * (b.bx * s.dTdx + b.by * s.dTdy) + c.reaction * s.T,
        -c.diffusion * s.dTdx,
        -c.diffusion * s.dTdy,
    };
}

source_contribution nonlinear_forcing(const point_state& s, const model_params& p, const derived_coeffs& c) noexcept {
    double ignition = 0.0;
    if (ignited(s.T, s.fuel, p)) {
        ignition = c.ignition * availability(s.fuel) * s.T * std::exp(-p.activation_temperature / s.T);
    }
    const double t2 = s.T * s.T;
    const double k = c.nonlinear_diffusion * t2 * s.T;
    return {ignition + c.forcing - c.radiation * t2 * t2, -k * s.dTdx, -k * s.dTdy};
}

}  // namespace wildfire
