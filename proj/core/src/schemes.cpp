#include "wildfire/schemes.hpp"

#include <string>

#include "wildfire/errors.hpp"

namespace wildfire {

std::string_view to_string(scheme_kind kind) noexcept {
    switch (kind) {
    case scheme_kind::explicit_euler: return "explicit";
    case scheme_kind::peaceman_rachford: return "pr";
    case scheme_kind::strang_cn: return "strang";
    }
    return "unknown";
}

scheme_kind parse_scheme(std::string_view name) {
    if (name == "explicit") {
        return scheme_kind::explicit_euler;
    }
    if (name == "pr" || name == "peaceman-rachford") {
        return scheme_kind::peaceman_rachford;
    }
    if (name == "strang" || name == "strang-cn") {
        return scheme_kind::strang_cn;
    }
    throw config_error{"unknown scheme '" + std::string{name} + "' (expected explicit, pr or strang)"};
}

direction_operators build_direction_operators(const discretization& disc, const derived_coeffs& c, scheme_kind kind,
                                              double tau, wind_velocity wind) {
    const double wx = kind == scheme_kind::strang_cn ? tau / 4 : tau / 2;
    const double wy = tau / 2;

    auto x_op = [&](double w) {
        return form_operator(disc.mass_x(), disc.stiffness_x(), disc.advection_x(), w * c.diffusion,
                             w * c.advection * wind.bx, -w * c.reaction);
    };
    auto y_op = [&](double w) {
        return form_operator(disc.mass_y(), disc.stiffness_y(), disc.advection_y(), w * c.diffusion,
                             w * c.advection * wind.by, 0.0);
    };

    auto left_x = x_op(wx);
    auto left_y = y_op(wy);
    banded_lu lu_x{left_x};
    banded_lu lu_y{left_y};
    return direction_operators{kind, tau, wind, wx, wy, std::move(left_x), x_op(-wx), std::move(left_y), y_op(-wy),
                               std::move(lu_x), std::move(lu_y)};
}

scheme_context::scheme_context(const discretization& disc, model_params params, wind_schedule wind,
                               scheme_options options, const executor& exec)
: disc_{&disc}
, params_{params}
, coeffs_{derive(params)}
, wind_{std::move(wind)}
, options_{std::move(options)}
, exec_{&exec} {
    validate(params_);
}

const direction_operators& scheme_context::operators(scheme_kind kind, double tau, double t_mid) {
    const wind_velocity b = wind_.at(t_mid);
    if (!cache_ || cache_->kind != kind || cache_->tau != tau || !(cache_->wind == b)) {
        cache_.emplace(build_direction_operators(*disc_, coeffs_, kind, tau, b));
        ++factorizations_;
    }
    return *cache_;
}

rhs_grid scheme_context::nonlinear_forcing(const coefficient_grid& T, const coefficient_grid& fuel, double t) const {
    forcing_spec spec{params_, wind_, false, options_.nonlinear_terms, options_.source};
    if (!spec.nonlinear_terms && !spec.source) {
        return disc_->make_grid();
    }
    return assemble_forcing(*disc_, T, fuel, spec, t, *exec_);
}

rhs_grid scheme_context::full_forcing(const coefficient_grid& T, const coefficient_grid& fuel, double t) const {
    forcing_spec spec{params_, wind_, true, options_.nonlinear_terms, options_.source};
    return assemble_forcing(*disc_, T, fuel, spec, t, *exec_);
}

namespace {

void add_scaled(coefficient_grid& dst, double w, const rhs_grid& a) {
    auto d = dst.values();
    auto s = a.values();
    for (std::size_t k = 0; k < d.size(); ++k) {
        d[k] += w * s[k];
    }
}

void add_scaled(coefficient_grid& dst, double w, const rhs_grid& a, const rhs_grid& b) {
    auto d = dst.values();
    auto sa = a.values();
    auto sb = b.values();
    for (std::size_t k = 0; k < d.size(); ++k) {
        d[k] += w * (sa[k] + sb[k]);
    }
}

step_status finish(sim_state& state, coefficient_grid T_new, double tau, scheme_context& ctx) {
    if (!T_new.all_finite()) {
        state.T = std::move(T_new);
        state.t += tau;
        return step_status::diverged;
    }
    if (ctx.options().update_fuel) {
        state.fuel = update_fuel(ctx.disc(), state.fuel, state.T, tau, ctx.params(), ctx.exec());
    }
    state.T = std::move(T_new);
    state.t += tau;
    return step_status::ok;
}

void check_tau(double tau) {
    if (!(tau > 0.0)) {
        throw config_error{"time step must be positive"};
    }
}

}  // namespace

step_status step_explicit(sim_state& state, double tau, scheme_context& ctx) {
    check_tau(tau);
    const auto& disc = ctx.disc();
    const auto& exec = ctx.exec();

    const auto R = ctx.full_forcing(state.T, state.fuel, state.t);
    auto rhs = kron_apply(disc.mass_x(), disc.mass_y(), state.T, exec);
    add_scaled(rhs, tau, R);
    kron_solve_inplace(disc.mass_x_lu(), disc.mass_y_lu(), rhs, exec);
    return finish(state, std::move(rhs), tau, ctx);
}

step_status step_peaceman_rachford(sim_state& state, double tau, scheme_context& ctx) {
    check_tau(tau);
    const auto& disc = ctx.disc();
    const auto& exec = ctx.exec();
    const double t_mid = state.t + tau / 2;
    const auto& ops = ctx.operators(scheme_kind::peaceman_rachford, tau, t_mid);

    const auto F = ctx.nonlinear_forcing(state.T, state.fuel, t_mid);

    // [M_x + tau/2 A_x] (x) M_y T* = M_x (x) [M_y - tau/2 A_y] T_n + tau/2 F
    auto half = kron_apply(disc.mass_x(), ops.right_y, state.T, exec);
    add_scaled(half, ops.weight_x, F);
    kron_solve_inplace(ops.lu_left_x, disc.mass_y_lu(), half, exec);

    // M_x (x) [M_y + tau/2 A_y] T_{n+1} = [M_x - tau/2 A_x] (x) M_y T* + tau/2 F
    auto next = kron_apply(ops.right_x, disc.mass_y(), half, exec);
    add_scaled(next, ops.weight_y, F);
    kron_solve_inplace(disc.mass_x_lu(), ops.lu_left_y, next, exec);

    return finish(state, std::move(next), tau, ctx);
}

step_status step_strang_cn(sim_state& state, double tau, scheme_context& ctx) {
    check_tau(tau);
    const auto& disc = ctx.disc();
    const auto& exec = ctx.exec();
    const double t0 = state.t;
    const auto& ops = ctx.operators(scheme_kind::strang_cn, tau, t0 + tau / 2);

    const auto F0 = ctx.nonlinear_forcing(state.T, state.fuel, t0);
    // F only depends on time through the external source.
    const auto F_half = ctx.options().source ? ctx.nonlinear_forcing(state.T, state.fuel, t0 + tau / 2) : F0;

    // [M_x + tau/4 A_x] (x) M_y T* = [M_x - tau/4 A_x] (x) M_y T_n + tau/4 (F^{n+1/2} + F^n)
    auto first = kron_apply(ops.right_x, disc.mass_y(), state.T, exec);
    add_scaled(first, ops.weight_x, F_half, F0);
    kron_solve_inplace(ops.lu_left_x, disc.mass_y_lu(), first, exec);

    // M_x (x) [M_y + tau/2 A_y] T** = M_x (x) [M_y - tau/2 A_y] T*
    auto second = kron_apply(disc.mass_x(), ops.right_y, first, exec);
    kron_solve_inplace(disc.mass_x_lu(), ops.lu_left_y, second, exec);

    // [M_x + tau/4 A_x] (x) M_y T_{n+1} = [M_x - tau/4 A_x] (x) M_y T** + tau/4 (F^{n+1} + F^{n+1/2})
    const auto F1 = second.all_finite() ? ctx.nonlinear_forcing(second, state.fuel, t0 + tau) : second;
    auto third = kron_apply(ops.right_x, disc.mass_y(), second, exec);
    add_scaled(third, ops.weight_x, F1, F_half);
    kron_solve_inplace(ops.lu_left_x, disc.mass_y_lu(), third, exec);

    return finish(state, std::move(third), tau, ctx);
}

step_status step(scheme_kind kind, sim_state& state, double tau, scheme_context& ctx) {
    switch (kind) {
    case scheme_kind::explicit_euler: return step_explicit(state, tau, ctx);
    case scheme_kind::peaceman_rachford: return step_peaceman_rachford(state, tau, ctx);
    case scheme_kind::strang_cn: return step_strang_cn(state, tau, ctx);
    }
    throw config_error{"unknown scheme"};
}

}  // namespace wildfire
