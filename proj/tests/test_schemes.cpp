#include <cmath>
#include <random>

#include <gtest/gtest.h>

#include "oracle.hpp"
#include "wildfire/assembly.hpp"
#include "wildfire/errors.hpp"
#include "wildfire/schemes.hpp"

using namespace wildfire;

namespace {

// Linear, constant-coefficient parameters: only kappa (and optionally chi)
// survive; radiation and combustion are removed.
model_params linear_params(double kappa, double chi = 0.0) {
    model_params p;
    p.kappa = kappa;
    p.chi = chi;
    p.sigma = 0.0;
    p.arrhenius = 0.0;
    return p;
}

scheme_options linear_options() {
    scheme_options o;
    o.update_fuel = false;
    o.nonlinear_terms = false;
    return o;
}

struct dense_ops {
    Eigen::MatrixXd Mx, My, Ax, Ay;
};

// A = C_diff K + C_adv b G^T - C_react M per direction, reaction only in x.
dense_ops dense_operators(const discretization& d, const derived_coeffs& c, wind_velocity b) {
    dense_ops o;
    o.Mx = oracle::dense(d.mass_x());
    o.My = oracle::dense(d.mass_y());
    o.Ax = c.diffusion * oracle::dense(d.stiffness_x()) + c.advection * b.bx * oracle::dense(d.advection_x()).transpose()
         - c.reaction * o.Mx;
    o.Ay = c.diffusion * oracle::dense(d.stiffness_y()) + c.advection * b.by * oracle::dense(d.advection_y()).transpose();
    return o;
}

coefficient_grid bumpy(const discretization& d) {
    return project(d, [](double x, double y) { return 300.0 + 50.0 * std::cos(x / 30.0) * std::sin(y / 20.0 + 0.3); });
}

}  // namespace

TEST(SchemeNames, RoundTrip) {
    for (auto k : {scheme_kind::explicit_euler, scheme_kind::peaceman_rachford, scheme_kind::strang_cn}) {
        EXPECT_EQ(parse_scheme(to_string(k)), k);
    }
    EXPECT_EQ(parse_scheme("peaceman-rachford"), scheme_kind::peaceman_rachford);
    EXPECT_EQ(parse_scheme("strang-cn"), scheme_kind::strang_cn);
    EXPECT_THROW(parse_scheme("rk4"), config_error);
}

TEST(Schemes, ZeroCoefficientsAreIdentity) {
    const auto disc = make_square_discretization(4, 2);
    const auto T0 = bumpy(disc);
    for (auto k : {scheme_kind::explicit_euler, scheme_kind::peaceman_rachford, scheme_kind::strang_cn}) {
        scheme_context ctx{disc, linear_params(0.0), wind_schedule::constant({}), linear_options()};
        sim_state s{T0, disc.make_grid(1.0), 0.0};
        ASSERT_EQ(step(k, s, 0.5, ctx), step_status::ok);
        for (std::size_t i = 0; i < T0.size(); ++i) {
            EXPECT_NEAR(s.T.data()[i], T0.data()[i], 1e-10) << to_string(k);
        }
        EXPECT_DOUBLE_EQ(s.t, 0.5);
    }
}

TEST(Schemes, ConstantFieldPreservedByLinearProblem) {
    const auto disc = make_square_discretization(6, 2);
    for (auto k : {scheme_kind::explicit_euler, scheme_kind::peaceman_rachford, scheme_kind::strang_cn}) {
        scheme_context ctx{disc, linear_params(0.3), wind_schedule::constant({2.0, -1.0}), linear_options()};
        sim_state s{disc.make_grid(412.5), disc.make_grid(1.0), 0.0};
        for (int n = 0; n < 10; ++n) {
            ASSERT_EQ(step(k, s, 0.25, ctx), step_status::ok);
        }
        for (double v : s.T.values()) {
            EXPECT_NEAR(v, 412.5, 1e-10) << to_string(k);
        }
    }
}

TEST(Schemes, ExplicitPureDecayIsScalarForwardEuler) {
    // Only Newton cooling, with the ambient offset removed: dT/dt = -chi/(rho cp) T.
    const auto disc = make_square_discretization(5, 2);
    model_params p = linear_params(0.0, 0.05);
    scheme_context ctx{disc, p, wind_schedule::constant({}), linear_options()};
    sim_state s{disc.make_grid(800.0), disc.make_grid(1.0), 0.0};
    const double tau = 0.3;
    ASSERT_EQ(step_explicit(s, tau, ctx), step_status::ok);
    const double expected = 800.0 * (1.0 - tau * 0.05 / (p.rho * p.cp));
    for (double v : s.T.values()) {
        EXPECT_NEAR(v, expected, 1e-10);
    }
}

TEST(Schemes, PeacemanRachfordMatchesDenseOracle) {
    const auto disc = discretization{make_space(2, 2, 0.0, 2.0), make_space(2, 2, 0.0, 3.0)};  // 4 x 4
    const auto p = linear_params(0.7, 0.1);
    const wind_velocity b{0.4, -0.9};
    scheme_context ctx{disc, p, wind_schedule::constant(b), linear_options()};
    std::mt19937 rng{5};
    const auto T0 = oracle::random_grid(4, 4, rng);
    sim_state s{T0, disc.make_grid(1.0), 0.0};
    const double tau = 0.37;
    ASSERT_EQ(step_peaceman_rachford(s, tau, ctx), step_status::ok);

    const auto o = dense_operators(disc, derive(p), b);
    const double w = tau / 2;
    const Eigen::VectorXd F = oracle::vec(ctx.nonlinear_forcing(T0, disc.make_grid(1.0), tau / 2));
    const Eigen::VectorXd half =
        oracle::kron(o.Mx + w * o.Ax, o.My)
            .partialPivLu()
            .solve(oracle::kron(o.Mx, o.My - w * o.Ay) * oracle::vec(T0) + w * F);
    const Eigen::VectorXd next =
        oracle::kron(o.Mx, o.My + w * o.Ay).partialPivLu().solve(oracle::kron(o.Mx - w * o.Ax, o.My) * half + w * F);
    EXPECT_LT(oracle::max_abs(oracle::vec(s.T) - next), 1e-10);
}

TEST(Schemes, PurePeacemanRachfordXDiffusionIsRationalUpdate) {
    const auto disc = discretization{make_space(1, 3, 0.0, 3.0), make_space(1, 3, 0.0, 3.0)};  // 4 x 4
    auto p = linear_params(1.0);
    scheme_context ctx{disc, p, wind_schedule::constant({}), linear_options()};
    // Remove y-diffusion by a y-constant initial state: K_y annihilates it.
    std::mt19937 rng{6};
    coefficient_grid T0{4, 4};
    for (int i = 0; i < 4; ++i) {
        const double v = std::uniform_real_distribution<double>{-1, 1}(rng);
        for (int j = 0; j < 4; ++j) {
            T0(i, j) = v;
        }
    }
    sim_state s{T0, disc.make_grid(1.0), 0.0};
    const double tau = 0.8;
    ASSERT_EQ(step_peaceman_rachford(s, tau, ctx), step_status::ok);
    const Eigen::MatrixXd M = oracle::dense(disc.mass_x());
    const Eigen::MatrixXd A = derive(p).diffusion * oracle::dense(disc.stiffness_x());
    Eigen::VectorXd v(4);
    for (int i = 0; i < 4; ++i) {
        v(i) = T0(i, 0);
    }
    const Eigen::VectorXd ref = (M + tau / 2 * A).partialPivLu().solve((M - tau / 2 * A) * v);
    for (int i = 0; i < 4; ++i) {
        for (int j = 0; j < 4; ++j) {
            EXPECT_NEAR(s.T(i, j), ref(i), 1e-10);
        }
    }
}

TEST(Schemes, StrangMatchesDenseSubstepOracle) {
    const auto disc = discretization{make_space(2, 2, 0.0, 2.0), make_space(2, 2, 0.0, 2.0)};
    const auto p = linear_params(0.9, 0.2);
    const wind_velocity b{1.1, 0.6};
    scheme_context ctx{disc, p, wind_schedule::constant(b), linear_options()};
    std::mt19937 rng{7};
    const auto T0 = oracle::random_grid(4, 4, rng);
    sim_state s{T0, disc.make_grid(1.0), 0.0};
    const double tau = 0.5;
    ASSERT_EQ(step_strang_cn(s, tau, ctx), step_status::ok);

    const auto o = dense_operators(disc, derive(p), b);
    // The linear problem has no forcing; the oracle still threads F through.
    const Eigen::VectorXd F = oracle::vec(ctx.nonlinear_forcing(T0, disc.make_grid(1.0), 0.0));
    const double q = tau / 4;
    const double h = tau / 2;
    const Eigen::VectorXd a = oracle::kron(o.Mx + q * o.Ax, o.My)
                                  .partialPivLu()
                                  .solve(oracle::kron(o.Mx - q * o.Ax, o.My) * oracle::vec(T0) + q * 2 * F);
    const Eigen::VectorXd c =
        oracle::kron(o.Mx, o.My + h * o.Ay).partialPivLu().solve(oracle::kron(o.Mx, o.My - h * o.Ay) * a);
    const Eigen::VectorXd d =
        oracle::kron(o.Mx + q * o.Ax, o.My).partialPivLu().solve(oracle::kron(o.Mx - q * o.Ax, o.My) * c + q * 2 * F);
    EXPECT_LT(oracle::max_abs(oracle::vec(s.T) - d), 1e-10);
}

TEST(Schemes, ExplicitMatchesDenseOracle) {
    const auto disc = discretization{make_space(2, 2, 0.0, 2.0), make_space(2, 2, 0.0, 2.0)};
    const auto p = linear_params(0.9, 0.2);
    const wind_velocity b{1.1, 0.6};
    scheme_context ctx{disc, p, wind_schedule::constant(b), linear_options()};
    std::mt19937 rng{8};
    coefficient_grid T0 = oracle::random_grid(4, 4, rng);
    sim_state s{T0, disc.make_grid(1.0), 0.0};
    const double tau = 0.05;
    ASSERT_EQ(step_explicit(s, tau, ctx), step_status::ok);
    const auto o = dense_operators(disc, derive(p), b);
    const Eigen::MatrixXd M = oracle::kron(o.Mx, o.My);
    const Eigen::MatrixXd A = oracle::kron(o.Ax, o.My) + oracle::kron(o.Mx, o.Ay);
    const Eigen::VectorXd ref = M.partialPivLu().solve(M * oracle::vec(T0) - tau * A * oracle::vec(T0));
    EXPECT_LT(oracle::max_abs(oracle::vec(s.T) - ref), 1e-10);
}

TEST(Schemes, OperatorsCachedUntilParametersChange) {
    const auto disc = make_square_discretization(4, 2);
    const wind_schedule wind{{{0.0, 1.0, {1.0, 0.0}}, {1.0, 2.0, {0.0, 1.0}}}};
    scheme_context ctx{disc, model_params{}, wind, linear_options()};
    ctx.operators(scheme_kind::peaceman_rachford, 0.1, 0.05);
    const int base = ctx.factorizations();
    ctx.operators(scheme_kind::peaceman_rachford, 0.1, 0.55);
    EXPECT_EQ(ctx.factorizations(), base);
    ctx.operators(scheme_kind::peaceman_rachford, 0.1, 1.05);
    EXPECT_GT(ctx.factorizations(), base);
    const int after_wind = ctx.factorizations();
    ctx.operators(scheme_kind::peaceman_rachford, 0.05, 1.05);
    EXPECT_GT(ctx.factorizations(), after_wind);
    const int after_tau = ctx.factorizations();
    ctx.operators(scheme_kind::strang_cn, 0.05, 1.05);
    EXPECT_GT(ctx.factorizations(), after_tau);
}

TEST(Schemes, DivergenceIsSignalled) {
    const auto disc = make_square_discretization(10, 2);
    model_params p;
    scheme_context ctx{disc, p, wind_schedule::constant({}), scheme_options{}};
    auto T0 = project(disc, [](double x, double y) { return 300.0 + 1200.0 * std::exp(-((x - 50) * (x - 50) + (y - 50) * (y - 50)) / 100.0); });
    sim_state s{T0, disc.make_grid(1.0), 0.0};
    step_status status = step_status::ok;
    for (int n = 0; n < 50 && status == step_status::ok; ++n) {
        status = step_explicit(s, 1e-2, ctx);
    }
    EXPECT_EQ(status, step_status::diverged);
}

TEST(Schemes, RejectsNonPositiveStep) {
    const auto disc = make_square_discretization(4, 2);
    scheme_context ctx{disc, model_params{}, wind_schedule::constant({}), scheme_options{}};
    sim_state s{disc.make_grid(300.0), disc.make_grid(1.0), 0.0};
    EXPECT_THROW(step(scheme_kind::peaceman_rachford, s, 0.0, ctx), config_error);
}

TEST(Schemes, AmbientFixedPoint) {
    const auto disc = make_square_discretization(12, 2);
    for (auto k : {scheme_kind::explicit_euler, scheme_kind::peaceman_rachford, scheme_kind::strang_cn}) {
        scheme_context ctx{disc, model_params{}, wind_schedule::constant({}), scheme_options{}};
        sim_state s{disc.make_grid(300.0), disc.make_grid(0.1), 0.0};
        for (int n = 0; n < 20; ++n) {
            ASSERT_EQ(step(k, s, 1e-3, ctx), step_status::ok);
        }
        for (double v : s.T.values()) {
            EXPECT_NEAR(v, 300.0, 1e-10);
        }
    }
}

TEST(Schemes, StepsDeterministicAcrossWorkers) {
    const auto disc = make_square_discretization(30, 2);
    auto T0 = project(disc, [](double x, double y) { return 300.0 + 1200.0 * std::exp(-((x - 40) * (x - 40) + (y - 60) * (y - 60)) / 150.0); });
    for (auto k : {scheme_kind::explicit_euler, scheme_kind::peaceman_rachford, scheme_kind::strang_cn}) {
        sim_state ref{T0, disc.make_grid(1.0), 0.0};
        {
            scheme_context ctx{disc, model_params{}, wind_schedule::constant({0.5, 0.2}), scheme_options{}};
            for (int n = 0; n < 3; ++n) {
                step(k, ref, 1e-6, ctx);
            }
        }
        for (int w : {2, 8}) {
            const executor exec{w};
            sim_state s{T0, disc.make_grid(1.0), 0.0};
            scheme_context ctx{disc, model_params{}, wind_schedule::constant({0.5, 0.2}), scheme_options{}, exec};
            for (int n = 0; n < 3; ++n) {
                step(k, s, 1e-6, ctx);
            }
            EXPECT_EQ(s.T, ref.T) << to_string(k) << " " << w;
            EXPECT_EQ(s.fuel, ref.fuel) << to_string(k) << " " << w;
        }
    }
}
