#ifndef WILDFIRE_ASSEMBLY_HPP_
#define WILDFIRE_ASSEMBLY_HPP_

#include <functional>
#include <vector>

#include "wildfire/discretization.hpp"
#include "wildfire/kron.hpp"
#include "wildfire/parallel.hpp"
#include "wildfire/physics.hpp"

namespace wildfire {

// Prescribed volumetric source f(x, y, t), per unit rho * cp.
using external_source = std::function<double(double x, double y, double t)>;

/// What assemble_forcing integrates. The explicit scheme wants everything; the
/// splitting schemes keep the linear terms in their directional operators and
/// only need the nonlinear part.
struct forcing_spec {
    model_params params{};
    wind_schedule wind{};
    bool linear_terms = false;
    bool nonlinear_terms = true;
    external_source source{};
};

// Value and gradient of a spline field at a physical point.
struct field_value {
    double value;
    double dx;
    double dy;
};

field_value evaluate(const discretization& disc, const coefficient_grid& field, double x, double y);

/// Generic weak-form load vector: entry (i, j) accumulates
///   sum_{elements, q} w J (volumetric B_ij + flux . grad B_ij)
/// with the integrand evaluated from the T and fuel fields at every quadrature
/// point. Element contributions are computed in parallel into per-element
/// buffers and summed in a fixed element order, so the result is bitwise
/// identical for any worker count.
template <typename Integrand>
rhs_grid assemble_weak_form(const discretization& disc, const coefficient_grid* T, const coefficient_grid* fuel,
                            Integrand&& integrand, const executor& exec);

/// Unweighted forcing vector F at time t for the state (T_prev, fuel_prev).
rhs_grid assemble_forcing(const discretization& disc, const coefficient_grid& T_prev,
                          const coefficient_grid& fuel_prev, const forcing_spec& spec, double t,
                          const executor& exec = serial_executor());

/// One explicit Euler step of the fuel equation d(fuel)/dt = -rate r(T) fuel
/// in weak form, solved with the factored mass matrices. Coefficients are
/// clamped to [0, min(1, previous)] so fuel only burns.
coefficient_grid update_fuel(const discretization& disc, const coefficient_grid& fuel_prev,
                             const coefficient_grid& T_prev, double tau, const model_params& params,
                             const executor& exec = serial_executor());

/// L2 projection of g onto the tensor-product space.
coefficient_grid project(const discretization& disc, const std::function<double(double, double)>& g,
                         const executor& exec = serial_executor());

}  // namespace wildfire

#include "wildfire/detail/assembly_impl.hpp"

#endif  // WILDFIRE_ASSEMBLY_HPP_
