#ifndef WILDFIRE_DISCRETIZATION_HPP_
#define WILDFIRE_DISCRETIZATION_HPP_

#include <cstddef>
#include <vector>

#include "wildfire/bspline.hpp"
#include "wildfire/kron.hpp"
#include "wildfire/operators1d.hpp"

namespace wildfire {

// Basis values and derivatives at every quadrature point of every element of
// one 1D space.
struct basis_table {
    int degree = 0;
    int elements = 0;
    int points_per_element = 0;
    std::vector<double> points;   // [e * nq + q]
    std::vector<double> weights;  // [e * nq + q], mapped to the element
    std::vector<double> values;   // [(e * nq + q) * (p + 1) + a]
    std::vector<double> derivs;

    std::size_t at(int e, int q) const noexcept { return static_cast<std::size_t>(e) * points_per_element + q; }
    const double* value_row(int e, int q) const noexcept { return values.data() + at(e, q) * (degree + 1); }
    const double* deriv_row(int e, int q) const noexcept { return derivs.data() + at(e, q) * (degree + 1); }
};

basis_table tabulate(const bspline_space& space, const quad_rule& rule);

/// Tensor-product B-spline discretization of a rectangle: the two 1D spaces,
/// their quadrature tables, the pure 1D mass/stiffness/advection matrices and
/// the factored mass matrices used for L2 projection.
class discretization {
public:
    discretization(bspline_space x, bspline_space y);
    discretization(bspline_space x, bspline_space y, int quad_points);

    const bspline_space& space_x() const noexcept { return x_; }
    const bspline_space& space_y() const noexcept { return y_; }
    const basis_table& table_x() const noexcept { return tx_; }
    const basis_table& table_y() const noexcept { return ty_; }

    std::size_t nx() const noexcept { return static_cast<std::size_t>(x_.dofs()); }
    std::size_t ny() const noexcept { return static_cast<std::size_t>(y_.dofs()); }
    int degree() const noexcept { return x_.degree(); }

    const band_matrix& mass_x() const noexcept { return mx_; }
    const band_matrix& mass_y() const noexcept { return my_; }
    const band_matrix& stiffness_x() const noexcept { return kx_; }
    const band_matrix& stiffness_y() const noexcept { return ky_; }
    const band_matrix& advection_x() const noexcept { return gx_; }
    const band_matrix& advection_y() const noexcept { return gy_; }
    const banded_lu& mass_x_lu() const noexcept { return mx_lu_; }
    const banded_lu& mass_y_lu() const noexcept { return my_lu_; }

    coefficient_grid make_grid(double value = 0.0) const { return coefficient_grid{nx(), ny(), value}; }

private:
    bspline_space x_;
    bspline_space y_;
    basis_table tx_;
    basis_table ty_;
    band_matrix mx_, my_, kx_, ky_, gx_, gy_;
    banded_lu mx_lu_;
    banded_lu my_lu_;
};

discretization make_square_discretization(int elements, int degree, double a = 0.0, double b = 100.0);

}  // namespace wildfire

#endif  // WILDFIRE_DISCRETIZATION_HPP_
