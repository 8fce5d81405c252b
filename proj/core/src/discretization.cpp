#include "wildfire/discretization.hpp"

#include "wildfire/errors.hpp"

namespace wildfire {

basis_table tabulate(const bspline_space& space, const quad_rule& rule) {
    basis_table t;
    t.degree = space.degree();
    t.elements = space.elements();
    t.points_per_element = rule.size();
    const auto n = static_cast<std::size_t>(t.elements) * t.points_per_element;
    const auto w = static_cast<std::size_t>(t.degree + 1);
    t.points.resize(n);
    t.weights.resize(n);
    t.values.resize(n * w);
    t.derivs.resize(n * w);

    for (int e = 0; e < t.elements; ++e) {
        const auto eq = map_to_element(rule, space, e);
        for (int q = 0; q < t.points_per_element; ++q) {
            const auto k = t.at(e, q);
            t.points[k] = eq.points[q];
            t.weights[k] = eq.weights[q];
            space.eval_nonzero(e, eq.points[q], std::span<double>{t.values.data() + k * w, w},
                               std::span<double>{t.derivs.data() + k * w, w});
        }
    }
    return t;
}

discretization::discretization(bspline_space x, bspline_space y)
: discretization{x, y, x.degree() + 1} { }

discretization::discretization(bspline_space x, bspline_space y, int quad_points)
: x_{std::move(x)}
, y_{std::move(y)}
, tx_{tabulate(x_, gauss_legendre(quad_points))}
, ty_{tabulate(y_, gauss_legendre(quad_points))}
, mx_{assemble_mass(x_, default_quadrature(x_))}
, my_{assemble_mass(y_, default_quadrature(y_))}
, kx_{assemble_stiffness(x_, default_quadrature(x_))}
, ky_{assemble_stiffness(y_, default_quadrature(y_))}
, gx_{assemble_advection(x_, default_quadrature(x_))}
, gy_{assemble_advection(y_, default_quadrature(y_))}
, mx_lu_{mx_}
, my_lu_{my_} {
    if (x_.degree() != y_.degree()) {
        throw config_error{"x and y spaces must share the same degree"};
    }
}

discretization make_square_discretization(int elements, int degree, double a, double b) {
    return discretization{make_space(degree, elements, a, b), make_space(degree, elements, a, b)};
}

}  // namespace wildfire
