#ifndef WILDFIRE_BSPLINE_HPP_
#define WILDFIRE_BSPLINE_HPP_

#include <span>
#include <vector>

namespace wildfire {

/// Degree-p B-spline basis on a uniform mesh of [a, b] with an open knot vector
/// (end knots repeated p+1 times). Immutable once built.
class bspline_space {
public:
    bspline_space(int degree, int elements, double a, double b);

    int degree() const noexcept { return degree_; }
    int elements() const noexcept { return elements_; }
    int dofs() const noexcept { return elements_ + degree_; }
    double a() const noexcept { return a_; }
    double b() const noexcept { return b_; }
    double element_length() const noexcept { return (b_ - a_) / elements_; }
    std::span<const double> knots() const noexcept { return knots_; }

    // Element containing x. Intervals are closed on the left; x == b belongs
    // to the last element.
    int element_of(double x) const;

    double element_begin(int e) const { return knots_[degree_ + e]; }
    double element_end(int e) const { return knots_[degree_ + e + 1]; }

    // Index of the first basis function supported on element e (the p+1
    // nonzero functions there are first..first+p).
    int first_dof(int e) const noexcept { return e; }

    // Evaluates the p+1 nonzero basis functions and their first derivatives
    // at x, which must lie in element e. Returns the first basis index.
    int eval_nonzero(int e, double x, std::span<double> values, std::span<double> derivs) const;

private:
    int degree_;
    int elements_;
    double a_;
    double b_;
    std::vector<double> knots_;
};

struct nonzero_basis {
    int first;
    std::vector<double> values;
    std::vector<double> derivs;
};

bspline_space make_space(int degree, int elements, double a, double b);

/// Nonzero basis values and derivatives at x in [a, b]. Throws
/// std::domain_error outside the domain.
nonzero_basis eval_nonzero(const bspline_space& space, double x);

// Gauss-Legendre rule on the reference interval [-1, 1].
struct quad_rule {
    std::vector<double> points;
    std::vector<double> weights;

    int size() const noexcept { return static_cast<int>(points.size()); }
};

quad_rule gauss_legendre(int points);

// p+1 points: exact for the degree-2p mass integrand.
inline quad_rule default_quadrature(const bspline_space& space) {
    return gauss_legendre(space.degree() + 1);
}

// Quadrature points and weights mapped onto element e.
struct element_quadrature {
    std::vector<double> points;
    std::vector<double> weights;
};

element_quadrature map_to_element(const quad_rule& rule, const bspline_space& space, int e);

}  // namespace wildfire

#endif  // WILDFIRE_BSPLINE_HPP_
