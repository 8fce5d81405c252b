#include "wildfire/bspline.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "wildfire/errors.hpp"

namespace wildfire {

bspline_space::bspline_space(int degree, int elements, double a, double b)
: degree_{degree}
, elements_{elements}
, a_{a}
, b_{b} {
    if (degree < 1) {
        throw config_error{"degree must be >= 1, got " + std::to_string(degree)};
    }
    if (elements < 1) {
        throw config_error{"element count must be >= 1, got " + std::to_string(elements)};
    }
    if (!(a < b)) {
        throw config_error{"invalid interval: a must be < b"};
    }

    knots_.reserve(elements + 2 * degree + 1);
    for (int i = 0; i <= degree; ++i) {
        knots_.push_back(a);
    }
    for (int k = 1; k < elements; ++k) {
        knots_.push_back(a + k * (b - a) / elements);
    }
    for (int i = 0; i <= degree; ++i) {
        knots_.push_back(b);
    }
}

int bspline_space::element_of(double x) const {
    if (!(x >= a_ && x <= b_)) {
        throw std::domain_error{"point outside the spline domain"};
    }
    auto e = static_cast<int>((x - a_) / element_length());
    if (e >= elements_) {
        e = elements_ - 1;
    }
    // Correct for rounding in the division.
    while (e > 0 && x < element_begin(e)) {
        --e;
    }
    while (e < elements_ - 1 && x >= element_end(e)) {
        ++e;
    }
    return e;
}

int bspline_space::eval_nonzero(int e, double x, std::span<double> values, std::span<double> derivs) const {
    const int p = degree_;
    const int span = p + e;
    const auto& t = knots_;

    std::vector<double> left(p + 1), right(p + 1), lower(p);
    auto& N = values;
    N[0] = 1.0;
    for (int j = 1; j <= p; ++j) {
        if (j == p) {
            for (int r = 0; r < p; ++r) {
                lower[r] = N[r];
            }
        }
        left[j] = x - t[span + 1 - j];
        right[j] = t[span + j] - x;
        double saved = 0.0;
        for (int r = 0; r < j; ++r) {
            const double tmp = N[r] / (right[r + 1] + left[j - r]);
            N[r] = saved + right[r + 1] * tmp;
            saved = left[j - r] * tmp;
        }
        N[j] = saved;
    }

    // N'_{i,p} = p (N_{i,p-1} / (t_{i+p} - t_i) - N_{i+1,p-1} / (t_{i+p+1} - t_{i+1}))
    for (int r = 0; r <= p; ++r) {
        const int i = span - p + r;
        const double up = r >= 1 ? lower[r - 1] / (t[i + p] - t[i]) : 0.0;
        const double down = r < p ? lower[r] / (t[i + p + 1] - t[i + 1]) : 0.0;
        derivs[r] = p * (up - down);
    }
    return span - p;
}

bspline_space make_space(int degree, int elements, double a, double b) {
    return bspline_space{degree, elements, a, b};
}

nonzero_basis eval_nonzero(const bspline_space& space, double x) {
    const int e = space.element_of(x);
    nonzero_basis out;
    out.values.resize(space.degree() + 1);
    out.derivs.resize(space.degree() + 1);
    out.first = space.eval_nonzero(e, x, out.values, out.derivs);
    return out;
}

quad_rule gauss_legendre(int n) {
    if (n < 1) {
        throw config_error{"quadrature needs at least one point"};
    }
    quad_rule rule;
    rule.points.resize(n);
    rule.weights.resize(n);
    for (int i = 0; i < (n + 1) / 2; ++i) {
        double z = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
        double dp = 0.0;
        for (int iter = 0; iter < 100; ++iter) {
            double p0 = 1.0;
            double p1 = 0.0;
            for (int k = 1; k <= n; ++k) {
                const double p2 = p1;
                p1 = p0;
                p0 = ((2.0 * k - 1.0) * z * p1 - (k - 1.0) * p2) / k;
            }
            dp = n * (z * p0 - p1) / (z * z - 1.0);
            const double dz = p0 / dp;
            z -= dz;
            if (std::abs(dz) < 1e-16) {
                break;
            }
        }
        // recompute derivative at the converged root
        double p0 = 1.0;
        double p1 = 0.0;
        for (int k = 1; k <= n; ++k) {
            const double p2 = p1;
            p1 = p0;
            p0 = ((2.0 * k - 1.0) * z * p1 - (k - 1.0) * p2) / k;
        }
        dp = n * (z * p0 - p1) / (z * z - 1.0);
        const double w = 2.0 / ((1.0 - z * z) * dp * dp);
        rule.points[i] = -z;
        rule.points[n - 1 - i] = z;
        rule.weights[i] = w;
        rule.weights[n - 1 - i] = w;
    }
    if (n % 2 == 1) {
        rule.points[n / 2] = 0.0;
    }
    return rule;
}

element_quadrature map_to_element(const quad_rule& rule, const bspline_space& space, int e) {
    const double lo = space.element_begin(e);
    const double hi = space.element_end(e);
    const double half = 0.5 * (hi - lo);
    const double mid = 0.5 * (hi + lo);
    element_quadrature out;
    out.points.resize(rule.points.size());
    out.weights.resize(rule.points.size());
    for (std::size_t q = 0; q < rule.points.size(); ++q) {
        out.points[q] = mid + half * rule.points[q];
        out.weights[q] = half * rule.weights[q];
    }
    return out;
}

}  // namespace wildfire
