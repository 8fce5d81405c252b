#include "wildfire/operators1d.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "wildfire/errors.hpp"

namespace wildfire {

band_matrix::band_matrix(int n, int half_bandwidth)
: n_{n}
, hb_{half_bandwidth}
, data_(static_cast<std::size_t>(n) * (2 * half_bandwidth + 1), 0.0) { }

void band_matrix::multiply(std::span<const double> x, std::span<double> y) const {
    if (static_cast<int>(x.size()) != n_ || static_cast<int>(y.size()) != n_) {
        throw dimension_error{"band_matrix::multiply: size mismatch"};
    }
    for (int i = 0; i < n_; ++i) {
        double s = 0.0;
        const int lo = std::max(0, i - hb_);
        const int hi = std::min(n_ - 1, i + hb_);
        for (int k = lo; k <= hi; ++k) {
            s += data_[index(i, k)] * x[k];
        }
        y[i] = s;
    }
}

void band_matrix::multiply_columns(const double* in, double* out, std::size_t row_stride, std::size_t col_begin,
                                   std::size_t col_end) const {
    for (int i = 0; i < n_; ++i) {
        double* dst = out + i * row_stride;
        for (auto c = col_begin; c < col_end; ++c) {
            dst[c] = 0.0;
        }
        const int lo = std::max(0, i - hb_);
        const int hi = std::min(n_ - 1, i + hb_);
        for (int k = lo; k <= hi; ++k) {
            const double a = data_[index(i, k)];
            const double* src = in + k * row_stride;
            for (auto c = col_begin; c < col_end; ++c) {
                dst[c] += a * src[c];
            }
        }
    }
}

band_matrix band_matrix::transposed() const {
    band_matrix t{n_, hb_};
    for (int i = 0; i < n_; ++i) {
        for (int k = std::max(0, i - hb_); k <= std::min(n_ - 1, i + hb_); ++k) {
            t.at(k, i) = (*this)(i, k);
        }
    }
    return t;
}

std::vector<double> band_matrix::to_dense() const {
    std::vector<double> dense(static_cast<std::size_t>(n_) * n_, 0.0);
    for (int i = 0; i < n_; ++i) {
        for (int k = std::max(0, i - hb_); k <= std::min(n_ - 1, i + hb_); ++k) {
            dense[static_cast<std::size_t>(i) * n_ + k] = (*this)(i, k);
        }
    }
    return dense;
}

banded_lu::banded_lu(const band_matrix& A)
: n_{A.size()}
, kl_{A.half_bandwidth()}
, ku_{2 * A.half_bandwidth()}
, width_{static_cast<std::size_t>(kl_ + ku_ + 1)}
, data_(static_cast<std::size_t>(n_) * width_, 0.0)
, pivots_(n_) {
    const int hb = A.half_bandwidth();
    for (int i = 0; i < n_; ++i) {
        for (int k = std::max(0, i - hb); k <= std::min(n_ - 1, i + hb); ++k) {
            lu(i, k) = A(i, k);
        }
    }

    for (int i = 0; i < n_; ++i) {
        const int last_row = std::min(n_ - 1, i + kl_);
        const int last_col = std::min(n_ - 1, i + ku_);

        int piv = i;
        double best = std::abs(lu(i, i));
        for (int r = i + 1; r <= last_row; ++r) {
            if (std::abs(lu(r, i)) > best) {
                best = std::abs(lu(r, i));
                piv = r;
            }
        }
        if (best == 0.0) {
            throw factorization_error{"singular pivot in banded LU at row " + std::to_string(i)};
        }
        pivots_[i] = piv;
        if (piv != i) {
            for (int c = i; c <= last_col; ++c) {
                std::swap(lu(i, c), lu(piv, c));
            }
        }

        const double inv = 1.0 / lu(i, i);
        for (int r = i + 1; r <= last_row; ++r) {
            const double l = lu(r, i) * inv;
            lu(r, i) = l;
            if (l == 0.0) {
                continue;
            }
            for (int c = i + 1; c <= last_col; ++c) {
                lu(r, c) -= l * lu(i, c);
            }
        }
    }
}

void banded_lu::solve(std::span<double> rhs) const {
    if (static_cast<int>(rhs.size()) != n_) {
        throw dimension_error{"banded_lu::solve: size mismatch"};
    }
    solve_columns(rhs.data(), 1, 0, 1);
}

void banded_lu::solve_columns(double* data, std::size_t row_stride, std::size_t col_begin,
                              std::size_t col_end) const {
    auto row = [&](int i) { return data + static_cast<std::size_t>(i) * row_stride; };

    for (int i = 0; i < n_; ++i) {
        double* bi = row(i);
        if (pivots_[i] != i) {
            double* bp = row(pivots_[i]);
            for (auto c = col_begin; c < col_end; ++c) {
                std::swap(bi[c], bp[c]);
            }
        }
        const int last_row = std::min(n_ - 1, i + kl_);
        for (int r = i + 1; r <= last_row; ++r) {
            const double l = lu(r, i);
            double* br = row(r);
            for (auto c = col_begin; c < col_end; ++c) {
                br[c] -= l * bi[c];
            }
        }
    }

    for (int i = n_ - 1; i >= 0; --i) {
        double* bi = row(i);
        const int last_col = std::min(n_ - 1, i + ku_);
        for (int k = i + 1; k <= last_col; ++k) {
            const double u = lu(i, k);
            const double* bk = row(k);
            for (auto c = col_begin; c < col_end; ++c) {
                bi[c] -= u * bk[c];
            }
        }
        const double d = lu(i, i);
        for (auto c = col_begin; c < col_end; ++c) {
            bi[c] /= d;
        }
    }
}

banded_lu factor(const band_matrix& A) {
    return banded_lu{A};
}

std::vector<double> solve(const banded_lu& lu, std::span<const double> rhs) {
    std::vector<double> x(rhs.begin(), rhs.end());
    lu.solve(x);
    return x;
}

namespace {

enum class integrand { mass, stiffness, advection };

band_matrix assemble(const bspline_space& space, const quad_rule& quad, integrand kind) {
    const int p = space.degree();
    band_matrix A{space.dofs(), p};
    std::vector<double> values(p + 1), derivs(p + 1);

    for (int e = 0; e < space.elements(); ++e) {
        const auto eq = map_to_element(quad, space, e);
        for (std::size_t q = 0; q < eq.points.size(); ++q) {
            const int first = space.eval_nonzero(e, eq.points[q], values, derivs);
            const double w = eq.weights[q];
            for (int a = 0; a <= p; ++a) {
                for (int b = 0; b <= p; ++b) {
                    double v = 0.0;
                    switch (kind) {
                    case integrand::mass: v = values[a] * values[b]; break;
                    case integrand::stiffness: v = derivs[a] * derivs[b]; break;
                    case integrand::advection: v = derivs[a] * values[b]; break;
                    }
                    A.at(first + a, first + b) += w * v;
                }
            }
        }
    }
    return A;
}

}  // namespace

band_matrix assemble_mass(const bspline_space& space, const quad_rule& quad) {
    return assemble(space, quad, integrand::mass);
}

band_matrix assemble_stiffness(const bspline_space& space, const quad_rule& quad) {
    return assemble(space, quad, integrand::stiffness);
}

band_matrix assemble_advection(const bspline_space& space, const quad_rule& quad) {
    return assemble(space, quad, integrand::advection);
}

band_matrix form_operator(const band_matrix& M, const band_matrix& K, const band_matrix& G, double gamma,
                          double delta, double reaction) {
    const int n = M.size();
    const int hb = M.half_bandwidth();
    if (K.size() != n || G.size() != n || K.half_bandwidth() != hb || G.half_bandwidth() != hb) {
        throw dimension_error{"form_operator: operands do not conform"};
    }
    band_matrix out{n, hb};
    for (int i = 0; i < n; ++i) {
        for (int k = std::max(0, i - hb); k <= std::min(n - 1, i + hb); ++k) {
            out.at(i, k) = M(i, k) + gamma * K(i, k) + delta * G(k, i) + reaction * M(i, k);
        }
    }
    return out;
}

}  // namespace wildfire
