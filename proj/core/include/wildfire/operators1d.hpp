#ifndef WILDFIRE_OPERATORS1D_HPP_
#define WILDFIRE_OPERATORS1D_HPP_

#include <cstddef>
#include <span>
#include <vector>

#include "wildfire/bspline.hpp"

namespace wildfire {

/// Square banded matrix with equal lower/upper half-bandwidth. Entry (i, k)
/// is structurally zero when |i - k| > half_bandwidth.
class band_matrix {
public:
    band_matrix() = default;
    band_matrix(int n, int half_bandwidth);

    int size() const noexcept { return n_; }
    int half_bandwidth() const noexcept { return hb_; }

    bool in_band(int i, int k) const noexcept { return i - k <= hb_ && k - i <= hb_; }

    double operator()(int i, int k) const noexcept { return in_band(i, k) ? data_[index(i, k)] : 0.0; }
    double& at(int i, int k) noexcept { return data_[index(i, k)]; }

    // y = A x
    void multiply(std::span<const double> x, std::span<double> y) const;

    // Column-strided product over the columns [col_begin, col_end) of a
    // row-major block whose rows are `row_stride` apart: out(:, c) = A in(:, c).
    void multiply_columns(const double* in, double* out, std::size_t row_stride, std::size_t col_begin,
                          std::size_t col_end) const;

    band_matrix transposed() const;
    std::vector<double> to_dense() const;  // row-major n x n

private:
    std::size_t index(int i, int k) const noexcept {
        return static_cast<std::size_t>(i) * (2 * hb_ + 1) + static_cast<std::size_t>(k - i + hb_);
    }

    int n_ = 0;
    int hb_ = 0;
    std::vector<double> data_;
};

/// LU factorization with partial pivoting of a band_matrix. Row interchanges
/// widen the upper band to 2 * half_bandwidth.
class banded_lu {
public:
    explicit banded_lu(const band_matrix& A);

    int size() const noexcept { return n_; }

    void solve(std::span<double> rhs) const;

    // In-place solve for the columns [col_begin, col_end) of a row-major block
    // whose rows are `row_stride` apart. Each column goes through the same
    // operation sequence as solve(), so results agree bit for bit.
    void solve_columns(double* data, std::size_t row_stride, std::size_t col_begin, std::size_t col_end) const;

private:
    double& lu(int i, int c) noexcept { return data_[static_cast<std::size_t>(i) * width_ + (c - i + kl_)]; }
    double lu(int i, int c) const noexcept { return data_[static_cast<std::size_t>(i) * width_ + (c - i + kl_)]; }

    int n_;
    int kl_;
    int ku_;  // upper bandwidth after fill
    std::size_t width_;
    std::vector<double> data_;
    std::vector<int> pivots_;
};

banded_lu factor(const band_matrix& A);
std::vector<double> solve(const banded_lu& lu, std::span<const double> rhs);

// {M}_{ik} = \int B_i B_k
band_matrix assemble_mass(const bspline_space& space, const quad_rule& quad);
// {K}_{ik} = \int B_i' B_k'
band_matrix assemble_stiffness(const bspline_space& space, const quad_rule& quad);
// {G}_{ik} = \int B_i' B_k
band_matrix assemble_advection(const bspline_space& space, const quad_rule& quad);

/// M + gamma K + delta G^T + reaction M.
///
/// G is transposed so that row k tests against B_k: (G^T T)_k = \int (dT/ds) B_k.
/// The reaction multiplier enters as a multiple of the mass matrix; callers
/// choose its sign and time weight.
band_matrix form_operator(const band_matrix& M, const band_matrix& K, const band_matrix& G, double gamma,
                          double delta, double reaction);

}  // namespace wildfire

#endif  // WILDFIRE_OPERATORS1D_HPP_
