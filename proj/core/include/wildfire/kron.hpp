#ifndef WILDFIRE_KRON_HPP_
#define WILDFIRE_KRON_HPP_

#include <cstddef>
#include <span>
#include <vector>

#include "wildfire/operators1d.hpp"
#include "wildfire/parallel.hpp"

namespace wildfire {

/// Nx x Ny array of tensor-product B-spline coefficients.
///
/// Storage is x-major: entry (i, j) lives at i * Ny + j, so lines of constant
/// x (y-lines) are contiguous. With this ordering vec(T) is the standard
/// Kronecker ordering, i.e. (A_x (x) A_y) acts with A_x on the first index and
/// A_y on the second.
class coefficient_grid {
public:
    coefficient_grid() = default;
    coefficient_grid(std::size_t nx, std::size_t ny, double value = 0.0)
    : nx_{nx}
    , ny_{ny}
    , values_(nx * ny, value) { }

    std::size_t nx() const noexcept { return nx_; }
    std::size_t ny() const noexcept { return ny_; }
    std::size_t size() const noexcept { return values_.size(); }

    double& operator()(std::size_t i, std::size_t j) noexcept { return values_[i * ny_ + j]; }
    double operator()(std::size_t i, std::size_t j) const noexcept { return values_[i * ny_ + j]; }

    std::span<double> values() noexcept { return values_; }
    std::span<const double> values() const noexcept { return values_; }
    double* data() noexcept { return values_.data(); }
    const double* data() const noexcept { return values_.data(); }

    void fill(double value);
    bool all_finite() const noexcept;

    friend bool operator==(const coefficient_grid&, const coefficient_grid&) = default;

private:
    std::size_t nx_ = 0;
    std::size_t ny_ = 0;
    std::vector<double> values_;
};

// Same layout as coefficient_grid; one entry per tensor-product test function.
using rhs_grid = coefficient_grid;

/// Solves (A_x (x) A_y) vec(T) = vec(rhs): A_y along every y-line, then A_x
/// along every x-line. Lines are processed in parallel; each line touches
/// disjoint memory, so the result is independent of the worker count.
coefficient_grid kron_solve(const banded_lu& lu_x, const banded_lu& lu_y, coefficient_grid rhs,
                            const executor& exec = serial_executor());

// In-place variant.
void kron_solve_inplace(const banded_lu& lu_x, const banded_lu& lu_y, coefficient_grid& rhs,
                        const executor& exec = serial_executor());

/// vec(out) = (A_x (x) A_y) vec(T).
coefficient_grid kron_apply(const band_matrix& A_x, const band_matrix& A_y, const coefficient_grid& T,
                            const executor& exec = serial_executor());

}  // namespace wildfire

#endif  // WILDFIRE_KRON_HPP_
