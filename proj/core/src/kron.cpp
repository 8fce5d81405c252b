#include "wildfire/kron.hpp"

#include <algorithm>
#include <cmath>

#include "wildfire/errors.hpp"

namespace wildfire {

namespace {

// Columns handled per task in the x-direction sweep. Only affects scheduling.
constexpr std::size_t column_block = 64;

}  // namespace

void coefficient_grid::fill(double value) {
    std::fill(values_.begin(), values_.end(), value);
}

bool coefficient_grid::all_finite() const noexcept {
    return std::all_of(values_.begin(), values_.end(), [](double v) { return std::isfinite(v); });
}

void kron_solve_inplace(const banded_lu& lu_x, const banded_lu& lu_y, coefficient_grid& rhs, const executor& exec) {
    const auto nx = rhs.nx();
    const auto ny = rhs.ny();
    if (static_cast<std::size_t>(lu_x.size()) != nx || static_cast<std::size_t>(lu_y.size()) != ny) {
        throw dimension_error{"kron_solve: factor dimensions do not match the grid"};
    }
    double* data = rhs.data();

    exec.for_each(0, nx, [&](std::size_t i) { lu_y.solve_columns(data + i * ny, 1, 0, 1); });

    const auto blocks = (ny + column_block - 1) / column_block;
    exec.for_each(0, blocks, [&](std::size_t b) {
        const auto c0 = b * column_block;
        const auto c1 = std::min(ny, c0 + column_block);
        lu_x.solve_columns(data, ny, c0, c1);
    });
}

coefficient_grid kron_solve(const banded_lu& lu_x, const banded_lu& lu_y, coefficient_grid rhs,
                            const executor& exec) {
    kron_solve_inplace(lu_x, lu_y, rhs, exec);
    return rhs;
}

coefficient_grid kron_apply(const band_matrix& A_x, const band_matrix& A_y, const coefficient_grid& T,
                            const executor& exec) {
    const auto nx = T.nx();
    const auto ny = T.ny();
    if (static_cast<std::size_t>(A_x.size()) != nx || static_cast<std::size_t>(A_y.size()) != ny) {
        throw dimension_error{"kron_apply: operator dimensions do not match the grid"};
    }
    coefficient_grid tmp{nx, ny};
    coefficient_grid out{nx, ny};

    exec.for_each(0, nx, [&](std::size_t i) {
        A_y.multiply(std::span<const double>{T.data() + i * ny, ny}, std::span<double>{tmp.data() + i * ny, ny});
    });

    const auto blocks = (ny + column_block - 1) / column_block;
    exec.for_each(0, blocks, [&](std::size_t b) {
        const auto c0 = b * column_block;
        const auto c1 = std::min(ny, c0 + column_block);
        A_x.multiply_columns(tmp.data(), out.data(), ny, c0, c1);
    });
    return out;
}

}  // namespace wildfire
