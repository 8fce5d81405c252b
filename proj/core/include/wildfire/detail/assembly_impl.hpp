#ifndef WILDFIRE_DETAIL_ASSEMBLY_IMPL_HPP_
#define WILDFIRE_DETAIL_ASSEMBLY_IMPL_HPP_

#include <algorithm>
#include <cstddef>
#include <vector>

namespace wildfire {

template <typename Integrand>
rhs_grid assemble_weak_form(const discretization& disc, const coefficient_grid* T, const coefficient_grid* fuel,
                            Integrand&& integrand, const executor& exec) {
    const auto& tx = disc.table_x();
    const auto& ty = disc.table_y();
    const int p = disc.degree();
    const int n = p + 1;
    const int nex = tx.elements;
    const int ney = ty.elements;
    const std::size_t local_size = static_cast<std::size_t>(n) * n;
    const std::size_t ny = disc.ny();

    std::vector<double> local(static_cast<std::size_t>(nex) * ney * local_size, 0.0);

    exec.for_each_range(0, static_cast<std::size_t>(nex), [&](std::size_t ex_begin, std::size_t ex_end) {
        std::vector<double> cT(local_size), cF(local_size), sv(n), sd(n);
        for (auto ex = static_cast<int>(ex_begin); ex < static_cast<int>(ex_end); ++ex) {
            for (int ey = 0; ey < ney; ++ey) {
                double* out = local.data() + (static_cast<std::size_t>(ex) * ney + ey) * local_size;
                for (int a = 0; a < n; ++a) {
                    for (int b = 0; b < n; ++b) {
                        const auto gi = static_cast<std::size_t>(ex + a);
                        const auto gj = static_cast<std::size_t>(ey + b);
                        cT[a * n + b] = T ? (*T)(gi, gj) : 0.0;
                        cF[a * n + b] = fuel ? (*fuel)(gi, gj) : 0.0;
                    }
                }
                for (int qx = 0; qx < tx.points_per_element; ++qx) {
                    const double* Bx = tx.value_row(ex, qx);
                    const double* dBx = tx.deriv_row(ex, qx);
                    const double x = tx.points[tx.at(ex, qx)];
                    const double wx = tx.weights[tx.at(ex, qx)];
                    for (int qy = 0; qy < ty.points_per_element; ++qy) {
                        const double* By = ty.value_row(ey, qy);
                        const double* dBy = ty.deriv_row(ey, qy);
                        const double y = ty.points[ty.at(ey, qy)];
                        const double w = wx * ty.weights[ty.at(ey, qy)];

                        point_state s{0.0, 0.0, 0.0, 0.0};
                        for (int a = 0; a < n; ++a) {
                            double t_val = 0.0;
                            double t_dy = 0.0;
                            double f_val = 0.0;
                            for (int b = 0; b < n; ++b) {
                                t_val += cT[a * n + b] * By[b];
                                t_dy += cT[a * n + b] * dBy[b];
                                f_val += cF[a * n + b] * By[b];
                            }
                            s.T += Bx[a] * t_val;
                            s.dTdx += dBx[a] * t_val;
                            s.dTdy += Bx[a] * t_dy;
                            s.fuel += Bx[a] * f_val;
                        }

                        const source_contribution c = integrand(x, y, s);
                        const double vol = w * c.volumetric;
                        const double fx = w * c.flux_x;
                        const double fy = w * c.flux_y;
                        for (int a = 0; a < n; ++a) {
                            const double va = vol * Bx[a];
                            const double xa = fx * dBx[a];
                            const double ya = fy * Bx[a];
                            for (int b = 0; b < n; ++b) {
                                out[a * n + b] += (va + xa) * By[b] + ya * dBy[b];
                            }
                        }
                    }
                }
            }
        }
    });

    rhs_grid rhs{disc.nx(), ny};
    exec.for_each(0, disc.nx(), [&](std::size_t i) {
        const int ii = static_cast<int>(i);
        for (std::size_t j = 0; j < ny; ++j) {
            const int jj = static_cast<int>(j);
            double sum = 0.0;
            for (int ex = std::max(0, ii - p); ex <= std::min(ii, nex - 1); ++ex) {
                for (int ey = std::max(0, jj - p); ey <= std::min(jj, ney - 1); ++ey) {
                    const double* l = local.data() + (static_cast<std::size_t>(ex) * ney + ey) * local_size;
                    sum += l[(ii - ex) * n + (jj - ey)];
                }
            }
            rhs(i, j) = sum;
        }
    });
    return rhs;
}

}  // namespace wildfire

#endif  // WILDFIRE_DETAIL_ASSEMBLY_IMPL_HPP_
