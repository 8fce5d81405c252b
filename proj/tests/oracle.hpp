// Dense reference implementations used as independent oracles.
#ifndef WILDFIRE_TESTS_ORACLE_HPP_
#define WILDFIRE_TESTS_ORACLE_HPP_

#include <random>
#include <vector>

#include <Eigen/Dense>

#include "wildfire/kron.hpp"
#include "wildfire/operators1d.hpp"

namespace oracle {

inline Eigen::MatrixXd dense(const wildfire::band_matrix& A) {
    const int n = A.size();
    Eigen::MatrixXd D = Eigen::MatrixXd::Zero(n, n);
    for (int i = 0; i < n; ++i) {
        for (int k = 0; k < n; ++k) {
            D(i, k) = A(i, k);
        }
    }
    return D;
}

inline Eigen::MatrixXd kron(const Eigen::MatrixXd& A, const Eigen::MatrixXd& B) {
    Eigen::MatrixXd K(A.rows() * B.rows(), A.cols() * B.cols());
    for (int i = 0; i < A.rows(); ++i) {
        for (int k = 0; k < A.cols(); ++k) {
            K.block(i * B.rows(), k * B.cols(), B.rows(), B.cols()) = A(i, k) * B;
        }
    }
    return K;
}

// vec ordering with the first index outermost: entry (i, j) -> i * ny + j.
inline Eigen::VectorXd vec(const wildfire::coefficient_grid& g) {
    Eigen::VectorXd v(static_cast<Eigen::Index>(g.size()));
    for (std::size_t k = 0; k < g.size(); ++k) {
        v(static_cast<Eigen::Index>(k)) = g.data()[k];
    }
    return v;
}

inline wildfire::coefficient_grid grid(const Eigen::VectorXd& v, std::size_t nx, std::size_t ny) {
    wildfire::coefficient_grid g{nx, ny};
    for (std::size_t k = 0; k < g.size(); ++k) {
        g.data()[k] = v(static_cast<Eigen::Index>(k));
    }
    return g;
}

inline wildfire::coefficient_grid random_grid(std::size_t nx, std::size_t ny, std::mt19937& rng) {
    std::uniform_real_distribution<double> u{-1.0, 1.0};
    wildfire::coefficient_grid g{nx, ny};
    for (auto& v : g.values()) {
        v = u(rng);
    }
    return g;
}

// Random banded matrix made nonsingular by a dominant diagonal of random sign.
inline wildfire::band_matrix random_band(int n, int hb, std::mt19937& rng) {
    std::uniform_real_distribution<double> u{-1.0, 1.0};
    wildfire::band_matrix A{n, hb};
    for (int i = 0; i < n; ++i) {
        for (int k = std::max(0, i - hb); k <= std::min(n - 1, i + hb); ++k) {
            A.at(i, k) = u(rng);
        }
        A.at(i, i) += (u(rng) < 0 ? -1.0 : 1.0) * (2.0 * hb + 1.0);
    }
    return A;
}

inline double max_abs(const Eigen::VectorXd& v) { return v.cwiseAbs().maxCoeff(); }

}  // namespace oracle

#endif  // WILDFIRE_TESTS_ORACLE_HPP_
