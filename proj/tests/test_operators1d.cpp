#include <cmath>
#include <random>
#include <vector>

#include <gtest/gtest.h>

#include "oracle.hpp"
#include "wildfire/bspline.hpp"
#include "wildfire/errors.hpp"
#include "wildfire/operators1d.hpp"

using namespace wildfire;

namespace {

struct matrices {
    band_matrix M, K, G;
};

matrices assemble_all(const bspline_space& s) {
    const auto q = default_quadrature(s);
    return {assemble_mass(s, q), assemble_stiffness(s, q), assemble_advection(s, q)};
}

// Entry-by-entry assembly with a high-order rule on each knot span, using
// dense basis evaluation.
Eigen::MatrixXd dense_oracle(const bspline_space& s, int which) {
    const int n = s.dofs();
    Eigen::MatrixXd D = Eigen::MatrixXd::Zero(n, n);
    const auto rule = gauss_legendre(8);
    for (int e = 0; e < s.elements(); ++e) {
        const double a = s.element_begin(e);
        const double b = s.element_end(e);
        for (int q = 0; q < rule.size(); ++q) {
            const double x = 0.5 * (a + b) + 0.5 * (b - a) * rule.points[q];
            const double w = 0.5 * (b - a) * rule.weights[q];
            const auto nz = eval_nonzero(s, x);
            for (int i = 0; i <= s.degree(); ++i) {
                for (int k = 0; k <= s.degree(); ++k) {
                    double v = 0.0;
                    if (which == 0) {
                        v = nz.values[i] * nz.values[k];
                    } else if (which == 1) {
                        v = nz.derivs[i] * nz.derivs[k];
                    } else {
                        v = nz.derivs[i] * nz.values[k];
                    }
                    D(nz.first + i, nz.first + k) += w * v;
                }
            }
        }
    }
    return D;
}

}  // namespace

TEST(Operators1D, LinearSingleElementMatrices) {
    const auto m = assemble_all(make_space(1, 1, 0.0, 1.0));
    EXPECT_NEAR(m.M(0, 0), 1.0 / 3, 1e-14);
    EXPECT_NEAR(m.M(0, 1), 1.0 / 6, 1e-14);
    EXPECT_NEAR(m.M(1, 0), 1.0 / 6, 1e-14);
    EXPECT_NEAR(m.M(1, 1), 1.0 / 3, 1e-14);
    EXPECT_NEAR(m.K(0, 0), 1.0, 1e-14);
    EXPECT_NEAR(m.K(0, 1), -1.0, 1e-14);
    EXPECT_NEAR(m.K(1, 0), -1.0, 1e-14);
    EXPECT_NEAR(m.K(1, 1), 1.0, 1e-14);
    EXPECT_NEAR(m.G(0, 0), -0.5, 1e-14);
    EXPECT_NEAR(m.G(0, 1), -0.5, 1e-14);
    EXPECT_NEAR(m.G(1, 0), 0.5, 1e-14);
    EXPECT_NEAR(m.G(1, 1), 0.5, 1e-14);
}

TEST(Operators1D, MassTotalEqualsDomainLength) {
    for (int p : {1, 2, 3, 4}) {
        const auto s = make_space(p, 9, -2.0, 5.0);
        const auto D = oracle::dense(assemble_all(s).M);
        EXPECT_NEAR(D.sum(), 7.0, 1e-12);
        EXPECT_NEAR((D - D.transpose()).cwiseAbs().maxCoeff(), 0.0, 1e-14);
        const Eigen::LLT<Eigen::MatrixXd> llt{D};
        EXPECT_EQ(llt.info(), Eigen::Success);
    }
}

TEST(Operators1D, StiffnessRowSumsVanish) {
    for (int p : {1, 2, 3}) {
        const auto s = make_space(p, 11, 0.0, 3.0);
        const auto D = oracle::dense(assemble_all(s).K);
        EXPECT_LT(D.rowwise().sum().cwiseAbs().maxCoeff(), 1e-12);
        EXPECT_LT((D - D.transpose()).cwiseAbs().maxCoeff(), 1e-12);
        const Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig{D};
        EXPECT_GT(eig.eigenvalues().minCoeff(), -1e-10);
    }
}

TEST(Operators1D, AdvectionColumnAndRowSums) {
    for (int p : {1, 2, 3}) {
        const auto s = make_space(p, 6, 0.0, 2.0);
        const auto D = oracle::dense(assemble_all(s).G);
        EXPECT_LT(D.colwise().sum().cwiseAbs().maxCoeff(), 1e-12);
        const Eigen::VectorXd rows = D.rowwise().sum();
        for (int i = 0; i < s.dofs(); ++i) {
            // B_i(b) - B_i(a): -1 for the first function, +1 for the last.
            const double expected = (i == s.dofs() - 1 ? 1.0 : 0.0) - (i == 0 ? 1.0 : 0.0);
            EXPECT_NEAR(rows(i), expected, 1e-12);
        }
        // Integration by parts: G + G^T = [B_i B_k] evaluated between the ends.
        const Eigen::MatrixXd S = D + D.transpose();
        const int n = s.dofs();
        for (int i = 0; i < n; ++i) {
            for (int k = 0; k < n; ++k) {
                const double boundary = (i == n - 1 && k == n - 1 ? 1.0 : 0.0) - (i == 0 && k == 0 ? 1.0 : 0.0);
                EXPECT_NEAR(S(i, k), boundary, 1e-12);
            }
        }
    }
}

TEST(Operators1D, MatchesDenseQuadratureOracle) {
    const auto s3 = make_space(2, 3, 0.0, 1.0);
    EXPECT_LT((oracle::dense(assemble_all(s3).M) - dense_oracle(s3, 0)).cwiseAbs().maxCoeff(), 1e-13);
    const auto s4 = make_space(2, 4, 0.0, 1.0);
    EXPECT_LT((oracle::dense(assemble_all(s4).K) - dense_oracle(s4, 1)).cwiseAbs().maxCoeff(), 1e-13);
    EXPECT_LT((oracle::dense(assemble_all(s4).G) - dense_oracle(s4, 2)).cwiseAbs().maxCoeff(), 1e-13);
}

TEST(Operators1D, OutOfBandEntriesAreZero) {
    const auto m = assemble_all(make_space(2, 8, 0.0, 1.0));
    for (int i = 0; i < m.M.size(); ++i) {
        for (int k = 0; k < m.M.size(); ++k) {
            if (std::abs(i - k) > 2) {
                EXPECT_EQ(m.M(i, k), 0.0);
                EXPECT_EQ(m.K(i, k), 0.0);
                EXPECT_EQ(m.G(i, k), 0.0);
            }
        }
    }
}

TEST(Operators1D, TranslationInvariant) {
    const auto a = assemble_all(make_space(3, 10, 0.0, 5.0));
    const auto b = assemble_all(make_space(3, 10, 12.5, 17.5));
    for (int i = 0; i < a.M.size(); ++i) {
        for (int k = 0; k < a.M.size(); ++k) {
            EXPECT_NEAR(a.M(i, k), b.M(i, k), 1e-14);
            EXPECT_NEAR(a.K(i, k), b.K(i, k), 1e-14);
            EXPECT_NEAR(a.G(i, k), b.G(i, k), 1e-14);
        }
    }
}

TEST(FormOperator, ZeroCoefficientsGiveMass) {
    const auto m = assemble_all(make_space(2, 5, 0.0, 1.0));
    const auto A = form_operator(m.M, m.K, m.G, 0.0, 0.0, 0.0);
    EXPECT_EQ(oracle::dense(A), oracle::dense(m.M));
}

TEST(FormOperator, LinearSingleElementMassPlusStiffness) {
    const auto m = assemble_all(make_space(1, 1, 0.0, 1.0));
    const auto A = form_operator(m.M, m.K, m.G, 1.0, 0.0, 0.0);
    EXPECT_NEAR(A(0, 0), 4.0 / 3, 1e-14);
    EXPECT_NEAR(A(0, 1), -5.0 / 6, 1e-14);
    EXPECT_NEAR(A(1, 0), -5.0 / 6, 1e-14);
    EXPECT_NEAR(A(1, 1), 4.0 / 3, 1e-14);
}

TEST(FormOperator, MatchesDenseSum) {
    const auto m = assemble_all(make_space(3, 7, 0.0, 2.0));
    const double g = 0.37, d = -1.9, r = 0.041;
    const auto A = form_operator(m.M, m.K, m.G, g, d, r);
    const Eigen::MatrixXd expected =
        (1 + r) * oracle::dense(m.M) + g * oracle::dense(m.K) + d * oracle::dense(m.G).transpose();
    EXPECT_LT((oracle::dense(A) - expected).cwiseAbs().maxCoeff(), 1e-14);
}

TEST(FormOperator, DimensionMismatchThrows) {
    const auto a = assemble_all(make_space(2, 5, 0.0, 1.0));
    const auto b = assemble_all(make_space(2, 6, 0.0, 1.0));
    EXPECT_THROW(form_operator(a.M, b.K, a.G, 1, 1, 0), dimension_error);
}

TEST(BandedLU, IdentitySolve) {
    band_matrix I{6, 2};
    for (int i = 0; i < 6; ++i) {
        I.at(i, i) = 1.0;
    }
    const std::vector<double> rhs{1, -2, 3, -4, 5, -6};
    EXPECT_EQ(solve(factor(I), rhs), rhs);
}

TEST(BandedLU, LinearMassRowSums) {
    const auto m = assemble_all(make_space(1, 1, 0.0, 1.0));
    const auto x = solve(factor(m.M), std::vector<double>{0.5, 0.5});
    EXPECT_NEAR(x[0], 1.0, 1e-14);
    EXPECT_NEAR(x[1], 1.0, 1e-14);
}

TEST(BandedLU, RandomSpdAgainstDenseLu) {
    std::mt19937 rng{11};
    std::uniform_real_distribution<double> u{-1.0, 1.0};
    const int n = 20;
    const int hb = 3;
    band_matrix B{n, hb};
    for (int i = 0; i < n; ++i) {
        for (int k = i; k <= std::min(n - 1, i + hb); ++k) {
            const double v = k == i ? 10.0 + u(rng) : u(rng);
            B.at(i, k) = v;
            B.at(k, i) = v;
        }
    }
    std::vector<double> rhs(n);
    for (auto& v : rhs) {
        v = u(rng);
    }
    const auto x = solve(factor(B), rhs);
    const Eigen::VectorXd r = Eigen::Map<const Eigen::VectorXd>(rhs.data(), n);
    const Eigen::VectorXd ref = oracle::dense(B).partialPivLu().solve(r);
    for (int i = 0; i < n; ++i) {
        EXPECT_NEAR(x[i], ref(i), 1e-11);
    }
}

TEST(BandedLU, PivotingNonsymmetricResidual) {
    std::mt19937 rng{5};
    std::uniform_real_distribution<double> u{-1.0, 1.0};
    for (int trial = 0; trial < 100; ++trial) {
        const int n = 5 + trial % 30;
        const int hb = 1 + trial % 4;
        band_matrix A{n, hb};
        for (int i = 0; i < n; ++i) {
            for (int k = std::max(0, i - hb); k <= std::min(n - 1, i + hb); ++k) {
                A.at(i, k) = u(rng);
            }
        }
        std::vector<double> rhs(n);
        for (auto& v : rhs) {
            v = u(rng);
        }
        const auto x = solve(factor(A), rhs);
        std::vector<double> Ax(n);
        A.multiply(x, Ax);
        double num = 0.0, den = 0.0;
        for (int i = 0; i < n; ++i) {
            num += (Ax[i] - rhs[i]) * (Ax[i] - rhs[i]);
            den += rhs[i] * rhs[i];
        }
        // Random matrices can be ill-conditioned; compare against the dense LU
        // residual rather than an absolute bound.
        const Eigen::MatrixXd D = oracle::dense(A);
        const Eigen::VectorXd r = Eigen::Map<const Eigen::VectorXd>(rhs.data(), n);
        const Eigen::VectorXd ref = D.partialPivLu().solve(r);
        const double ref_res = (D * ref - r).norm() / r.norm();
        EXPECT_LT(std::sqrt(num / den), std::max(1e-12, 100 * ref_res)) << "trial " << trial;
    }
}

TEST(BandedLU, WellConditionedResidualBelowTolerance) {
    std::mt19937 rng{8};
    const auto s = make_space(2, 40, 0.0, 1.0);
    const auto m = assemble_all(s);
    const auto A = form_operator(m.M, m.K, m.G, 1e-3, 0.4, 0.01);
    const auto lu = factor(A);
    std::uniform_real_distribution<double> u{-1.0, 1.0};
    for (int trial = 0; trial < 100; ++trial) {
        std::vector<double> rhs(A.size());
        for (auto& v : rhs) {
            v = u(rng);
        }
        const auto x = solve(lu, rhs);
        std::vector<double> Ax(A.size());
        A.multiply(x, Ax);
        double num = 0.0, den = 0.0;
        for (std::size_t i = 0; i < rhs.size(); ++i) {
            num += (Ax[i] - rhs[i]) * (Ax[i] - rhs[i]);
            den += rhs[i] * rhs[i];
        }
        EXPECT_LT(std::sqrt(num / den), 1e-12);
    }
}

TEST(BandedLU, SingularPivotThrows) {
    band_matrix A{3, 1};
    A.at(0, 0) = 1.0;
    A.at(1, 1) = 0.0;
    A.at(2, 2) = 1.0;
    EXPECT_THROW(factor(A), factorization_error);
}

TEST(BandedLU, ColumnSolveMatchesSingleSolveBitwise) {
    std::mt19937 rng{21};
    const int n = 13;
    const auto A = oracle::random_band(n, 2, rng);
    const auto lu = factor(A);
    const std::size_t cols = 7;
    std::vector<double> block(n * cols);
    std::uniform_real_distribution<double> u{-1.0, 1.0};
    for (auto& v : block) {
        v = u(rng);
    }
    auto strided = block;
    lu.solve_columns(strided.data(), cols, 0, cols);
    for (std::size_t c = 0; c < cols; ++c) {
        std::vector<double> col(n);
        for (int i = 0; i < n; ++i) {
            col[i] = block[i * cols + c];
        }
        lu.solve(col);
        for (int i = 0; i < n; ++i) {
            EXPECT_EQ(col[i], strided[i * cols + c]);
        }
    }
}
