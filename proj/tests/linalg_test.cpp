// Copyright 2026 The unirel Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "unirel/linalg.hpp"

#include <cmath>
#include <limits>

#include "gtest/gtest.h"
#include "test_util.hpp"
#include "unirel/random.hpp"

using namespace unirel;
using namespace unirel::linalg;
using unirel::testing::diag;
using unirel::testing::expect_error;
using unirel::testing::hermitian;
using unirel::testing::matrix;

namespace {

double max_diff(const HermitianMatrix &a, const HermitianMatrix &b) {
    return max_abs_diff(a.matrix(), b.matrix());
}

}  // namespace

TEST(complex_matrix, shape_checks) {
    expect_error(ErrorCode::kShapeMismatch, [] { ComplexMatrix(2, 2, std::vector<Complex>(3)); });
    expect_error(ErrorCode::kShapeMismatch, [] { ComplexMatrix(2, 3).trace(); });
    ComplexMatrix a(2, 2);
    expect_error(ErrorCode::kDimMismatch, [&] { a += ComplexMatrix(3, 3); });
    expect_error(ErrorCode::kDimMismatch, [] { (void)(ComplexMatrix(2, 3) * ComplexMatrix(2, 3)); });
}

TEST(complex_matrix, adjoint_and_product) {
    const ComplexMatrix a = matrix(2, 3, {{1, 1}, {2, 0}, {0, -1}, {3, 0}, {0, 2}, {1, 0}});
    const ComplexMatrix ah = a.adjoint();
    EXPECT_EQ(ah.rows(), 3u);
    EXPECT_EQ(ah(0, 0), Complex(1, -1));
    EXPECT_EQ(ah(2, 0), Complex(0, 1));
    const ComplexMatrix g = a * ah;
    EXPECT_NEAR(g.trace().imag(), 0.0, 1e-15);
    EXPECT_NEAR(g.trace().real(), 1 + 1 + 4 + 1 + 9 + 4 + 1, 1e-14);
}

TEST(hermitian_matrix, rejects_non_hermitian) {
    expect_error(ErrorCode::kNotHermitian, [] { hermitian(2, {{1, 0}, {1, 0}, {0, 0}, {1, 0}}); });
    expect_error(ErrorCode::kNotHermitian, [] { hermitian(1, {{1, 1}}); });
    expect_error(ErrorCode::kShapeMismatch, [] { HermitianMatrix(ComplexMatrix(2, 3)); });
}

TEST(hermitian_matrix, symmetrizes_small_drift) {
    const HermitianMatrix h = hermitian(2, {{1, 0}, {0.5, 0.25 + 4e-11}, {0.5, -0.25}, {2, 0}});
    EXPECT_EQ(h(0, 1), std::conj(h(1, 0)));
    EXPECT_NEAR(h(0, 1).imag(), 0.25 + 2e-11, 1e-16);
}

TEST(jacobi_eig, diagonal_input) {
    const SpectralDecomposition s = jacobi_eig(diag({3, 1}));
    EXPECT_EQ(s.eigenvalues, (std::vector<double>{3, 1}));
    EXPECT_EQ(max_abs_diff(s.eigenvectors, ComplexMatrix::identity(2)), 0.0);
}

TEST(jacobi_eig, sorts_descending) {
    const SpectralDecomposition s = jacobi_eig(diag({1, 5, -2, 3}));
    EXPECT_EQ(s.eigenvalues, (std::vector<double>{5, 3, 1, -2}));
    EXPECT_LE(max_abs_diff(s.reconstruct(), diag({1, 5, -2, 3}).matrix()), 1e-15);
}

TEST(jacobi_eig, pauli_x) {
    // characteristic polynomial lambda^2 - 1
    const SpectralDecomposition s = jacobi_eig(hermitian(2, {{0, 0}, {1, 0}, {1, 0}, {0, 0}}));
    EXPECT_NEAR(s.eigenvalues[0], 1.0, 1e-15);
    EXPECT_NEAR(s.eigenvalues[1], -1.0, 1e-15);
}

TEST(jacobi_eig, identity_has_orthonormal_basis) {
    const SpectralDecomposition s = jacobi_eig(HermitianMatrix::identity(2));
    EXPECT_EQ(s.eigenvalues, (std::vector<double>{1, 1}));
    EXPECT_LE(max_abs_diff(s.eigenvectors.adjoint() * s.eigenvectors, ComplexMatrix::identity(2)), 1e-15);
}

TEST(jacobi_eig, complex_entries) {
    // [[2, i], [-i, 2]] has eigenvalues 3 and 1
    const SpectralDecomposition s = jacobi_eig(hermitian(2, {{2, 0}, {0, 1}, {0, -1}, {2, 0}}));
    EXPECT_NEAR(s.eigenvalues[0], 3.0, 1e-14);
    EXPECT_NEAR(s.eigenvalues[1], 1.0, 1e-14);
}

TEST(jacobi_eig, clamps_kernel_to_exact_zero) {
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
        const std::size_t dim = 2 + seed % 7;
        const std::size_t rank = 1 + seed % dim;
        const SpectralDecomposition s = jacobi_eig(random::rand_psd(dim, rank, seed));
        EXPECT_EQ(s.rank(), rank) << "seed " << seed;
        for (std::size_t k = rank; k < dim; ++k) {
            EXPECT_EQ(s.eigenvalues[k], 0.0);
        }
    }
}

TEST(jacobi_eig, residues_on_random_hermitian) {
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
        const std::size_t dim = 2 + seed % 7;
        const HermitianMatrix h = random::rand_hermitian(dim, seed);
        const SpectralDecomposition s = jacobi_eig(h);
        EXPECT_LE(max_abs_diff(s.reconstruct(), h.matrix()), 1e-9);
        EXPECT_LE(max_abs_diff(s.eigenvectors.adjoint() * s.eigenvectors, ComplexMatrix::identity(dim)), 1e-9);
        EXPECT_TRUE(std::is_sorted(s.eigenvalues.rbegin(), s.eigenvalues.rend()));
    }
}

TEST(jacobi_eig, errors) {
    expect_error(ErrorCode::kDomainError, [] { jacobi_eig(diag({1, 2}), 0.0); });
    expect_error(ErrorCode::kNoConvergence,
                 [] { jacobi_eig(diag({std::numeric_limits<double>::quiet_NaN(), 1.0})); });
    ComplexMatrix nan(2, 2);
    nan(0, 1) = nan(1, 0) = std::numeric_limits<double>::quiet_NaN();
    expect_error(ErrorCode::kNotHermitian, [&] { HermitianMatrix::symmetrized(nan); });
}

TEST(matrix_power, examples) {
    EXPECT_NEAR(matrix_power(jacobi_eig(diag({0.25})), 0.5)(0, 0).real(), 0.5, 1e-16);
    EXPECT_EQ(max_diff(matrix_power(jacobi_eig(diag({0.5, 0})), 0.0), diag({1, 0})), 0.0);
    EXPECT_LE(max_diff(matrix_power(jacobi_eig(diag({4, 1})), -1.0), diag({0.25, 1})), 1e-16);
}

TEST(matrix_power, zero_eigenvalue_conventions) {
    const SpectralDecomposition s = jacobi_eig(diag({0.5, 0}));
    EXPECT_EQ(max_diff(matrix_power(s, 2.0), diag({0.25, 0})), 0.0);
    expect_error(ErrorCode::kSingularNegativePower, [&] { matrix_power(s, -0.5); });
}

TEST(matrix_power, rejects_negative_eigenvalues) {
    expect_error(ErrorCode::kNegativeEigenvalue, [] { matrix_power(jacobi_eig(diag({1, -1e-6})), 0.5); });
    // within tolerance: treated as zero
    EXPECT_NO_THROW(matrix_power(jacobi_eig(diag({1, -1e-9})), 0.5));
}

TEST(matrix_power, power_laws) {
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
        const std::size_t dim = 2 + seed % 5;
        const HermitianMatrix h = random::rand_psd(dim, dim, seed);
        const SpectralDecomposition s = jacobi_eig(h);
        EXPECT_LE(max_diff(matrix_power(s, 1.0), h), 1e-10);
        for (auto [a, b] : {std::pair{0.5, 2.0}, {0.3, 1.7}, {2.0, -0.5}}) {
            const HermitianMatrix lhs = matrix_power(jacobi_eig(matrix_power(s, a)), b);
            EXPECT_LE(max_diff(lhs, matrix_power(s, a * b)), 1e-8) << "seed " << seed << " a " << a << " b " << b;
        }
    }
}

TEST(matrix_log_on_support, examples) {
    EXPECT_EQ(matrix_log_on_support(jacobi_eig(diag({1})))(0, 0), Complex(0, 0));
    EXPECT_LE(max_diff(matrix_log_on_support(jacobi_eig(diag({std::exp(1.0), 1}))), diag({1, 0})), 1e-15);
    EXPECT_LE(max_diff(matrix_log_on_support(jacobi_eig(diag({0.5, 0}))), diag({-std::log(2.0), 0})), 1e-16);
}

TEST(trace_product, examples) {
    EXPECT_EQ(trace_product(HermitianMatrix::identity(2), HermitianMatrix::identity(2)), 2.0);
    EXPECT_EQ(trace_product(diag({0.5, 0.5}), diag({0.25, 0.75})), 0.5);
    EXPECT_EQ(trace_product(diag({1, 0}), diag({0, 1})), 0.0);
}

TEST(trace_product, dim_mismatch) {
    expect_error(ErrorCode::kDimMismatch, [] { trace_product(diag({1, 0}), diag({1, 0, 0})); });
}

TEST(tensor_product, examples) {
    EXPECT_EQ(max_diff(tensor_product(HermitianMatrix::identity(2), HermitianMatrix::identity(2)),
                       HermitianMatrix::identity(4)),
              0.0);
    EXPECT_EQ(max_diff(tensor_product(diag({1, 0}), diag({0.5, 0.5})), diag({0.5, 0.5, 0, 0})), 0.0);
}

TEST(tensor_product, trace_is_multiplicative) {
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        const HermitianMatrix a = random::rand_hermitian(2 + seed % 3, seed);
        const HermitianMatrix b = random::rand_hermitian(2 + seed % 4, seed + 100);
        EXPECT_NEAR(tensor_product(a, b).trace(), a.trace() * b.trace(), 1e-12);
    }
}

TEST(partial_trace, examples) {
    const HermitianMatrix m = diag({0.5, 0.5, 0, 0});
    // keep = kFirst traces out the second factor
    EXPECT_EQ(max_diff(partial_trace(m, 2, 2, Subsystem::kFirst), diag({1, 0})), 0.0);
    EXPECT_EQ(max_diff(partial_trace(m, 2, 2, Subsystem::kSecond), diag({0.5, 0.5})), 0.0);

    // Bell state (|00> + |11>)/sqrt 2
    ComplexMatrix bell(4, 4);
    bell(0, 0) = bell(0, 3) = bell(3, 0) = bell(3, 3) = 0.5;
    const HermitianMatrix b(bell);
    EXPECT_LE(max_diff(partial_trace(b, 2, 2, Subsystem::kSecond), diag({0.5, 0.5})), 1e-16);
    EXPECT_LE(max_diff(partial_trace(b, 2, 2, Subsystem::kFirst), diag({0.5, 0.5})), 1e-16);
}

TEST(partial_trace, of_tensor_product) {
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        const std::size_t d1 = 2 + seed % 2;
        const std::size_t d2 = 2 + seed % 3;
        const HermitianMatrix a = random::rand_hermitian(d1, seed);
        const HermitianMatrix b = random::rand_hermitian(d2, seed + 100);
        const HermitianMatrix ab = tensor_product(a, b);
        EXPECT_LE(max_diff(partial_trace(ab, d1, d2, Subsystem::kFirst), b.trace() * a), 1e-10);
        EXPECT_LE(max_diff(partial_trace(ab, d1, d2, Subsystem::kSecond), a.trace() * b), 1e-10);
        EXPECT_NEAR(partial_trace(ab, d1, d2, Subsystem::kFirst).trace(), ab.trace(), 1e-12);
    }
}

TEST(partial_trace, is_linear) {
    const HermitianMatrix a = random::rand_hermitian(6, 1);
    const HermitianMatrix b = random::rand_hermitian(6, 2);
    const HermitianMatrix lhs = partial_trace(0.3 * a + 1.7 * b, 2, 3, Subsystem::kFirst);
    const HermitianMatrix rhs =
        0.3 * partial_trace(a, 2, 3, Subsystem::kFirst) + 1.7 * partial_trace(b, 2, 3, Subsystem::kFirst);
    EXPECT_LE(max_diff(lhs, rhs), 1e-13);
}

TEST(partial_trace, factorization_mismatch) {
    expect_error(ErrorCode::kDimFactorizationMismatch,
                 [] { partial_trace(HermitianMatrix::identity(6), 2, 2, Subsystem::kFirst); });
    expect_error(ErrorCode::kDimFactorizationMismatch,
                 [] { partial_trace(HermitianMatrix::identity(4), 0, 4, Subsystem::kFirst); });
}

TEST(support_projection, examples) {
    EXPECT_EQ(max_diff(support_projection(jacobi_eig(diag({0.5, 0.5}))), HermitianMatrix::identity(2)), 0.0);
    EXPECT_EQ(max_diff(support_projection(jacobi_eig(diag({1, 0}))), diag({1, 0})), 0.0);
}

TEST(support_projection, idempotent_and_absorbing) {
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
        const std::size_t dim = 2 + seed % 5;
        const HermitianMatrix h = random::rand_psd(dim, 1 + seed % dim, seed);
        const HermitianMatrix p = support_projection(jacobi_eig(h));
        EXPECT_LE(max_abs_diff(p.matrix() * p.matrix(), p.matrix()), 1e-8);
        EXPECT_LE(max_abs_diff(p.matrix() * h.matrix(), h.matrix()), 1e-8);
        EXPECT_LE(max_abs_diff(h.matrix() * p.matrix(), h.matrix()), 1e-8);
    }
}

TEST(support_projection, range_of_positive_combination) {
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
        const std::size_t dim = 2 + seed % 5;
        const HermitianMatrix a = random::rand_psd(dim, 1 + seed % dim, seed);
        const HermitianMatrix b = random::rand_psd(dim, 1 + (seed / 3) % dim, seed + 500);
        EXPECT_LE(max_diff(support_projection(jacobi_eig(0.3 * a + 0.7 * b)), support_projection(jacobi_eig(a + b))),
                  1e-6);
    }
}
