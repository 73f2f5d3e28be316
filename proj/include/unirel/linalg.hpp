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

#pragma once

#include <complex>
#include <cstddef>
#include <functional>
#include <span>
#include <vector>

namespace unirel::linalg {

using Complex = std::complex<double>;

inline constexpr double kHermiticityTol = 1e-10;
inline constexpr double kDefaultJacobiTol = 1e-12;
inline constexpr int kMaxJacobiSweeps = 100;
/// Eigenvalues this far below zero are rejected by the functional calculus.
inline constexpr double kNegativeEigenvalueTol = 1e-8;
inline constexpr double kNonRealTraceTol = 1e-9;

/// Dense row-major complex matrix.
class ComplexMatrix {
  public:
    ComplexMatrix() = default;
    ComplexMatrix(std::size_t rows, std::size_t cols);
    /// Throws kShapeMismatch unless entries.size() == rows * cols.
    ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries);

    static ComplexMatrix identity(std::size_t n);

    std::size_t rows() const noexcept {
        return rows_;
    }
    std::size_t cols() const noexcept {
        return cols_;
    }
    bool is_square() const noexcept {
        return rows_ == cols_;
    }

    Complex &operator()(std::size_t i, std::size_t j) {
        return entries_[i * cols_ + j];
    }
    const Complex &operator()(std::size_t i, std::size_t j) const {
        return entries_[i * cols_ + j];
    }

    std::span<const Complex> entries() const noexcept {
        return entries_;
    }

    ComplexMatrix adjoint() const;
    Complex trace() const;
    double frobenius_norm() const;

    ComplexMatrix &operator+=(const ComplexMatrix &other);
    ComplexMatrix &operator-=(const ComplexMatrix &other);
    ComplexMatrix &operator*=(Complex factor);

  private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Complex> entries_;
};

ComplexMatrix operator*(const ComplexMatrix &a, const ComplexMatrix &b);
ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix &b);
ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix &b);
ComplexMatrix operator*(Complex factor, ComplexMatrix a);

/// Largest entrywise modulus of a - b. Throws kDimMismatch on shape mismatch.
double max_abs_diff(const ComplexMatrix &a, const ComplexMatrix &b);

/// Kronecker product with index convention (i1 * rows(b) + i2, j1 * cols(b) + j2).
ComplexMatrix kron(const ComplexMatrix &a, const ComplexMatrix &b);

/// A square matrix equal to its conjugate transpose. The constructor accepts
/// drift up to `tol` and stores the exact average (M + M^dagger) / 2.
class HermitianMatrix {
  public:
    HermitianMatrix() = default;
    explicit HermitianMatrix(const ComplexMatrix &m, double tol = kHermiticityTol);

    /// Averages m with its conjugate transpose without a tolerance check, for
    /// results that are Hermitian by construction (V f(D) V^dagger, K rho K^dagger).
    static HermitianMatrix symmetrized(const ComplexMatrix &m);
    static HermitianMatrix identity(std::size_t n);
    static HermitianMatrix diagonal(std::span<const double> values);
    static HermitianMatrix zero(std::size_t n);

    std::size_t dim() const noexcept {
        return m_.rows();
    }
    const Complex &operator()(std::size_t i, std::size_t j) const {
        return m_(i, j);
    }
    const ComplexMatrix &matrix() const noexcept {
        return m_;
    }
    double trace() const;

    friend HermitianMatrix operator+(const HermitianMatrix &a, const HermitianMatrix &b);
    friend HermitianMatrix operator-(const HermitianMatrix &a, const HermitianMatrix &b);
    friend HermitianMatrix operator*(double factor, const HermitianMatrix &a);

  private:
    struct Trusted {};
    HermitianMatrix(ComplexMatrix m, Trusted) : m_(std::move(m)) {}

    ComplexMatrix m_;
};

/// H = V diag(eigenvalues) V^dagger with eigenvalues in descending order.
struct SpectralDecomposition {
    std::vector<double> eigenvalues;
    ComplexMatrix eigenvectors;  // columns are orthonormal eigenvectors
    double zero_eps = 0.0;       // |lambda| below this was stored as exactly 0

    std::size_t dim() const noexcept {
        return eigenvalues.size();
    }
    /// Number of eigenvalues that are strictly positive.
    std::size_t rank() const noexcept;
    ComplexMatrix reconstruct() const;
};

/// Cyclic Jacobi eigensolver for Hermitian matrices. Converges when the
/// off-diagonal Frobenius mass drops below tol * dim * max(1, ||H||_F);
/// throws kNoConvergence on a non-finite entry or after kMaxJacobiSweeps sweeps.
SpectralDecomposition jacobi_eig(const HermitianMatrix &h, double tol = kDefaultJacobiTol);

/// V f(Lambda) V^dagger for an arbitrary scalar map f.
HermitianMatrix spectral_function(const SpectralDecomposition &s, const std::function<double(double)> &f);

/// Fractional power with 0^r = 0 for r >= 0 (so the zeroth power is the
/// support projection). Throws kNegativeEigenvalue for eigenvalues below
/// -kNegativeEigenvalueTol and kSingularNegativePower for r < 0 on a kernel.
HermitianMatrix matrix_power(const SpectralDecomposition &s, double r);

/// ln on strictly positive eigenvalues, 0 on the kernel.
HermitianMatrix matrix_log_on_support(const SpectralDecomposition &s);

/// Orthogonal projection onto the span of eigenvectors with positive eigenvalue.
HermitianMatrix support_projection(const SpectralDecomposition &s);

/// Re tr(AB). Throws kDimMismatch, or kNonRealTrace if the imaginary part
/// exceeds kNonRealTraceTol * max(1, ||A||_F ||B||_F).
double trace_product(const HermitianMatrix &a, const HermitianMatrix &b);

HermitianMatrix tensor_product(const HermitianMatrix &a, const HermitianMatrix &b);

enum class Subsystem { kFirst = 1, kSecond = 2 };

/// Partial trace of M on C^{dim1} (x) C^{dim2}. keep == kFirst returns
/// tr_2 M (dim1 x dim1), keep == kSecond returns tr_1 M (dim2 x dim2).
/// Throws kDimFactorizationMismatch unless dim(M) == dim1 * dim2.
HermitianMatrix partial_trace(const HermitianMatrix &m, std::size_t dim1, std::size_t dim2, Subsystem keep);

}  // namespace unirel::linalg
