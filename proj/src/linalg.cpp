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

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

#include "unirel/errors.hpp"

namespace unirel::linalg {

namespace {

void require_same_shape(const ComplexMatrix &a, const ComplexMatrix &b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        throw Error(ErrorCode::kDimMismatch, std::to_string(a.rows()) + "x" + std::to_string(a.cols()) + " vs " +
                                                 std::to_string(b.rows()) + "x" + std::to_string(b.cols()));
    }
}

double off_diagonal_norm(const ComplexMatrix &a) {
    double sum = 0.0;
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) {
            if (i != j) {
                sum += std::norm(a(i, j));
            }
        }
    }
    return std::sqrt(sum);
}

// Annihilates a(p, q) with the unitary U = diag(1, conj(phase)) * [[c, s], [-s, c]]
// acting on coordinates p, q, where phase = a(p, q) / |a(p, q)|. Updates
// a <- U^dagger a U and v <- v U.
void jacobi_rotate(ComplexMatrix &a, ComplexMatrix &v, std::size_t p, std::size_t q) {
    const Complex g = a(p, q);
    const double abs_g = std::abs(g);
    if (abs_g == 0.0) {
        return;
    }
    const Complex phase = g / abs_g;
    const Complex phase_conj = std::conj(phase);
    const double app = a(p, p).real();
    const double aqq = a(q, q).real();
    const double tau = (aqq - app) / (2.0 * abs_g);
    const double t = (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::hypot(1.0, tau));
    const double c = 1.0 / std::hypot(1.0, t);
    const double s = t * c;

    const std::size_t n = a.rows();
    for (std::size_t k = 0; k < n; ++k) {
        const Complex akp = a(k, p);
        const Complex akq = a(k, q);
        a(k, p) = c * akp - s * phase_conj * akq;
        a(k, q) = s * akp + c * phase_conj * akq;
    }
    for (std::size_t k = 0; k < n; ++k) {
        const Complex apk = a(p, k);
        const Complex aqk = a(q, k);
        a(p, k) = c * apk - s * phase * aqk;
        a(q, k) = s * apk + c * phase * aqk;
    }
    for (std::size_t k = 0; k < n; ++k) {
        const Complex vkp = v(k, p);
        const Complex vkq = v(k, q);
        v(k, p) = c * vkp - s * phase_conj * vkq;
        v(k, q) = s * vkp + c * phase_conj * vkq;
    }
    a(p, q) = 0.0;
    a(q, p) = 0.0;
    a(p, p) = a(p, p).real();
    a(q, q) = a(q, q).real();
}

}  // namespace

// ---------------------------------------------------------------------------
// ComplexMatrix

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols, Complex(0.0, 0.0)) {
}

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
    if (entries_.size() != rows_ * cols_) {
        throw Error(ErrorCode::kShapeMismatch, "expected " + std::to_string(rows_ * cols_) + " entries, got " +
                                                   std::to_string(entries_.size()));
    }
}

ComplexMatrix ComplexMatrix::identity(std::size_t n) {
    ComplexMatrix out(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        out(i, i) = 1.0;
    }
    return out;
}

ComplexMatrix ComplexMatrix::adjoint() const {
    ComplexMatrix out(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j) {
            out(j, i) = std::conj((*this)(i, j));
        }
    }
    return out;
}

Complex ComplexMatrix::trace() const {
    if (!is_square()) {
        throw Error(ErrorCode::kShapeMismatch, "trace of a non-square matrix");
    }
    Complex t = 0.0;
    for (std::size_t i = 0; i < rows_; ++i) {
        t += (*this)(i, i);
    }
    return t;
}

double ComplexMatrix::frobenius_norm() const {
    double sum = 0.0;
    for (const Complex &z : entries_) {
        sum += std::norm(z);
    }
    return std::sqrt(sum);
}

ComplexMatrix &ComplexMatrix::operator+=(const ComplexMatrix &other) {
    require_same_shape(*this, other);
    for (std::size_t k = 0; k < entries_.size(); ++k) {
        entries_[k] += other.entries_[k];
    }
    return *this;
}

ComplexMatrix &ComplexMatrix::operator-=(const ComplexMatrix &other) {
    require_same_shape(*this, other);
    for (std::size_t k = 0; k < entries_.size(); ++k) {
        entries_[k] -= other.entries_[k];
    }
    return *this;
}

ComplexMatrix &ComplexMatrix::operator*=(Complex factor) {
    for (Complex &z : entries_) {
        z *= factor;
    }
    return *this;
}

ComplexMatrix operator*(const ComplexMatrix &a, const ComplexMatrix &b) {
    if (a.cols() != b.rows()) {
        throw Error(ErrorCode::kDimMismatch, "cannot multiply " + std::to_string(a.rows()) + "x" +
                                                 std::to_string(a.cols()) + " by " + std::to_string(b.rows()) + "x" +
                                                 std::to_string(b.cols()));
    }
    ComplexMatrix out(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const Complex aik = a(i, k);
            if (aik == Complex(0.0, 0.0)) {
                continue;
            }
            for (std::size_t j = 0; j < b.cols(); ++j) {
                out(i, j) += aik * b(k, j);
            }
        }
    }
    return out;
}

ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix &b) {
    a += b;
    return a;
}

ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix &b) {
    a -= b;
    return a;
}

ComplexMatrix operator*(Complex factor, ComplexMatrix a) {
    a *= factor;
    return a;
}

double max_abs_diff(const ComplexMatrix &a, const ComplexMatrix &b) {
    require_same_shape(a, b);
    double worst = 0.0;
    for (std::size_t k = 0; k < a.entries().size(); ++k) {
        worst = std::max(worst, std::abs(a.entries()[k] - b.entries()[k]));
    }
    return worst;
}

ComplexMatrix kron(const ComplexMatrix &a, const ComplexMatrix &b) {
    ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t i1 = 0; i1 < a.rows(); ++i1) {
        for (std::size_t j1 = 0; j1 < a.cols(); ++j1) {
            const Complex aij = a(i1, j1);
            for (std::size_t i2 = 0; i2 < b.rows(); ++i2) {
                for (std::size_t j2 = 0; j2 < b.cols(); ++j2) {
                    out(i1 * b.rows() + i2, j1 * b.cols() + j2) = aij * b(i2, j2);
                }
            }
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// HermitianMatrix

HermitianMatrix::HermitianMatrix(const ComplexMatrix &m, double tol) : m_(m.rows(), m.cols()) {
    if (!m.is_square() || m.rows() == 0) {
        throw Error(ErrorCode::kShapeMismatch, "Hermitian matrix must be square and nonempty");
    }
    const std::size_t n = m.rows();
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i; j < n; ++j) {
            const Complex upper = m(i, j);
            const Complex lower_conj = std::conj(m(j, i));
            if (!(std::abs(upper - lower_conj) <= tol)) {
                throw Error(ErrorCode::kNotHermitian, "entry (" + std::to_string(i) + "," + std::to_string(j) +
                                                          ") differs from the conjugate of its mirror");
            }
            const Complex avg = 0.5 * (upper + lower_conj);
            m_(i, j) = avg;
            m_(j, i) = std::conj(avg);
        }
        m_(i, i) = m_(i, i).real();
    }
}

HermitianMatrix HermitianMatrix::symmetrized(const ComplexMatrix &m) {
    return HermitianMatrix(m, std::numeric_limits<double>::infinity());
}

HermitianMatrix HermitianMatrix::identity(std::size_t n) {
    return HermitianMatrix(ComplexMatrix::identity(n), Trusted{});
}

HermitianMatrix HermitianMatrix::diagonal(std::span<const double> values) {
    ComplexMatrix m(values.size(), values.size());
    for (std::size_t i = 0; i < values.size(); ++i) {
        m(i, i) = values[i];
    }
    return HermitianMatrix(std::move(m), Trusted{});
}

HermitianMatrix HermitianMatrix::zero(std::size_t n) {
    return HermitianMatrix(ComplexMatrix(n, n), Trusted{});
}

double HermitianMatrix::trace() const {
    return m_.trace().real();
}

HermitianMatrix operator+(const HermitianMatrix &a, const HermitianMatrix &b) {
    return HermitianMatrix(a.m_ + b.m_, HermitianMatrix::Trusted{});
}

HermitianMatrix operator-(const HermitianMatrix &a, const HermitianMatrix &b) {
    return HermitianMatrix(a.m_ - b.m_, HermitianMatrix::Trusted{});
}

HermitianMatrix operator*(double factor, const HermitianMatrix &a) {
    return HermitianMatrix(Complex(factor, 0.0) * a.m_, HermitianMatrix::Trusted{});
}

// ---------------------------------------------------------------------------
// Spectral calculus

std::size_t SpectralDecomposition::rank() const noexcept {
    return static_cast<std::size_t>(std::count_if(eigenvalues.begin(), eigenvalues.end(), [](double l) { return l > 0.0; }));
}

ComplexMatrix SpectralDecomposition::reconstruct() const {
    const std::size_t n = dim();
    ComplexMatrix out(n, n);
    for (std::size_t k = 0; k < n; ++k) {
        const double lambda = eigenvalues[k];
        if (lambda == 0.0) {
            continue;
        }
        for (std::size_t i = 0; i < n; ++i) {
            const Complex vik = lambda * eigenvectors(i, k);
            for (std::size_t j = 0; j < n; ++j) {
                out(i, j) += vik * std::conj(eigenvectors(j, k));
            }
        }
    }
    return out;
}

SpectralDecomposition jacobi_eig(const HermitianMatrix &h, double tol) {
    if (!(tol > 0.0)) {
        throw Error(ErrorCode::kDomainError, "Jacobi tolerance must be positive");
    }
    const std::size_t n = h.dim();
    ComplexMatrix a = h.matrix();
    if (!std::isfinite(a.frobenius_norm())) {
        throw Error(ErrorCode::kNoConvergence, "matrix has a non-finite entry");
    }
    ComplexMatrix v = ComplexMatrix::identity(n);
    const double threshold = tol * static_cast<double>(n) * std::max(1.0, a.frobenius_norm());

    // One extra sweep after the threshold is met: Jacobi converges
    // quadratically, so it pushes kernel eigenvalues down to round-off.
    bool polished = false;
    for (int sweep = 0;; ++sweep) {
        const double off = off_diagonal_norm(a);
        const bool below = off < threshold;
        if (off == 0.0 || (below && polished)) {
            break;
        }
        polished = below;
        if (sweep >= kMaxJacobiSweeps) {
            throw Error(ErrorCode::kNoConvergence,
                        "off-diagonal mass " + std::to_string(off) + " after " + std::to_string(sweep) + " sweeps");
        }
        for (std::size_t p = 0; p + 1 < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                jacobi_rotate(a, v, p, q);
            }
        }
    }

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&a](std::size_t i, std::size_t j) { return a(i, i).real() > a(j, j).real(); });

    SpectralDecomposition out;
    out.eigenvalues.resize(n);
    out.eigenvectors = ComplexMatrix(n, n);
    double spectral_radius = 0.0;
    for (std::size_t k = 0; k < n; ++k) {
        out.eigenvalues[k] = a(order[k], order[k]).real();
        spectral_radius = std::max(spectral_radius, std::abs(out.eigenvalues[k]));
        for (std::size_t i = 0; i < n; ++i) {
            out.eigenvectors(i, k) = v(i, order[k]);
        }
    }
    out.zero_eps = 1e-12 * static_cast<double>(n) * spectral_radius;
    for (double &lambda : out.eigenvalues) {
        if (std::abs(lambda) < out.zero_eps) {
            lambda = 0.0;
        }
    }
    return out;
}

HermitianMatrix spectral_function(const SpectralDecomposition &s, const std::function<double(double)> &f) {
    SpectralDecomposition mapped{{}, s.eigenvectors, s.zero_eps};
    mapped.eigenvalues.reserve(s.dim());
    for (double lambda : s.eigenvalues) {
        mapped.eigenvalues.push_back(f(lambda));
    }
    return HermitianMatrix::symmetrized(mapped.reconstruct());
}

HermitianMatrix matrix_power(const SpectralDecomposition &s, double r) {
    return spectral_function(s, [r](double lambda) {
        if (lambda < -kNegativeEigenvalueTol) {
            throw Error(ErrorCode::kNegativeEigenvalue, "eigenvalue " + std::to_string(lambda));
        }
        if (lambda <= 0.0) {
            if (r < 0.0) {
                throw Error(ErrorCode::kSingularNegativePower, "negative power of a singular matrix");
            }
            return 0.0;
        }
        return std::pow(lambda, r);
    });
}

HermitianMatrix matrix_log_on_support(const SpectralDecomposition &s) {
    return spectral_function(s, [](double lambda) { return lambda > 0.0 ? std::log(lambda) : 0.0; });
}

HermitianMatrix support_projection(const SpectralDecomposition &s) {
    return spectral_function(s, [](double lambda) { return lambda > 0.0 ? 1.0 : 0.0; });
}

double trace_product(const HermitianMatrix &a, const HermitianMatrix &b) {
    if (a.dim() != b.dim()) {
        throw Error(ErrorCode::kDimMismatch,
                    "trace of product of " + std::to_string(a.dim()) + " and " + std::to_string(b.dim()));
    }
    Complex t = 0.0;
    for (std::size_t i = 0; i < a.dim(); ++i) {
        for (std::size_t j = 0; j < a.dim(); ++j) {
            t += a(i, j) * b(j, i);
        }
    }
    // |tr(AB)| <= ||A||_F ||B||_F bounds the roundoff in the imaginary part.
    const double scale = std::max(1.0, a.matrix().frobenius_norm() * b.matrix().frobenius_norm());
    if (std::abs(t.imag()) > kNonRealTraceTol * scale) {
        throw Error(ErrorCode::kNonRealTrace, "imaginary part " + std::to_string(t.imag()));
    }
    return t.real();
}

HermitianMatrix tensor_product(const HermitianMatrix &a, const HermitianMatrix &b) {
    return HermitianMatrix::symmetrized(kron(a.matrix(), b.matrix()));
}

HermitianMatrix partial_trace(const HermitianMatrix &m, std::size_t dim1, std::size_t dim2, Subsystem keep) {
    if (dim1 == 0 || dim2 == 0 || m.dim() != dim1 * dim2) {
        throw Error(ErrorCode::kDimFactorizationMismatch, "dimension " + std::to_string(m.dim()) + " is not " +
                                                              std::to_string(dim1) + " x " + std::to_string(dim2));
    }
    if (keep == Subsystem::kFirst) {
        ComplexMatrix out(dim1, dim1);
        for (std::size_t i = 0; i < dim1; ++i) {
            for (std::size_t j = 0; j < dim1; ++j) {
                for (std::size_t k = 0; k < dim2; ++k) {
                    out(i, j) += m(i * dim2 + k, j * dim2 + k);
                }
            }
        }
        return HermitianMatrix::symmetrized(out);
    }
    ComplexMatrix out(dim2, dim2);
    for (std::size_t k = 0; k < dim2; ++k) {
        for (std::size_t l = 0; l < dim2; ++l) {
            for (std::size_t i = 0; i < dim1; ++i) {
                out(k, l) += m(i * dim2 + k, i * dim2 + l);
            }
        }
    }
    return HermitianMatrix::symmetrized(out);
}

}  // namespace unirel::linalg
