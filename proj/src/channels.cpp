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

#include "unirel/channels.hpp"

#include <cmath>
#include <string>

#include "unirel/errors.hpp"
#include "unirel/random.hpp"

namespace unirel::channels {

KrausChannel validate_channel(std::vector<ComplexMatrix> ops) {
    if (ops.empty()) {
        throw Error(ErrorCode::kShapeMismatch, "a channel needs at least one Kraus operator");
    }
    const std::size_t dim_out = ops.front().rows();
    const std::size_t dim_in = ops.front().cols();
    if (dim_in == 0 || dim_out == 0) {
        throw Error(ErrorCode::kShapeMismatch, "empty Kraus operator");
    }
    ComplexMatrix completeness(dim_in, dim_in);
    for (std::size_t k = 0; k < ops.size(); ++k) {
        if (ops[k].rows() != dim_out || ops[k].cols() != dim_in) {
            throw Error(ErrorCode::kShapeMismatch, "Kraus operator " + std::to_string(k) + " has shape " +
                                                       std::to_string(ops[k].rows()) + "x" +
                                                       std::to_string(ops[k].cols()));
        }
        completeness += ops[k].adjoint() * ops[k];
    }
    const double residue = linalg::max_abs_diff(completeness, ComplexMatrix::identity(dim_in));
    if (residue > kCompletenessTol) {
        throw Error(ErrorCode::kCompletenessViolation, "sum K^dagger K deviates from I by " + std::to_string(residue));
    }
    return KrausChannel(dim_in, dim_out, std::move(ops));
}

quantum::DensityMatrix apply_channel(const KrausChannel &phi, const quantum::DensityMatrix &rho) {
    if (rho.dim() != phi.dim_in()) {
        throw Error(ErrorCode::kDimMismatch, "channel input dimension " + std::to_string(phi.dim_in()) +
                                                 ", state dimension " + std::to_string(rho.dim()));
    }
    ComplexMatrix out(phi.dim_out(), phi.dim_out());
    for (const ComplexMatrix &k : phi.kraus_ops()) {
        out += k * rho.matrix().matrix() * k.adjoint();
    }
    return quantum::validate_state(linalg::HermitianMatrix::symmetrized(out));
}

KrausChannel unitary_channel(const ComplexMatrix &u) {
    if (!u.is_square()) {
        throw Error(ErrorCode::kNotUnitary, "unitary must be square");
    }
    const double residue = linalg::max_abs_diff(u.adjoint() * u, ComplexMatrix::identity(u.rows()));
    if (residue > kUnitarityTol) {
        throw Error(ErrorCode::kNotUnitary, "U^dagger U deviates from I by " + std::to_string(residue));
    }
    return validate_channel({u});
}

ComplexMatrix orthonormalize_columns(const ComplexMatrix &m) {
    if (m.rows() < m.cols()) {
        throw Error(ErrorCode::kShapeMismatch, "need at least as many rows as columns");
    }
    ComplexMatrix q = m;
    const std::size_t rows = q.rows();
    for (std::size_t j = 0; j < q.cols(); ++j) {
        // Two passes of projection keep the columns orthogonal to working precision.
        for (int pass = 0; pass < 2; ++pass) {
            for (std::size_t k = 0; k < j; ++k) {
                linalg::Complex dot = 0.0;
                for (std::size_t i = 0; i < rows; ++i) {
                    dot += std::conj(q(i, k)) * q(i, j);
                }
                for (std::size_t i = 0; i < rows; ++i) {
                    q(i, j) -= dot * q(i, k);
                }
            }
        }
        double norm = 0.0;
        for (std::size_t i = 0; i < rows; ++i) {
            norm += std::norm(q(i, j));
        }
        norm = std::sqrt(norm);
        if (norm == 0.0) {
            throw Error(ErrorCode::kDomainError, "columns are linearly dependent");
        }
        for (std::size_t i = 0; i < rows; ++i) {
            q(i, j) /= norm;
        }
    }
    return q;
}

KrausChannel random_channel(std::size_t dim, std::size_t kraus_count, std::uint64_t seed) {
    if (dim == 0 || kraus_count == 0) {
        throw Error(ErrorCode::kDomainError, "random_channel needs dim >= 1 and kraus_count >= 1");
    }
    random::Rng rng(seed);
    const ComplexMatrix isometry = orthonormalize_columns(random::gaussian_matrix(dim * kraus_count, dim, rng));
    std::vector<ComplexMatrix> ops;
    ops.reserve(kraus_count);
    for (std::size_t k = 0; k < kraus_count; ++k) {
        ComplexMatrix block(dim, dim);
        for (std::size_t i = 0; i < dim; ++i) {
            for (std::size_t j = 0; j < dim; ++j) {
                block(i, j) = isometry(k * dim + i, j);
            }
        }
        ops.push_back(std::move(block));
    }
    return validate_channel(std::move(ops));
}

ComplexMatrix random_unitary(std::size_t dim, std::uint64_t seed) {
    return random_channel(dim, 1, seed).kraus_ops().front();
}

}  // namespace unirel::channels
