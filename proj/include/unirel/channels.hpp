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

#include <cstdint>
#include <span>
#include <vector>

#include "unirel/linalg.hpp"
#include "unirel/quantum.hpp"

namespace unirel::channels {

using linalg::ComplexMatrix;

inline constexpr double kCompletenessTol = 1e-8;
inline constexpr double kUnitarityTol = 1e-8;

/// Completely positive trace-preserving map rho -> sum_k K_k rho K_k^dagger.
class KrausChannel {
  public:
    std::size_t dim_in() const noexcept {
        return dim_in_;
    }
    std::size_t dim_out() const noexcept {
        return dim_out_;
    }
    std::span<const ComplexMatrix> kraus_ops() const noexcept {
        return ops_;
    }

  private:
    friend KrausChannel validate_channel(std::vector<ComplexMatrix> ops);
    KrausChannel(std::size_t dim_in, std::size_t dim_out, std::vector<ComplexMatrix> ops)
        : dim_in_(dim_in), dim_out_(dim_out), ops_(std::move(ops)) {}

    std::size_t dim_in_;
    std::size_t dim_out_;
    std::vector<ComplexMatrix> ops_;
};

/// Throws kShapeMismatch for an empty list or inconsistent shapes and
/// kCompletenessViolation unless sum_k K_k^dagger K_k = I within 1e-8.
KrausChannel validate_channel(std::vector<ComplexMatrix> ops);

/// Throws kDimMismatch when rho does not live on the input space.
quantum::DensityMatrix apply_channel(const KrausChannel &phi, const quantum::DensityMatrix &rho);

/// rho -> U rho U^dagger. Throws kNotUnitary unless U^dagger U = I within 1e-8.
KrausChannel unitary_channel(const ComplexMatrix &u);

/// Orthonormalizes the columns of a tall matrix (rows >= cols) by modified
/// Gram-Schmidt, so that the triangular factor has a real positive diagonal.
ComplexMatrix orthonormalize_columns(const ComplexMatrix &m);

/// Random channel: a (dim * kraus_count) x dim isometry obtained by
/// orthonormalizing a seeded complex Gaussian matrix, cut into kraus_count
/// square blocks. kraus_count == 1 gives a Haar-random unitary channel.
KrausChannel random_channel(std::size_t dim, std::size_t kraus_count, std::uint64_t seed);

/// Haar-random unitary via the same construction.
ComplexMatrix random_unitary(std::size_t dim, std::uint64_t seed);

}  // namespace unirel::channels
