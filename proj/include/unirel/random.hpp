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
#include <random>

#include "unirel/classical.hpp"
#include "unirel/linalg.hpp"
#include "unirel/quantum.hpp"

namespace unirel::random {

/// SplitMix64 finalizer; used to derive independent per-trial seeds.
std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream);

/// Seeded source of the draws used by the generators. Deterministic for a
/// given seed on a given standard library.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    double uniform(double lo = 0.0, double hi = 1.0);
    double normal();
    double exponential();
    /// Uniform integer in [lo, hi].
    std::size_t integer(std::size_t lo, std::size_t hi);
    std::uint64_t next_seed();

  private:
    std::mt19937_64 engine_;
};

/// rows x cols matrix of independent standard complex Gaussians.
linalg::ComplexMatrix gaussian_matrix(std::size_t rows, std::size_t cols, Rng &rng);

/// Flat Dirichlet draw: n unit exponentials normalized to sum 1, clamped to
/// at least 1e-12 and renormalized.
classical::ProbDist rand_dist(std::size_t n, std::uint64_t seed);

/// G G^dagger / tr(G G^dagger) for a dim x rank complex Gaussian G.
quantum::DensityMatrix rand_state(std::size_t dim, std::size_t rank, std::uint64_t seed);

/// Random Hermitian matrix (G + G^dagger) / 2.
linalg::HermitianMatrix rand_hermitian(std::size_t dim, std::uint64_t seed);

/// Random positive semidefinite matrix G G^dagger of the given rank (unnormalized).
linalg::HermitianMatrix rand_psd(std::size_t dim, std::size_t rank, std::uint64_t seed);

}  // namespace unirel::random
