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

#include "unirel/random.hpp"

#include <algorithm>
#include <string>
#include <vector>

#include "unirel/errors.hpp"

namespace unirel::random {

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream) {
    std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (stream + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

double Rng::uniform(double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(engine_);
}

double Rng::normal() {
    return std::normal_distribution<double>(0.0, 1.0)(engine_);
}

double Rng::exponential() {
    return std::exponential_distribution<double>(1.0)(engine_);
}

std::size_t Rng::integer(std::size_t lo, std::size_t hi) {
    return std::uniform_int_distribution<std::size_t>(lo, hi)(engine_);
}

std::uint64_t Rng::next_seed() {
    return engine_();
}

linalg::ComplexMatrix gaussian_matrix(std::size_t rows, std::size_t cols, Rng &rng) {
    linalg::ComplexMatrix g(rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
        for (std::size_t j = 0; j < cols; ++j) {
            const double re = rng.normal();
            const double im = rng.normal();
            g(i, j) = linalg::Complex(re, im);
        }
    }
    return g;
}

classical::ProbDist rand_dist(std::size_t n, std::uint64_t seed) {
    if (n == 0) {
        throw Error(ErrorCode::kEmptyInput, "rand_dist needs n >= 1");
    }
    Rng rng(seed);
    std::vector<double> w(n);
    double total = 0.0;
    for (double &x : w) {
        x = rng.exponential();
        total += x;
    }
    double clamped_total = 0.0;
    for (double &x : w) {
        x = std::max(x / total, 1e-12);
        clamped_total += x;
    }
    for (double &x : w) {
        x /= clamped_total;
    }
    return classical::validate_dist(w);
}

linalg::HermitianMatrix rand_psd(std::size_t dim, std::size_t rank, std::uint64_t seed) {
    if (dim == 0 || rank == 0 || rank > dim) {
        throw Error(ErrorCode::kDomainError,
                    "need 1 <= rank <= dim, got rank " + std::to_string(rank) + " dim " + std::to_string(dim));
    }
    Rng rng(seed);
    const linalg::ComplexMatrix g = gaussian_matrix(dim, rank, rng);
    return linalg::HermitianMatrix::symmetrized(g * g.adjoint());
}

quantum::DensityMatrix rand_state(std::size_t dim, std::size_t rank, std::uint64_t seed) {
    const linalg::HermitianMatrix gg = rand_psd(dim, rank, seed);
    return quantum::validate_state((1.0 / gg.trace()) * gg);
}

linalg::HermitianMatrix rand_hermitian(std::size_t dim, std::uint64_t seed) {
    Rng rng(seed);
    const linalg::ComplexMatrix g = gaussian_matrix(dim, dim, rng);
    return linalg::HermitianMatrix::symmetrized(g);
}

}  // namespace unirel::random
