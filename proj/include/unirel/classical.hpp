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

#include <span>
#include <vector>

#include "unirel/entropy_params.hpp"
#include "unirel/extended_real.hpp"

namespace unirel::classical {

inline constexpr double kDefaultSumTol = 1e-8;

/// A discrete probability distribution. Weights are strictly positive unless
/// the distribution was built with allow_zero, in which case it is only
/// accepted by the non-relative entropy.
class ProbDist {
  public:
    std::span<const double> weights() const noexcept {
        return weights_;
    }
    std::size_t size() const noexcept {
        return weights_.size();
    }
    double operator[](std::size_t i) const {
        return weights_[i];
    }
    bool strictly_positive() const noexcept;

  private:
    friend ProbDist validate_dist(std::span<const double> raw, bool allow_zero, double tol);
    explicit ProbDist(std::vector<double> weights) : weights_(std::move(weights)) {}

    std::vector<double> weights_;
};

/// Checks signs and the unit sum, then divides by the exact sum.
/// Throws kEmptyInput, kNegativeWeight, kZeroWeightForbidden, kSumOutOfTolerance.
ProbDist validate_dist(std::span<const double> raw, bool allow_zero = false, double tol = kDefaultSumTol);

/// p(r) = sum_i a_i^r; zero weights contribute 0. Throws kDomainError for r <= 0.
double power_sum(const ProbDist &a, double r);

/// E_r^s(A): Shannon entropy for r = 1, Renyi for s = 0, otherwise
/// [(1-r)s]^{-1} (p(r)^s - 1).
double unified_entropy(const ProbDist &a, const EntropyParams &params);

/// sum_i a_i^r b_i^{1-r}. Both arguments strictly positive and of equal length.
double relative_power_sum(const ProbDist &a, const ProbDist &b, double r);

/// Kullback-Leibler divergence sum_i a_i ln(a_i / b_i).
double kl_divergence(const ProbDist &a, const ProbDist &b);

/// E_r^s(A||B). Finite for every admissible input; the ExtendedReal return
/// keeps the signature aligned with the quantum divergence.
ExtendedReal unified_rel_entropy(const ProbDist &a, const ProbDist &b, const EntropyParams &params);

/// Explicit Tsallis relative entropy -(1-r)^{-1} (sum a^r b^{1-r} - 1).
double tsallis_rel_entropy(const ProbDist &a, const ProbDist &b, double r);

/// Explicit relative entropy of type t: -(t-1)^{-1} [(sum a^{1/t} b^{1-1/t})^t - 1].
double type_r_rel_entropy(const ProbDist &a, const ProbDist &b, double t);

/// A*B = (a_1 b_1, ..., a_1 b_m, a_2 b_1, ..., a_n b_m).
ProbDist product_dist(const ProbDist &a, const ProbDist &b);

/// lambda A + (1 - lambda) B, for lambda in [0, 1].
ProbDist mixture(const ProbDist &a, const ProbDist &b, double lambda);

}  // namespace unirel::classical
