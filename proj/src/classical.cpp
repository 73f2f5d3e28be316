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

#include "unirel/classical.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "unirel/errors.hpp"

namespace unirel::classical {

namespace {

void require_positive_order(double r) {
    if (!(r > 0.0)) {
        throw Error(ErrorCode::kDomainError, "order r must be > 0, got " + std::to_string(r));
    }
}

void require_relative_pair(const ProbDist &a, const ProbDist &b) {
    if (a.size() != b.size()) {
        throw Error(ErrorCode::kLengthMismatch,
                    "distributions of length " + std::to_string(a.size()) + " and " + std::to_string(b.size()));
    }
    if (!a.strictly_positive() || !b.strictly_positive()) {
        throw Error(ErrorCode::kDomainError, "relative entropies need strictly positive weights");
    }
}

}  // namespace

bool ProbDist::strictly_positive() const noexcept {
    return std::all_of(weights_.begin(), weights_.end(), [](double w) { return w > 0.0; });
}

ProbDist validate_dist(std::span<const double> raw, bool allow_zero, double tol) {
    if (raw.empty()) {
        throw Error(ErrorCode::kEmptyInput, "distribution has no entries");
    }
    for (std::size_t i = 0; i < raw.size(); ++i) {
        const double w = raw[i];
        if (std::isnan(w) || w < 0.0) {
            throw Error(ErrorCode::kNegativeWeight, "weight " + std::to_string(i) + " is " + std::to_string(w));
        }
        if (w == 0.0 && !allow_zero) {
            throw Error(ErrorCode::kZeroWeightForbidden, "weight " + std::to_string(i) + " is zero");
        }
    }
    const double sum = std::accumulate(raw.begin(), raw.end(), 0.0);
    if (!(std::abs(sum - 1.0) <= tol)) {
        throw Error(ErrorCode::kSumOutOfTolerance, "weights sum to " + std::to_string(sum));
    }
    std::vector<double> weights(raw.begin(), raw.end());
    for (double &w : weights) {
        w /= sum;
    }
    return ProbDist(std::move(weights));
}

double power_sum(const ProbDist &a, double r) {
    require_positive_order(r);
    double total = 0.0;
    for (double w : a.weights()) {
        if (w > 0.0) {
            total += std::pow(w, r);
        }
    }
    return total;
}

double unified_entropy(const ProbDist &a, const EntropyParams &params) {
    require_positive_order(params.r);
    switch (params.branch()) {
        case Branch::kR1: {
            double h = 0.0;
            for (double w : a.weights()) {
                if (w > 0.0) {
                    h -= w * std::log(w);
                }
            }
            return h;
        }
        case Branch::kS0:
            return std::log(power_sum(a, params.r)) / (1.0 - params.r);
        case Branch::kGen:
            return std::expm1(params.s * std::log(power_sum(a, params.r))) / ((1.0 - params.r) * params.s);
    }
    return 0.0;
}

double relative_power_sum(const ProbDist &a, const ProbDist &b, double r) {
    require_relative_pair(a, b);
    require_positive_order(r);
    double total = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        total += std::pow(a[i], r) * std::pow(b[i], 1.0 - r);
    }
    return total;
}

double kl_divergence(const ProbDist &a, const ProbDist &b) {
    require_relative_pair(a, b);
    double total = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        total += a[i] * std::log(a[i] / b[i]);
    }
    return total;
}

ExtendedReal unified_rel_entropy(const ProbDist &a, const ProbDist &b, const EntropyParams &params) {
    require_relative_pair(a, b);
    require_positive_order(params.r);
    switch (params.branch()) {
        case Branch::kR1:
            return kl_divergence(a, b);
        case Branch::kS0:
            return detail::renyi_divergence_from_overlap(relative_power_sum(a, b, params.r), params.r);
        case Branch::kGen:
            return detail::gen_divergence_from_overlap(relative_power_sum(a, b, params.r), params.r, params.s);
    }
    return 0.0;
}

double tsallis_rel_entropy(const ProbDist &a, const ProbDist &b, double r) {
    return -(relative_power_sum(a, b, r) - 1.0) / (1.0 - r);
}

double type_r_rel_entropy(const ProbDist &a, const ProbDist &b, double t) {
    require_positive_order(t);
    const double x = relative_power_sum(a, b, 1.0 / t);
    return -(std::pow(x, t) - 1.0) / (t - 1.0);
}

ProbDist product_dist(const ProbDist &a, const ProbDist &b) {
    std::vector<double> out;
    out.reserve(a.size() * b.size());
    for (double ai : a.weights()) {
        for (double bj : b.weights()) {
            out.push_back(ai * bj);
        }
    }
    const bool allow_zero = !(a.strictly_positive() && b.strictly_positive());
    return validate_dist(out, allow_zero);
}

ProbDist mixture(const ProbDist &a, const ProbDist &b, double lambda) {
    if (a.size() != b.size()) {
        throw Error(ErrorCode::kLengthMismatch, "mixture of distributions with different lengths");
    }
    if (!(lambda >= 0.0 && lambda <= 1.0)) {
        throw Error(ErrorCode::kDomainError, "mixture weight outside [0, 1]");
    }
    std::vector<double> out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        out[i] = lambda * a[i] + (1.0 - lambda) * b[i];
    }
    const bool allow_zero = std::any_of(out.begin(), out.end(), [](double w) { return w == 0.0; });
    return validate_dist(out, allow_zero);
}

}  // namespace unirel::classical
