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
#include <functional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "unirel/extended_real.hpp"

namespace unirel::properties {

struct ParamPoint {
    double r;
    double s;
};

/// Predicate on (r, s) encoding a theorem's hypothesis.
using RegionFilter = std::function<bool(double r, double s)>;

namespace regions {

bool any(double r, double s);
/// r = 1, or 0 <= r < 1 with s <= 1 (joint convexity, data processing).
bool data_processing(double r, double s);
/// r = 1, or 0 <= r < 1 with s >= 0 (the H-sandwich, r-monotonicity for s >= 0).
bool sandwich(double r, double s);
/// r = 1, or r > 1 with s >= 1, or 0 < r < 1 with s <= 1.
bool classical_convex(double r, double s);

}  // namespace regions

struct ParamGrid {
    std::vector<double> r_values;
    std::vector<double> s_values;
    /// Adds s = 1/r at every r in [0.05, 1).
    bool include_inverse_r = true;
    RegionFilter region;  // empty accepts everything

    bool admits(double r, double s) const;
    /// Region-filtered s values for one r, ascending and deduplicated.
    std::vector<double> s_values_for(double r) const;
    /// Every admitted (r, s) pair, r-major.
    std::vector<ParamPoint> points() const;
};

/// {0, 0.05, ..., 0.95, 1}
std::vector<double> quantum_r_grid();
/// {0.05, ..., 0.95, 1, 1.25, 1.5, 2, 3}
std::vector<double> classical_r_grid();
/// {-2, -1, -0.5, -1e-6, 0, 1e-6, 0.5, 1}
std::vector<double> default_s_grid();

struct Failure {
    std::uint64_t seed = 0;
    std::string params;
    ExtendedReal lhs;
    ExtendedReal rhs;
    double violation = 0.0;
};

inline constexpr std::size_t kMaxRecordedFailures = 64;

struct SuiteReport {
    std::string suite;
    std::size_t trials = 0;
    double tolerance = 0.0;
    /// Largest signed violation seen: lhs - rhs for "<=" claims, the residue
    /// for "=" claims. -inf when every comparison had an infinite right side.
    double max_violation = 0.0;
    std::size_t evaluations = 0;
    /// Instances excluded from assertion (e.g. vanishing overlap).
    std::size_t skipped = 0;
    std::size_t failure_count = 0;
    /// The first kMaxRecordedFailures failures, in trial order.
    std::vector<Failure> failures;

    bool passed() const noexcept {
        return failure_count == 0;
    }
};

struct SuiteConfig {
    std::string name;
    std::size_t trials = 0;
    std::vector<std::size_t> dims;
    std::vector<std::pair<std::size_t, std::size_t>> bipartite_dims;
    ParamGrid grid;
    double tol = 0.0;
    std::uint64_t seed = 0;
};

/// Names accepted by default_config / run_suite, in execution order for "all".
const std::vector<std::string> &suite_names();

/// The default trials, dimensions, grid and tolerance for a suite.
/// Throws kUnknownSuite.
SuiteConfig default_config(std::string_view name);

/// Runs `trials` seeded instances; trial t draws from mix_seed(seed, t), so
/// identical configs give identical reports. Throws kUnknownSuite.
SuiteReport run_suite(const SuiteConfig &config);

}  // namespace unirel::properties
