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

// Acceptance run: one PASS/FAIL line per criterion, exit status 0 iff all pass.

#include <boost/rational.hpp>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "unirel/classical.hpp"
#include "unirel/properties.hpp"
#include "unirel/quantum.hpp"
#include "unirel/random.hpp"

namespace {

using namespace unirel;
using properties::SuiteConfig;
using properties::SuiteReport;
using Rational = boost::rational<long long>;

constexpr std::uint64_t kSeed = 20261016;

struct Check {
    std::string label;
    bool passed;
    std::string detail;
};

std::string describe(const SuiteReport &r) {
    char buf[256];
    std::snprintf(buf, sizeof buf, "%s: trials=%zu evaluations=%zu max_violation=%.3g tol=%.0e failures=%zu skipped=%zu",
                  r.suite.c_str(), r.trials, r.evaluations, r.max_violation, r.tolerance, r.failure_count, r.skipped);
    return buf;
}

Check suite(const std::string &name, std::size_t trials, double tol,
            const std::function<void(SuiteConfig &)> &adjust = nullptr) {
    SuiteConfig c = properties::default_config(name);
    c.trials = trials;
    c.tol = tol;
    c.seed = kSeed;
    if (adjust) {
        adjust(c);
    }
    const SuiteReport r = properties::run_suite(c);
    return {name, r.passed(), describe(r)};
}

Check exact_values() {
    double worst_zero = 0.0;
    for (std::uint64_t t = 0; t < 200; ++t) {
        const std::uint64_t seed = random::mix_seed(kSeed, t);
        const std::size_t n = 2 + t % 7;
        const classical::ProbDist a = random::rand_dist(n, seed);
        const quantum::DensityMatrix rho = random::rand_state(2 + t % 5, 1 + t % (2 + t % 5), seed);
        for (double r : properties::quantum_r_grid()) {
            for (double s : properties::default_s_grid()) {
                if (r > 0.0) {
                    worst_zero = std::max(worst_zero, std::abs(classical::unified_rel_entropy(a, a, {r, s}).value()));
                    worst_zero = std::max(
                        worst_zero, std::abs(quantum::quantum_unified_rel_entropy(rho, rho, {r, s}).value.value()));
                }
            }
        }
    }

    const classical::ProbDist a = classical::validate_dist(std::vector<double>{0.5, 0.5});
    const classical::ProbDist b = classical::validate_dist(std::vector<double>{0.25, 0.75});
    const Rational overlap = Rational(1, 4) / Rational(1, 4) + Rational(1, 4) / Rational(3, 4);
    const Rational tsallis = -(overlap - 1) / Rational(1 - 2);
    const double kl = 0.5 * std::log(boost::rational_cast<double>(Rational(4, 3)));
    const Rational extended = -(Rational(1) / Rational(1, 4) - 1) / Rational(1 - 2);

    const quantum::DensityMatrix pure0 = quantum::validate_state(linalg::HermitianMatrix::diagonal(std::vector{1.0, 0.0}));
    const quantum::DensityMatrix sigma = quantum::validate_state(linalg::HermitianMatrix::diagonal(std::vector{0.25, 0.75}));

    const double e1 = std::abs(classical::relative_power_sum(a, b, 2.0) - boost::rational_cast<double>(overlap));
    const double e2 = std::abs(classical::unified_rel_entropy(a, b, {2.0, 1.0}).value() -
                               boost::rational_cast<double>(tsallis));
    const double e3 = std::abs(classical::unified_rel_entropy(a, b, {1.0, 0.0}).value() - kl);
    const double e4 = std::abs(quantum::quantum_unified_rel_entropy(pure0, sigma, {2.0, 1.0}).value.value() -
                               boost::rational_cast<double>(extended));
    const double worst_exact = std::max({e1, e2, e3, e4});

    char buf[256];
    std::snprintf(buf, sizeof buf, "max |E(A|A)|,|E(rho|rho)| = %.3g (tol 1e-10); max rational residue = %.3g (tol 1e-12)",
                  worst_zero, worst_exact);
    return {"exact values", worst_zero <= 1e-10 && worst_exact <= 1e-12, buf};
}

void print(int index, const std::vector<Check> &checks, bool &all) {
    bool ok = true;
    for (const Check &c : checks) {
        ok = ok && c.passed;
    }
    all = all && ok;
    std::printf("criterion %2d: %s\n", index, ok ? "PASS" : "FAIL");
    for (const Check &c : checks) {
        std::printf("    [%s] %s\n", c.passed ? "pass" : "FAIL", c.detail.c_str());
    }
}

bool nonnegative_s(double, double s) {
    return s >= 0.0;
}

bool negative_s(double, double s) {
    return s < 0.0;
}

}  // namespace

int main() {
    bool all = true;

    print(1, {suite("commuting_reduction", 500, 1e-10)}, all);
    print(2, {exact_values()}, all);
    print(3, {suite("thm21_sandwich", 1000, 1e-9)}, all);
    print(4, {suite("q_nonneg", 1000, 1e-10)}, all);
    print(5, {suite("q_joint_convex", 500, 1e-8)}, all);
    print(6, {suite("q_unitary", 500, 1e-9), suite("q_additivity", 500, 1e-9)}, all);
    print(7, {suite("dpi_channel", 500, 1e-8), suite("dpi_partial_trace", 500, 1e-8)}, all);
    print(8, {suite("thm34_sandwich", 500, 1e-8)}, all);

    Check r_up = suite("thm35_r_monotone", 300, 1e-8, [](SuiteConfig &c) { c.grid.region = nonnegative_s; });
    r_up.detail = "s >= 0, increasing in r: " + r_up.detail;
    Check r_down = suite("thm35_r_monotone", 300, 1e-8, [](SuiteConfig &c) { c.grid.region = negative_s; });
    r_down.detail = "s < 0, decreasing in r: " + r_down.detail;
    print(9,
          {r_up, r_down, suite("thm35_s_monotone", 300, 1e-8), suite("thm35_s_convex", 300, 1e-8),
           suite("thm35_r0", 300, 1e-10), suite("thm35_derivatives", 300, 1e-4)},
          all);

    print(10, {suite("eig_reconstruction", 1000, 1e-9), suite("lemma31_range", 300, 1e-6)}, all);
    print(11, {suite("continuity_s", 100, 1e-5), suite("continuity_r", 100, 1e-4)}, all);

    std::printf("acceptance: %s\n", all ? "PASS" : "FAIL");
    return all ? 0 : 1;
}
