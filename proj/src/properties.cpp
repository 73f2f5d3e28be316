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

#include "unirel/properties.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <map>
#include <string>

#include "unirel/channels.hpp"
#include "unirel/classical.hpp"
#include "unirel/entropy_params.hpp"
#include "unirel/errors.hpp"
#include "unirel/linalg.hpp"
#include "unirel/quantum.hpp"
#include "unirel/random.hpp"

namespace unirel::properties {

namespace regions {

bool any(double, double) {
    return true;
}

bool data_processing(double r, double s) {
    return r == 1.0 || (r >= 0.0 && r < 1.0 && s <= 1.0);
}

bool sandwich(double r, double s) {
    return r == 1.0 || (r >= 0.0 && r < 1.0 && s >= 0.0);
}

bool classical_convex(double r, double s) {
    return r == 1.0 || (r > 1.0 && s >= 1.0) || (r > 0.0 && r < 1.0 && s <= 1.0);
}

}  // namespace regions

bool ParamGrid::admits(double r, double s) const {
    return !region || region(r, s);
}

std::vector<double> ParamGrid::s_values_for(double r) const {
    std::vector<double> out;
    for (double s : s_values) {
        if (admits(r, s)) {
            out.push_back(s);
        }
    }
    if (include_inverse_r && r >= 0.05 - 1e-12 && r < 1.0 && admits(r, 1.0 / r)) {
        out.push_back(1.0 / r);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end(), [](double a, double b) { return std::abs(a - b) <= 1e-14; }),
              out.end());
    return out;
}

std::vector<ParamPoint> ParamGrid::points() const {
    std::vector<ParamPoint> out;
    for (double r : r_values) {
        for (double s : s_values_for(r)) {
            out.push_back({r, s});
        }
    }
    return out;
}

std::vector<double> quantum_r_grid() {
    std::vector<double> out;
    for (int k = 0; k <= 20; ++k) {
        out.push_back(k / 20.0);
    }
    return out;
}

std::vector<double> classical_r_grid() {
    std::vector<double> out;
    for (int k = 1; k <= 20; ++k) {
        out.push_back(k / 20.0);
    }
    for (double r : {1.25, 1.5, 2.0, 3.0}) {
        out.push_back(r);
    }
    return out;
}

std::vector<double> default_s_grid() {
    return {-2.0, -1.0, -0.5, -1e-6, 0.0, 1e-6, 0.5, 1.0};
}

namespace {

using classical::ProbDist;
using linalg::Subsystem;
using quantum::DensityMatrix;

constexpr double kInf = std::numeric_limits<double>::infinity();

class Recorder {
  public:
    explicit Recorder(const SuiteConfig &config) {
        report_.suite = config.name;
        report_.trials = config.trials;
        report_.tolerance = config.tol;
        report_.max_violation = -kInf;
    }

    void begin_trial(std::uint64_t seed) {
        seed_ = seed;
    }

    /// Claim lhs <= rhs.
    void leq(const std::string &params, ExtendedReal lhs, ExtendedReal rhs) {
        double violation;
        if (rhs.is_infinite()) {
            violation = -kInf;
        } else if (lhs.is_infinite()) {
            violation = kInf;
        } else {
            violation = lhs.value() - rhs.value();
        }
        record(params, lhs, rhs, violation);
    }

    /// Claim lhs = rhs; relative residues divide by max(1, |lhs|, |rhs|).
    void eq(const std::string &params, ExtendedReal lhs, ExtendedReal rhs, bool relative) {
        double violation;
        if (lhs.is_infinite() || rhs.is_infinite()) {
            violation = lhs == rhs ? 0.0 : kInf;
        } else {
            const double a = lhs.value();
            const double b = rhs.value();
            violation = std::abs(a - b);
            if (relative) {
                violation /= std::max({1.0, std::abs(a), std::abs(b)});
            }
        }
        record(params, lhs, rhs, violation);
    }

    /// Claim value > floor. Fails exactly when value <= floor.
    void positive(const std::string &params, ExtendedReal value, double floor) {
        const double violation = value.is_infinite() ? -kInf : floor - value.value() + report_.tolerance;
        record(params, value, floor, violation);
    }

    /// Claim residue <= 0 up to tolerance.
    void residue(const std::string &params, double value) {
        record(params, value, 0.0, value);
    }

    void skip() {
        ++report_.skipped;
    }

    SuiteReport finish() && {
        return std::move(report_);
    }

  private:
    void record(const std::string &params, ExtendedReal lhs, ExtendedReal rhs, double violation) {
        ++report_.evaluations;
        if (std::isnan(violation)) {
            violation = kInf;
        }
        report_.max_violation = std::max(report_.max_violation, violation);
        if (violation > report_.tolerance) {
            ++report_.failure_count;
            if (report_.failures.size() < kMaxRecordedFailures) {
                report_.failures.push_back({seed_, params, lhs, rhs, violation});
            }
        }
    }

    SuiteReport report_;
    std::uint64_t seed_ = 0;
};

std::string fmt(const char *format, auto... args) {
    char buf[256];
    std::snprintf(buf, sizeof buf, format, args...);
    return buf;
}

std::string rs_label(const char *claim, double r, double s, std::size_t dim) {
    return fmt("%s r=%.6g s=%.6g dim=%zu", claim, r, s, dim);
}

ExtendedReal sum(ExtendedReal a, ExtendedReal b) {
    if (a.is_infinite() || b.is_infinite()) {
        return ExtendedReal::infinity();
    }
    return a.value() + b.value();
}

/// factor * a for factor > 0.
ExtendedReal scale(double factor, ExtendedReal a) {
    return a.is_infinite() ? a : ExtendedReal(factor * a.value());
}

/// a + b + (r - 1) s a b; infinite when either term is.
ExtendedReal nonadditive_sum(ExtendedReal a, ExtendedReal b, double r, double s) {
    if (a.is_infinite() || b.is_infinite()) {
        return ExtendedReal::infinity();
    }
    return a.value() + b.value() + (r - 1.0) * s * a.value() * b.value();
}

/// Per-trial draws. All randomness of a trial flows from one Rng.
struct Trial {
    std::uint64_t seed;
    random::Rng rng;

    explicit Trial(std::uint64_t s) : seed(s), rng(s) {}

    std::size_t pick(const std::vector<std::size_t> &values) {
        if (values.empty()) {
            throw Error(ErrorCode::kDomainError, "suite has no dimensions configured");
        }
        return values[rng.integer(0, values.size() - 1)];
    }

    std::pair<std::size_t, std::size_t> pick(const std::vector<std::pair<std::size_t, std::size_t>> &values) {
        if (values.empty()) {
            throw Error(ErrorCode::kDomainError, "suite has no bipartite dimensions configured");
        }
        return values[rng.integer(0, values.size() - 1)];
    }

    ProbDist dist(std::size_t n) {
        return random::rand_dist(n, rng.next_seed());
    }

    DensityMatrix state(std::size_t dim) {
        const std::size_t rank = rng.integer(1, dim);
        return random::rand_state(dim, rank, rng.next_seed());
    }

    DensityMatrix full_rank_state(std::size_t dim) {
        return random::rand_state(dim, dim, rng.next_seed());
    }
};

ExtendedReal qdiv(const DensityMatrix &rho, const DensityMatrix &sigma, double r, double s) {
    return quantum::quantum_unified_rel_entropy(rho, sigma, EntropyParams(r, s)).value;
}

ExtendedReal cdiv(const ProbDist &a, const ProbDist &b, double r, double s) {
    return classical::unified_rel_entropy(a, b, EntropyParams(r, s));
}

double total_variation(const ProbDist &a, const ProbDist &b) {
    double out = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        out += std::abs(a[i] - b[i]);
    }
    return 0.5 * out;
}

DensityMatrix normalized_state(const linalg::ComplexMatrix &g) {
    const linalg::HermitianMatrix gg = linalg::HermitianMatrix::symmetrized(g * g.adjoint());
    return quantum::validate_state((1.0 / gg.trace()) * gg);
}

// --- classical suites ---

void classical_nonneg(const SuiteConfig &c, Trial &t, Recorder &rec) {
    const std::size_t n = t.pick(c.dims);
    const ProbDist a = t.dist(n);
    const ProbDist b = t.dist(n);
    const bool distinct = total_variation(a, b) > 0.01;
    for (const ParamPoint &p : c.grid.points()) {
        const ExtendedReal e = cdiv(a, b, p.r, p.s);
        rec.leq(rs_label("E>=0", p.r, p.s, n), 0.0, e);
        rec.eq(rs_label("E(A|A)=0", p.r, p.s, n), cdiv(a, a, p.r, p.s), 0.0, false);
        if (distinct) {
            rec.positive(rs_label("E>0 for A!=B", p.r, p.s, n), e, 1e-10);
        }
    }
}

void classical_nonadd(const SuiteConfig &c, Trial &t, Recorder &rec) {
    const std::size_t n = t.pick(c.dims);
    const std::size_t m = t.pick(c.dims);
    const ProbDist a1 = t.dist(n);
    const ProbDist a2 = t.dist(n);
    const ProbDist b1 = t.dist(m);
    const ProbDist b2 = t.dist(m);
    const ProbDist p1 = classical::product_dist(a1, b1);
    const ProbDist p2 = classical::product_dist(a2, b2);
    for (const ParamPoint &p : c.grid.points()) {
        const ExtendedReal lhs = cdiv(p1, p2, p.r, p.s);
        const ExtendedReal rhs = nonadditive_sum(cdiv(a1, a2, p.r, p.s), cdiv(b1, b2, p.r, p.s), p.r, p.s);
        rec.eq(fmt("product r=%.6g s=%.6g n=%zu m=%zu", p.r, p.s, n, m), lhs, rhs, true);
    }
}

void classical_convex(const SuiteConfig &c, Trial &t, Recorder &rec) {
    const std::size_t n = t.pick(c.dims);
    const ProbDist a1 = t.dist(n);
    const ProbDist a2 = t.dist(n);
    const ProbDist b1 = t.dist(n);
    const ProbDist b2 = t.dist(n);
    const double lambda = t.rng.uniform(0.0, 1.0);
    const ProbDist a = classical::mixture(a1, a2, lambda);
    const ProbDist b = classical::mixture(b1, b2, lambda);
    for (const ParamPoint &p : c.grid.points()) {
        const ExtendedReal lhs = cdiv(a, b, p.r, p.s);
        const ExtendedReal rhs =
            sum(scale(lambda, cdiv(a1, b1, p.r, p.s)), scale(1.0 - lambda, cdiv(a2, b2, p.r, p.s)));
        rec.leq(fmt("convex r=%.6g s=%.6g n=%zu lambda=%.6g", p.r, p.s, n, lambda), lhs, rhs);
    }
}

void thm21_sandwich(const SuiteConfig &c, Trial &t, Recorder &rec) {
    const std::size_t n = t.pick(c.dims);
    const ProbDist a = t.dist(n);
    const ProbDist b = t.dist(n);
    const double h = classical::kl_divergence(a, b);
    for (const ParamPoint &p : c.grid.points()) {
        rec.leq(rs_label("E_r<=H", p.r, p.s, n), cdiv(a, b, p.r, p.s), h);
        rec.leq(rs_label("H<=E_{2-r}", p.r, p.s, n), h, cdiv(a, b, 2.0 - p.r, p.s));
    }
}

// --- quantum suites ---

void q_nonneg(const SuiteConfig &c, Trial &t, Recorder &rec) {
    const std::size_t dim = t.pick(c.dims);
    const std::size_t rho_rank = t.rng.integer(1, dim);
    const linalg::ComplexMatrix g = random::gaussian_matrix(dim, rho_rank, t.rng);
    const DensityMatrix rho = normalized_state(g);
    DensityMatrix sigma = rho;
    if (t.rng.integer(0, 1) == 1) {
        // supp sigma inside supp rho, so Ker rho lies in Ker sigma.
        const std::size_t k = t.rng.integer(1, rho_rank);
        sigma = normalized_state(g * random::gaussian_matrix(rho_rank, k, t.rng));
    } else {
        sigma = t.state(dim);
    }
    const bool included = quantum::kernel_inclusion(rho, sigma);
    const bool distinct = quantum::trace_distance(rho, sigma) > 0.01;
    for (const ParamPoint &p : c.grid.points()) {
        const quantum::DivergenceResult res = quantum::quantum_unified_rel_entropy(rho, sigma, EntropyParams(p.r, p.s));
        rec.leq(rs_label("E>=0", p.r, p.s, dim), 0.0, res.value);
        const double x = res.overlap ? *res.overlap : quantum::overlap(rho, sigma, p.r);
        rec.leq(rs_label("overlap>=0", p.r, p.s, dim), 0.0, x);
        rec.leq(rs_label("overlap<=1", p.r, p.s, dim), x, 1.0);
        if (p.r == 0.0) {
            if (included) {
                rec.eq(rs_label("E_0=0 with kernel inclusion", p.r, p.s, dim), res.value, 0.0, false);
            } else {
                rec.positive(rs_label("E_0>0 without kernel inclusion", p.r, p.s, dim), res.value, 1e-10);
            }
        } else {
            rec.eq(rs_label("E(rho|rho)=0", p.r, p.s, dim), qdiv(rho, rho, p.r, p.s), 0.0, false);
            if (distinct) {
                rec.positive(rs_label("E>0 for rho!=sigma", p.r, p.s, dim), res.value, 1e-10);
            }
        }
    }
}

void q_joint_convex(const SuiteConfig &c, Trial &t, Recorder &rec) {
    const std::size_t dim = t.pick(c.dims);
    const DensityMatrix rho1 = t.state(dim);
    const DensityMatrix rho2 = t.state(dim);
    const DensityMatrix sigma1 = t.state(dim);
    const DensityMatrix sigma2 = t.state(dim);
    const double lambda = t.rng.uniform(0.0, 1.0);
    const DensityMatrix rho = quantum::mix(rho1, rho2, lambda);
    const DensityMatrix sigma = quantum::mix(sigma1, sigma2, lambda);
    for (const ParamPoint &p : c.grid.points()) {
        const ExtendedReal lhs = qdiv(rho, sigma, p.r, p.s);
        const ExtendedReal rhs =
            sum(scale(lambda, qdiv(rho1, sigma1, p.r, p.s)), scale(1.0 - lambda, qdiv(rho2, sigma2, p.r, p.s)));
        rec.leq(fmt("joint convex r=%.6g s=%.6g dim=%zu lambda=%.6g", p.r, p.s, dim, lambda), lhs, rhs);
    }
}

void q_unitary(const SuiteConfig &c, Trial &t, Recorder &rec) {
    const std::size_t dim = t.pick(c.dims);
    const DensityMatrix rho = t.state(dim);
    const DensityMatrix sigma = t.state(dim);
    const channels::KrausChannel u = channels::unitary_channel(channels::random_unitary(dim, t.rng.next_seed()));
    const DensityMatrix rho_u = channels::apply_channel(u, rho);
    const DensityMatrix sigma_u = channels::apply_channel(u, sigma);
    for (const ParamPoint &p : c.grid.points()) {
        rec.eq(rs_label("unitary invariance", p.r, p.s, dim), qdiv(rho_u, sigma_u, p.r, p.s), qdiv(rho, sigma, p.r, p.s),
               true);
    }
}

void q_additivity(const SuiteConfig &c, Trial &t, Recorder &rec) {
    const auto [d1, d2] = t.pick(c.bipartite_dims);
    const DensityMatrix rho1 = t.state(d1);
    const DensityMatrix sigma1 = t.state(d1);
    const DensityMatrix rho2 = t.state(d2);
    const DensityMatrix sigma2 = t.state(d2);
    const DensityMatrix rho = quantum::tensor(rho1, rho2);
    const DensityMatrix sigma = quantum::tensor(sigma1, sigma2);
    for (const ParamPoint &p : c.grid.points()) {
        const ExtendedReal lhs = qdiv(rho, sigma, p.r, p.s);
        const ExtendedReal rhs = nonadditive_sum(qdiv(rho1, sigma1, p.r, p.s), qdiv(rho2, sigma2, p.r, p.s), p.r, p.s);
        rec.eq(fmt("tensor r=%.6g s=%.6g dims=%zux%zu", p.r, p.s, d1, d2), lhs, rhs, true);
    }
}

void lemma31_range(const SuiteConfig &c, Trial &t, Recorder &rec) {
    const std::size_t dim = t.pick(c.dims);
    const std::size_t rank_a = t.rng.integer(1, dim);
    const std::size_t rank_b = t.rng.integer(1, dim);
    const linalg::HermitianMatrix a = random::rand_psd(dim, rank_a, t.rng.next_seed());
    const linalg::HermitianMatrix b = random::rand_psd(dim, rank_b, t.rng.next_seed());
    const double lambda = std::exp(t.rng.uniform(std::log(0.1), std::log(10.0)));
    const double mu = std::exp(t.rng.uniform(std::log(0.1), std::log(10.0)));
    const linalg::HermitianMatrix p1 = linalg::support_projection(linalg::jacobi_eig(lambda * a + mu * b));
    const linalg::HermitianMatrix p2 = linalg::support_projection(linalg::jacobi_eig(a + b));
    rec.residue(fmt("support equality dim=%zu ranks=%zu,%zu lambda=%.6g mu=%.6g", dim, rank_a, rank_b, lambda, mu),
                linalg::max_abs_diff(p1.matrix(), p2.matrix()));
}

void dpi_channel(const SuiteConfig &c, Trial &t, Recorder &rec) {
    const std::size_t dim = t.pick(c.dims);
    const std::size_t kraus = t.rng.integer(1, 4);
    const DensityMatrix rho = t.state(dim);
    const DensityMatrix sigma = t.state(dim);
    const channels::KrausChannel phi = channels::random_channel(dim, kraus, t.rng.next_seed());
    const DensityMatrix rho_out = channels::apply_channel(phi, rho);
    const DensityMatrix sigma_out = channels::apply_channel(phi, sigma);
    for (const ParamPoint &p : c.grid.points()) {
        rec.leq(fmt("channel r=%.6g s=%.6g dim=%zu kraus=%zu", p.r, p.s, dim, kraus), qdiv(rho_out, sigma_out, p.r, p.s),
                qdiv(rho, sigma, p.r, p.s));
    }
}

void dpi_partial_trace(const SuiteConfig &c, Trial &t, Recorder &rec) {
    const auto [d1, d2] = t.pick(c.bipartite_dims);
    const DensityMatrix rho = t.state(d1 * d2);
    const DensityMatrix sigma = t.state(d1 * d2);
    for (Subsystem keep : {Subsystem::kFirst, Subsystem::kSecond}) {
        const DensityMatrix rho_m = quantum::marginal(rho, d1, d2, keep);
        const DensityMatrix sigma_m = quantum::marginal(sigma, d1, d2, keep);
        const int kept = keep == Subsystem::kFirst ? 1 : 2;
        for (const ParamPoint &p : c.grid.points()) {
            rec.leq(fmt("partial trace keep=%d r=%.6g s=%.6g dims=%zux%zu", kept, p.r, p.s, d1, d2),
                    qdiv(rho_m, sigma_m, p.r, p.s), qdiv(rho, sigma, p.r, p.s));
        }
    }
}

void thm34_sandwich(const SuiteConfig &c, Trial &t, Recorder &rec) {
    const std::size_t dim = t.pick(c.dims);
    const DensityMatrix rho = t.state(dim);
    const DensityMatrix sigma = t.full_rank_state(dim);
    const ExtendedReal h = quantum::umegaki_rel_entropy(rho, sigma);
    for (const ParamPoint &p : c.grid.points()) {
        rec.leq(rs_label("E_r<=H", p.r, p.s, dim), qdiv(rho, sigma, p.r, p.s), h);
        rec.leq(rs_label("H<=E_{2-r}", p.r, p.s, dim), h, qdiv(rho, sigma, 2.0 - p.r, p.s));
    }
}

void thm35_r_monotone(const SuiteConfig &c, Trial &t, Recorder &rec) {
    const std::size_t dim = t.pick(c.dims);
    const DensityMatrix rho = t.state(dim);
    const DensityMatrix sigma = t.full_rank_state(dim);
    std::vector<double> rs;
    for (double r : c.grid.r_values) {
        if (r < 1.0) {
            rs.push_back(r);
        }
    }
    std::sort(rs.begin(), rs.end());
    for (double r : rs) {
        if (quantum::overlap(rho, sigma, r) < 1e-10) {
            rec.skip();
            return;
        }
    }
    const bool bridge_to_one =
        std::find(c.grid.r_values.begin(), c.grid.r_values.end(), 1.0) != c.grid.r_values.end() && !rs.empty();
    const ExtendedReal h = quantum::umegaki_rel_entropy(rho, sigma);
    for (double s : c.grid.s_values) {
        std::vector<ExtendedReal> e;
        std::vector<double> r_used;
        for (double r : rs) {
            if (c.grid.admits(r, s)) {
                e.push_back(qdiv(rho, sigma, r, s));
                r_used.push_back(r);
            }
        }
        const bool increasing = s >= 0.0;
        for (std::size_t k = 0; k + 1 < e.size(); ++k) {
            const std::string label =
                fmt("%s r=%.6g->%.6g s=%.6g dim=%zu", increasing ? "increasing" : "decreasing", r_used[k],
                    r_used[k + 1], s, dim);
            if (increasing) {
                rec.leq(label, e[k], e[k + 1]);
            } else {
                rec.leq(label, e[k + 1], e[k]);
            }
        }
        if (bridge_to_one && !e.empty() && c.grid.admits(1.0, s)) {
            const std::string label = fmt("%s r=%.6g->1 s=%.6g dim=%zu", increasing ? "increasing" : "decreasing",
                                          r_used.back(), s, dim);
            if (increasing) {
                rec.leq(label, e.back(), h);
            } else {
                rec.leq(label, h, e.back());
            }
        }
    }
}

void thm35_s_monotone(const SuiteConfig &c, Trial &t, Recorder &rec) {
    const std::size_t dim = t.pick(c.dims);
    const DensityMatrix rho = t.state(dim);
    const DensityMatrix sigma = t.state(dim);
    for (double r : c.grid.r_values) {
        const std::vector<double> ss = c.grid.s_values_for(r);
        std::vector<ExtendedReal> e;
        for (double s : ss) {
            e.push_back(qdiv(rho, sigma, r, s));
        }
        for (std::size_t k = 0; k + 1 < e.size(); ++k) {
            rec.leq(fmt("decreasing in s r=%.6g s=%.6g->%.6g dim=%zu", r, ss[k], ss[k + 1], dim), e[k + 1], e[k]);
        }
    }
}

void thm35_s_convex(const SuiteConfig &c, Trial &t, Recorder &rec) {
    const std::size_t dim = t.pick(c.dims);
    const DensityMatrix rho = t.state(dim);
    const DensityMatrix sigma = t.state(dim);
    for (double r : c.grid.r_values) {
        const std::vector<double> ss = c.grid.s_values_for(r);
        std::vector<ExtendedReal> e;
        for (double s : ss) {
            e.push_back(qdiv(rho, sigma, r, s));
        }
        for (std::size_t i = 0; i < ss.size(); ++i) {
            for (std::size_t j = i + 1; j < ss.size(); ++j) {
                const double mid = 0.5 * (ss[i] + ss[j]);
                rec.leq(fmt("midpoint convex r=%.6g s=%.6g,%.6g dim=%zu", r, ss[i], ss[j], dim),
                        qdiv(rho, sigma, r, mid), scale(0.5, sum(e[i], e[j])));
            }
        }
    }
}

void thm35_r0(const SuiteConfig &c, Trial &t, Recorder &rec) {
    const std::size_t dim = t.pick(c.dims);
    const DensityMatrix rho = t.full_rank_state(dim);
    const DensityMatrix sigma = t.state(dim);
    for (double s : c.grid.s_values_for(0.0)) {
        rec.eq(rs_label("E_0=0", 0.0, s, dim), qdiv(rho, sigma, 0.0, s), 0.0, false);
    }
}

// --- supporting checks ---

void commuting_reduction(const SuiteConfig &c, Trial &t, Recorder &rec) {
    const std::size_t dim = t.pick(c.dims);
    const ProbDist a = t.dist(dim);
    const ProbDist b = t.dist(dim);
    const DensityMatrix rho = quantum::validate_state(linalg::HermitianMatrix::diagonal(a.weights()));
    const DensityMatrix sigma = quantum::validate_state(linalg::HermitianMatrix::diagonal(b.weights()));
    for (const ParamPoint &p : c.grid.points()) {
        rec.eq(rs_label("quantum=classical", p.r, p.s, dim), qdiv(rho, sigma, p.r, p.s), cdiv(a, b, p.r, p.s), true);
    }
}

void eig_reconstruction(const SuiteConfig &c, Trial &t, Recorder &rec) {
    const std::size_t dim = t.pick(c.dims);
    const bool psd = t.rng.integer(0, 1) == 1;
    const std::size_t rank = psd ? t.rng.integer(1, dim) : dim;
    const linalg::HermitianMatrix h =
        psd ? random::rand_psd(dim, rank, t.rng.next_seed()) : random::rand_hermitian(dim, t.rng.next_seed());
    const linalg::SpectralDecomposition eig = linalg::jacobi_eig(h);
    const std::string kind = psd ? fmt("psd rank=%zu", rank) : std::string("hermitian");
    rec.residue(fmt("reconstruction %s dim=%zu", kind.c_str(), dim), linalg::max_abs_diff(eig.reconstruct(), h.matrix()));
    rec.residue(fmt("V^dagger V=I %s dim=%zu", kind.c_str(), dim),
                linalg::max_abs_diff(eig.eigenvectors.adjoint() * eig.eigenvectors, linalg::ComplexMatrix::identity(dim)));
    double disorder = 0.0;
    for (std::size_t k = 0; k + 1 < eig.eigenvalues.size(); ++k) {
        disorder = std::max(disorder, eig.eigenvalues[k + 1] - eig.eigenvalues[k]);
    }
    rec.residue(fmt("descending order %s dim=%zu", kind.c_str(), dim), disorder);
}

void continuity_s(const SuiteConfig &c, Trial &t, Recorder &rec) {
    const std::size_t dim = t.pick(c.dims);
    const ProbDist a = t.dist(dim);
    const ProbDist b = t.dist(dim);
    const DensityMatrix rho = t.full_rank_state(dim);
    const DensityMatrix sigma = t.full_rank_state(dim);
    for (double r : c.grid.r_values) {
        if (r == 1.0) {
            continue;
        }
        const ExtendedReal q0 = qdiv(rho, sigma, r, 0.0);
        for (double s : {-1e-6, 1e-6}) {
            if (r > 0.0) {
                rec.eq(rs_label("classical GEN->S0", r, s, dim), cdiv(a, b, r, s), cdiv(a, b, r, 0.0), false);
            }
            rec.eq(rs_label("quantum GEN->S0", r, s, dim), qdiv(rho, sigma, r, s), q0, false);
        }
    }
}

void continuity_r(const SuiteConfig &c, Trial &t, Recorder &rec) {
    const std::size_t dim = t.pick(c.dims);
    const ProbDist a = t.dist(dim);
    const ProbDist b = t.dist(dim);
    const DensityMatrix rho = t.full_rank_state(dim);
    const DensityMatrix sigma = t.full_rank_state(dim);
    const double kl = classical::kl_divergence(a, b);
    const ExtendedReal h = quantum::umegaki_rel_entropy(rho, sigma);
    for (double s : c.grid.s_values) {
        for (double r : {1.0 - 1e-6, 1.0 + 1e-6}) {
            rec.eq(rs_label("classical ->R1", r, s, dim), cdiv(a, b, r, s), kl, false);
            rec.eq(rs_label("quantum ->R1", r, s, dim), qdiv(rho, sigma, r, s), h, false);
        }
    }
}

void eq15_scalar(const SuiteConfig &c, Trial &t, Recorder &rec) {
    const std::size_t dim = t.pick(c.dims);
    const DensityMatrix rho = t.full_rank_state(dim);
    const DensityMatrix sigma = t.full_rank_state(dim);
    for (double r : c.grid.r_values) {
        if (!(r > 0.0 && r < 1.0)) {
            continue;
        }
        const double x = quantum::overlap(rho, sigma, r);
        const double dx = quantum::overlap_derivative(rho, sigma, r);
        rec.leq(fmt("x ln x <= -(1-r) x' r=%.6g dim=%zu", r, dim), x * std::log(x), -(1.0 - r) * dx);
    }
}

void thm35_derivatives(const SuiteConfig &c, Trial &t, Recorder &rec) {
    constexpr double h = 1e-5;
    const std::size_t dim = t.pick(c.dims);
    const DensityMatrix rho = t.full_rank_state(dim);
    const DensityMatrix sigma = t.full_rank_state(dim);
    for (const ParamPoint &p : c.grid.points()) {
        if (!(p.r > h && p.r < 1.0 - h)) {
            continue;
        }
        const EntropyParams params(p.r, p.s);
        const double fd_s = (qdiv(rho, sigma, p.r, p.s + h).value() - qdiv(rho, sigma, p.r, p.s - h).value()) / (2 * h);
        rec.eq(rs_label("dE/ds", p.r, p.s, dim), quantum::rel_entropy_ds(rho, sigma, params), fd_s, false);
        const double fd_r = (qdiv(rho, sigma, p.r + h, p.s).value() - qdiv(rho, sigma, p.r - h, p.s).value()) / (2 * h);
        rec.eq(rs_label("dE/dr", p.r, p.s, dim), quantum::rel_entropy_dr(rho, sigma, params), fd_r, false);
    }
}

void eq3_eq4(const SuiteConfig &c, Trial &t, Recorder &rec) {
    const std::size_t dim = t.pick(c.dims);
    const ProbDist a = t.dist(dim);
    const ProbDist b = t.dist(dim);
    const DensityMatrix rho = t.state(dim);
    const DensityMatrix sigma = t.full_rank_state(dim);
    for (double r : c.grid.r_values) {
        if (!(r > 0.0 && r < 1.0)) {
            continue;
        }
        rec.eq(rs_label("classical s=1 is Tsallis", r, 1.0, dim), cdiv(a, b, r, 1.0),
               classical::tsallis_rel_entropy(a, b, r), true);
        rec.eq(rs_label("quantum s=1 is Tsallis", r, 1.0, dim), qdiv(rho, sigma, r, 1.0),
               quantum::tsallis_rel_entropy(rho, sigma, r), true);
        rec.eq(rs_label("classical s=1/r is type-(1/r)", r, 1.0 / r, dim), cdiv(a, b, r, 1.0 / r),
               classical::type_r_rel_entropy(a, b, 1.0 / r), true);
        rec.eq(rs_label("quantum s=1/r is type-(1/r)", r, 1.0 / r, dim), qdiv(rho, sigma, r, 1.0 / r),
               quantum::type_r_rel_entropy(rho, sigma, 1.0 / r), true);
        rec.eq(rs_label("classical order 1/r, s=r is type-r", 1.0 / r, r, dim), cdiv(a, b, 1.0 / r, r),
               classical::type_r_rel_entropy(a, b, r), true);
        const ExtendedReal q_inverse = qdiv(rho, sigma, 1.0 / r, r);
        if (q_inverse.is_finite() && std::isfinite(q_inverse.value())) {
            rec.eq(rs_label("quantum order 1/r, s=r is type-r", 1.0 / r, r, dim), q_inverse,
                   quantum::type_r_rel_entropy(rho, sigma, r), true);
        } else {
            rec.skip();
        }
    }
}

using SuiteFn = void (*)(const SuiteConfig &, Trial &, Recorder &);

struct SuiteSpec {
    SuiteFn fn;
    std::size_t trials;
    double tol;
};

std::vector<std::size_t> range(std::size_t lo, std::size_t hi) {
    std::vector<std::size_t> out;
    for (std::size_t d = lo; d <= hi; ++d) {
        out.push_back(d);
    }
    return out;
}

std::vector<double> interior_r_grid() {
    std::vector<double> out;
    for (int k = 1; k < 20; ++k) {
        out.push_back(k / 20.0);
    }
    return out;
}

const std::map<std::string, SuiteSpec, std::less<>> &registry() {
    static const std::map<std::string, SuiteSpec, std::less<>> suites = {
        {"classical_nonneg", {classical_nonneg, 500, 1e-10}},
        {"classical_nonadd", {classical_nonadd, 500, 1e-9}},
        {"classical_convex", {classical_convex, 500, 1e-9}},
        {"thm21_sandwich", {thm21_sandwich, 1000, 1e-10}},
        {"q_nonneg", {q_nonneg, 1000, 1e-10}},
        {"q_joint_convex", {q_joint_convex, 500, 1e-8}},
        {"q_unitary", {q_unitary, 500, 1e-9}},
        {"q_additivity", {q_additivity, 500, 1e-9}},
        {"lemma31_range", {lemma31_range, 300, 1e-6}},
        {"dpi_channel", {dpi_channel, 500, 1e-8}},
        {"dpi_partial_trace", {dpi_partial_trace, 500, 1e-8}},
        {"thm34_sandwich", {thm34_sandwich, 500, 1e-8}},
        {"thm35_r_monotone", {thm35_r_monotone, 300, 1e-8}},
        {"thm35_s_monotone", {thm35_s_monotone, 300, 1e-8}},
        {"thm35_s_convex", {thm35_s_convex, 300, 1e-8}},
        {"thm35_r0", {thm35_r0, 300, 1e-10}},
        {"commuting_reduction", {commuting_reduction, 500, 1e-10}},
        {"eig_reconstruction", {eig_reconstruction, 1000, 1e-9}},
        {"continuity_s", {continuity_s, 100, 1e-5}},
        {"continuity_r", {continuity_r, 100, 1e-4}},
        {"eq15_scalar", {eq15_scalar, 300, 1e-9}},
        {"thm35_derivatives", {thm35_derivatives, 300, 1e-4}},
        {"eq3_eq4", {eq3_eq4, 300, 1e-12}},
    };
    return suites;
}

}  // namespace

const std::vector<std::string> &suite_names() {
    static const std::vector<std::string> names = {
        "classical_nonneg",  "classical_nonadd",   "classical_convex",    "thm21_sandwich",   "q_nonneg",
        "q_joint_convex",    "q_unitary",          "q_additivity",        "lemma31_range",    "dpi_channel",
        "dpi_partial_trace", "thm34_sandwich",     "thm35_r_monotone",    "thm35_s_monotone", "thm35_s_convex",
        "thm35_r0",          "commuting_reduction", "eig_reconstruction", "continuity_s",     "continuity_r",
        "eq15_scalar",       "thm35_derivatives",  "eq3_eq4",
    };
    return names;
}

SuiteConfig default_config(std::string_view name) {
    const auto it = registry().find(name);
    if (it == registry().end()) {
        throw Error(ErrorCode::kUnknownSuite, "unknown suite '" + std::string(name) + "'");
    }
    SuiteConfig c;
    c.name = std::string(name);
    c.trials = it->second.trials;
    c.tol = it->second.tol;
    c.seed = 0;
    c.dims = range(2, 6);
    c.bipartite_dims = {{2, 2}, {2, 3}};
    c.grid.r_values = quantum_r_grid();
    c.grid.s_values = default_s_grid();

    if (name == "classical_nonneg" || name == "classical_nonadd" || name == "commuting_reduction") {
        c.grid.r_values = classical_r_grid();
    } else if (name == "classical_convex") {
        c.grid.r_values = classical_r_grid();
        c.grid.region = regions::classical_convex;
    } else if (name == "thm21_sandwich") {
        c.grid.r_values = classical_r_grid();
        c.grid.region = [](double r, double s) { return r <= 1.0 && regions::sandwich(r, s); };
    } else if (name == "q_joint_convex" || name == "dpi_channel" || name == "dpi_partial_trace") {
        c.grid.region = regions::data_processing;
    } else if (name == "thm34_sandwich") {
        c.grid.region = regions::sandwich;
    } else if (name == "thm35_r_monotone") {
        c.grid.include_inverse_r = false;
    } else if (name == "thm35_r0") {
        c.grid.r_values = {0.0};
    } else if (name == "continuity_s") {
        c.grid.r_values = quantum_r_grid();
    } else if (name == "eq15_scalar" || name == "eq3_eq4") {
        c.grid.r_values = interior_r_grid();
    } else if (name == "thm35_derivatives") {
        c.grid.r_values = interior_r_grid();
        c.grid.s_values = {-2.0, -1.0, -0.5, 0.0, 0.5, 1.0};
        c.grid.include_inverse_r = false;
    }

    if (name == "classical_nonneg" || name == "classical_convex" || name == "thm21_sandwich" ||
        name == "eig_reconstruction") {
        c.dims = range(2, 8);
    } else if (name == "classical_nonadd" || name == "dpi_channel") {
        c.dims = range(2, 4);
    }
    return c;
}

SuiteReport run_suite(const SuiteConfig &config) {
    const auto it = registry().find(config.name);
    if (it == registry().end()) {
        throw Error(ErrorCode::kUnknownSuite, "unknown suite '" + config.name + "'");
    }
    Recorder rec(config);
    for (std::size_t k = 0; k < config.trials; ++k) {
        const std::uint64_t seed = random::mix_seed(config.seed, k);
        Trial trial(seed);
        rec.begin_trial(seed);
        it->second.fn(config, trial, rec);
    }
    return std::move(rec).finish();
}

}  // namespace unirel::properties
