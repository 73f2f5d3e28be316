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

#include <cstdint>
#include <cstdio>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "unirel/channels.hpp"
#include "unirel/classical.hpp"
#include "unirel/entropy_params.hpp"
#include "unirel/errors.hpp"
#include "unirel/io.hpp"
#include "unirel/properties.hpp"
#include "unirel/quantum.hpp"

namespace {

using unirel::io::Json;

constexpr int kExitOk = 0;
constexpr int kExitSuiteFailure = 1;
constexpr int kExitInputError = 2;

struct Options {
    std::string a_path;
    std::string b_path;
    std::string rho_path;
    std::string sigma_path;
    std::string channel_path;
    double r = 1.0;
    double s = 0.0;
    std::string output = "human";
    bool eigenvalues = false;
    std::size_t dim1 = 0;
    std::size_t dim2 = 0;
    int keep = 1;
    std::string suite = "all";
    std::size_t trials = 200;
    std::uint64_t seed = 0;
    std::optional<double> tol;
};

std::string format_number(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", x);
    return buf;
}

bool json_mode(const Options &o) {
    return o.output == "json";
}

void print_json(const Json &j) {
    std::cout << j.dump(2) << '\n';
}

unirel::classical::ProbDist load_dist(const std::string &path, bool allow_zero) {
    return unirel::classical::validate_dist(unirel::io::parse_weights(unirel::io::read_json_file(path)), allow_zero);
}

unirel::quantum::DensityMatrix load_state(const std::string &path) {
    const unirel::linalg::ComplexMatrix m = unirel::io::parse_matrix(unirel::io::read_json_file(path));
    return unirel::quantum::validate_state(unirel::linalg::HermitianMatrix(m));
}

void print_divergence(const Options &o, const unirel::ExtendedReal &value, unirel::Branch branch,
                      std::optional<double> overlap) {
    if (json_mode(o)) {
        print_json(unirel::io::divergence_to_json(value, branch, overlap));
    } else {
        std::cout << (value.is_infinite() ? std::string("inf") : format_number(value.value())) << '\n';
    }
}

int run_entropy(const Options &o) {
    const unirel::EntropyParams params(o.r, o.s);
    const double h = unirel::classical::unified_entropy(load_dist(o.a_path, true), params);
    if (json_mode(o)) {
        Json out;
        out["value"] = h;
        out["branch"] = std::string(unirel::branch_name(params.branch()));
        out["specialization"] = std::string(unirel::specialization_name(params.specialization()));
        print_json(out);
    } else {
        std::cout << format_number(h) << '\n';
    }
    return kExitOk;
}

int run_rel_entropy(const Options &o) {
    const unirel::EntropyParams params(o.r, o.s);
    const auto a = load_dist(o.a_path, false);
    const auto b = load_dist(o.b_path, false);
    const unirel::ExtendedReal value = unirel::classical::unified_rel_entropy(a, b, params);
    std::optional<double> overlap;
    if (params.branch() != unirel::Branch::kR1) {
        overlap = unirel::classical::relative_power_sum(a, b, params.r);
    }
    print_divergence(o, value, params.branch(), overlap);
    return kExitOk;
}

int run_qentropy(const Options &o) {
    const unirel::EntropyParams params(o.r, o.s);
    const auto rho = load_state(o.rho_path);
    const double h = unirel::quantum::quantum_unified_entropy(rho, params);
    if (json_mode(o)) {
        Json out;
        out["value"] = h;
        out["branch"] = std::string(unirel::branch_name(params.branch()));
        out["specialization"] = std::string(unirel::specialization_name(params.specialization()));
        if (o.eigenvalues) {
            out["eigenvalues"] = std::vector<double>(rho.eigenvalues().begin(), rho.eigenvalues().end());
        }
        print_json(out);
    } else {
        std::cout << format_number(h) << '\n';
        if (o.eigenvalues) {
            std::cout << "eigenvalues:";
            for (double lambda : rho.eigenvalues()) {
                std::cout << ' ' << format_number(lambda);
            }
            std::cout << '\n';
        }
    }
    return kExitOk;
}

int run_qrel_entropy(const Options &o) {
    const auto rho = load_state(o.rho_path);
    const auto sigma = load_state(o.sigma_path);
    const auto res = unirel::quantum::quantum_unified_rel_entropy(rho, sigma, unirel::EntropyParams(o.r, o.s));
    print_divergence(o, res.value, res.branch, res.overlap);
    return kExitOk;
}

int run_channel_apply(const Options &o) {
    const auto phi = unirel::io::parse_channel(unirel::io::read_json_file(o.channel_path));
    const auto out = unirel::channels::apply_channel(phi, load_state(o.rho_path));
    print_json(unirel::io::matrix_to_json(out.matrix().matrix()));
    return kExitOk;
}

int run_partial_trace(const Options &o) {
    if (o.keep != 1 && o.keep != 2) {
        throw unirel::Error(unirel::ErrorCode::kDomainError, "--keep must be 1 or 2");
    }
    const auto keep = o.keep == 1 ? unirel::linalg::Subsystem::kFirst : unirel::linalg::Subsystem::kSecond;
    const auto out = unirel::quantum::marginal(load_state(o.rho_path), o.dim1, o.dim2, keep);
    print_json(unirel::io::matrix_to_json(out.matrix().matrix()));
    return kExitOk;
}

int run_check(const Options &o) {
    std::vector<std::string> names;
    if (o.suite == "all") {
        names = unirel::properties::suite_names();
    } else {
        names.push_back(o.suite);
    }
    std::vector<unirel::properties::SuiteConfig> configs;
    for (const std::string &name : names) {
        unirel::properties::SuiteConfig config = unirel::properties::default_config(name);
        config.trials = o.trials;
        config.seed = o.seed;
        if (o.tol) {
            config.tol = *o.tol;
        }
        configs.push_back(std::move(config));
    }
    bool all_passed = true;
    Json reports = Json::array();
    for (const auto &config : configs) {
        const unirel::properties::SuiteReport report = unirel::properties::run_suite(config);
        all_passed = all_passed && report.passed();
        if (json_mode(o)) {
            reports.push_back(unirel::io::report_to_json(report));
        } else {
            std::cout << (report.passed() ? "PASS " : "FAIL ") << report.suite
                      << " trials=" << report.trials << " evaluations=" << report.evaluations
                      << " max_violation=" << unirel::io::real_to_json(report.max_violation).dump()
                      << " tolerance=" << format_number(report.tolerance) << " failures=" << report.failure_count
                      << " skipped=" << report.skipped << '\n';
            for (const auto &f : report.failures) {
                std::cout << "  seed=" << f.seed << ' ' << f.params << " lhs=" << f.lhs.to_string()
                          << " rhs=" << f.rhs.to_string() << '\n';
            }
        }
    }
    if (json_mode(o)) {
        Json out;
        out["passed"] = all_passed;
        out["suites"] = std::move(reports);
        print_json(out);
    }
    return all_passed ? kExitOk : kExitSuiteFailure;
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"Unified (r,s)-entropy and relative entropy for distributions and quantum states"};
    app.require_subcommand(1);
    Options o;

    const auto add_rs = [&o](CLI::App *cmd) {
        cmd->add_option("--r", o.r, "order r")->required();
        cmd->add_option("--s", o.s, "degree s")->required();
    };
    const auto add_output = [&o](CLI::App *cmd) {
        cmd->add_option("--output", o.output, "human or json")->check(CLI::IsMember({"human", "json"}));
    };

    CLI::App *entropy = app.add_subcommand("entropy", "unified entropy of a distribution");
    entropy->add_option("--a", o.a_path, "distribution JSON")->required();
    add_rs(entropy);
    add_output(entropy);

    CLI::App *rel = app.add_subcommand("rel-entropy", "unified relative entropy of two distributions");
    rel->add_option("--a", o.a_path, "first distribution JSON")->required();
    rel->add_option("--b", o.b_path, "second distribution JSON")->required();
    add_rs(rel);
    add_output(rel);

    CLI::App *qent = app.add_subcommand("qentropy", "unified entropy of a density matrix");
    qent->add_option("--rho", o.rho_path, "state JSON")->required();
    qent->add_flag("--eigenvalues", o.eigenvalues, "also report the spectrum");
    add_rs(qent);
    add_output(qent);

    CLI::App *qrel = app.add_subcommand("qrel-entropy", "unified relative entropy of two density matrices");
    qrel->add_option("--rho", o.rho_path, "first state JSON")->required();
    qrel->add_option("--sigma", o.sigma_path, "second state JSON")->required();
    add_rs(qrel);
    add_output(qrel);

    CLI::App *chan = app.add_subcommand("channel-apply", "apply a Kraus channel to a state");
    chan->add_option("--channel", o.channel_path, "channel JSON")->required();
    chan->add_option("--rho", o.rho_path, "state JSON")->required();
    add_output(chan);

    CLI::App *pt = app.add_subcommand("partial-trace", "reduced state of a bipartite state");
    pt->add_option("--rho", o.rho_path, "state JSON")->required();
    pt->add_option("--dim1", o.dim1, "first factor dimension")->required();
    pt->add_option("--dim2", o.dim2, "second factor dimension")->required();
    pt->add_option("--keep", o.keep, "subsystem to keep (1 or 2)");
    add_output(pt);

    CLI::App *check = app.add_subcommand("check", "run randomized property suites");
    check->add_option("--suite", o.suite, "suite name or all");
    check->add_option("--trials", o.trials, "trials per suite");
    check->add_option("--seed", o.seed, "base seed");
    check->add_option("--tol", o.tol, "tolerance override");
    add_output(check);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitInputError;
    }

    try {
        if (entropy->parsed()) {
            return run_entropy(o);
        }
        if (rel->parsed()) {
            return run_rel_entropy(o);
        }
        if (qent->parsed()) {
            return run_qentropy(o);
        }
        if (qrel->parsed()) {
            return run_qrel_entropy(o);
        }
        if (chan->parsed()) {
            return run_channel_apply(o);
        }
        if (pt->parsed()) {
            return run_partial_trace(o);
        }
        return run_check(o);
    } catch (const unirel::Error &e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitInputError;
    }
}
