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

#include "unirel/io.hpp"

#include <cmath>
#include <fstream>
#include <string>

#include "unirel/errors.hpp"

namespace unirel::io {

namespace {

[[noreturn]] void parse_error(const std::string &what) {
    throw Error(ErrorCode::kParseError, what);
}

std::size_t read_size(const Json &j, const char *key) {
    if (!j.contains(key) || !j[key].is_number_integer() || j[key].get<long long>() < 1) {
        parse_error(std::string("expected positive integer field \"") + key + "\"");
    }
    return j[key].get<std::size_t>();
}

double read_number(const Json &j, const std::string &where) {
    if (!j.is_number()) {
        parse_error("expected a number at " + where);
    }
    return j.get<double>();
}

}  // namespace

Json read_json_file(const std::filesystem::path &path) {
    std::ifstream in(path);
    if (!in) {
        parse_error("cannot open " + path.string());
    }
    try {
        return Json::parse(in);
    } catch (const nlohmann::json::parse_error &e) {
        parse_error(path.string() + ": " + e.what());
    }
}

std::vector<double> parse_weights(const Json &j) {
    if (!j.is_array()) {
        parse_error("a distribution must be a JSON array of numbers");
    }
    std::vector<double> out;
    out.reserve(j.size());
    for (std::size_t i = 0; i < j.size(); ++i) {
        out.push_back(read_number(j[i], "index " + std::to_string(i)));
    }
    return out;
}

linalg::ComplexMatrix parse_matrix(const Json &j) {
    if (!j.is_object()) {
        parse_error("a matrix must be a JSON object");
    }
    std::size_t rows = 0;
    std::size_t cols = 0;
    if (j.contains("dim")) {
        rows = cols = read_size(j, "dim");
    } else {
        rows = read_size(j, "rows");
        cols = read_size(j, "cols");
    }
    if (!j.contains("entries") || !j["entries"].is_array()) {
        parse_error("expected array field \"entries\"");
    }
    const Json &entries = j["entries"];
    if (entries.size() != rows * cols) {
        parse_error("expected " + std::to_string(rows * cols) + " entries, got " + std::to_string(entries.size()));
    }
    std::vector<linalg::Complex> values;
    values.reserve(entries.size());
    for (std::size_t k = 0; k < entries.size(); ++k) {
        const Json &e = entries[k];
        const std::string where = "entry " + std::to_string(k);
        if (!e.is_array() || e.size() != 2) {
            parse_error(where + " must be a [re, im] pair");
        }
        values.emplace_back(read_number(e[0], where), read_number(e[1], where));
    }
    return linalg::ComplexMatrix(rows, cols, std::move(values));
}

Json matrix_to_json(const linalg::ComplexMatrix &m) {
    Json out;
    if (m.is_square()) {
        out["dim"] = m.rows();
    } else {
        out["rows"] = m.rows();
        out["cols"] = m.cols();
    }
    Json entries = Json::array();
    for (const linalg::Complex &z : m.entries()) {
        entries.push_back(Json::array({z.real(), z.imag()}));
    }
    out["entries"] = std::move(entries);
    return out;
}

channels::KrausChannel parse_channel(const Json &j) {
    if (!j.is_object()) {
        parse_error("a channel must be a JSON object");
    }
    const std::size_t dim_in = read_size(j, "dim_in");
    const std::size_t dim_out = read_size(j, "dim_out");
    if (!j.contains("kraus") || !j["kraus"].is_array()) {
        parse_error("expected array field \"kraus\"");
    }
    std::vector<linalg::ComplexMatrix> ops;
    for (const Json &k : j["kraus"]) {
        ops.push_back(parse_matrix(k));
    }
    channels::KrausChannel phi = channels::validate_channel(std::move(ops));
    if (phi.dim_in() != dim_in || phi.dim_out() != dim_out) {
        throw Error(ErrorCode::kShapeMismatch, "Kraus operators do not match dim_in/dim_out");
    }
    return phi;
}

Json channel_to_json(const channels::KrausChannel &phi) {
    Json out;
    out["dim_in"] = phi.dim_in();
    out["dim_out"] = phi.dim_out();
    Json ops = Json::array();
    for (const linalg::ComplexMatrix &k : phi.kraus_ops()) {
        ops.push_back(matrix_to_json(k));
    }
    out["kraus"] = std::move(ops);
    return out;
}

Json extended_to_json(const ExtendedReal &x) {
    return x.is_infinite() ? Json("inf") : real_to_json(x.value());
}

Json real_to_json(double x) {
    if (std::isinf(x)) {
        return x > 0 ? Json("inf") : Json("-inf");
    }
    if (std::isnan(x)) {
        return Json("nan");
    }
    return Json(x);
}

Json divergence_to_json(const ExtendedReal &value, Branch branch, std::optional<double> overlap) {
    Json out;
    out["value"] = extended_to_json(value);
    out["branch"] = std::string(branch_name(branch));
    out["overlap"] = overlap ? Json(*overlap) : Json(nullptr);
    return out;
}

Json report_to_json(const properties::SuiteReport &report) {
    Json out;
    out["suite"] = report.suite;
    out["trials"] = report.trials;
    out["tolerance"] = report.tolerance;
    out["max_violation"] = real_to_json(report.max_violation);
    out["evaluations"] = report.evaluations;
    out["skipped"] = report.skipped;
    out["failure_count"] = report.failure_count;
    out["passed"] = report.passed();
    Json failures = Json::array();
    for (const properties::Failure &f : report.failures) {
        Json item;
        item["seed"] = f.seed;
        item["parameters"] = f.params;
        item["lhs"] = extended_to_json(f.lhs);
        item["rhs"] = extended_to_json(f.rhs);
        item["violation"] = real_to_json(f.violation);
        failures.push_back(std::move(item));
    }
    out["failures"] = std::move(failures);
    return out;
}

}  // namespace unirel::io
