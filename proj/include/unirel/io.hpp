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

#include <filesystem>
#include <vector>

#include "json.hpp"
#include "unirel/channels.hpp"
#include "unirel/extended_real.hpp"
#include "unirel/linalg.hpp"
#include "unirel/properties.hpp"
#include "unirel/quantum.hpp"

namespace unirel::io {

using Json = nlohmann::ordered_json;

/// Reads and parses a JSON file. Throws kParseError.
Json read_json_file(const std::filesystem::path &path);

/// A JSON array of numbers. Throws kParseError on anything else.
std::vector<double> parse_weights(const Json &j);

/// {"dim": n, "entries": [[re, im], ...]} with n*n row-major pairs, or
/// {"rows": m, "cols": n, "entries": [...]} for rectangular matrices.
linalg::ComplexMatrix parse_matrix(const Json &j);
/// Square matrices are written with "dim", others with "rows" and "cols".
Json matrix_to_json(const linalg::ComplexMatrix &m);

/// {"dim_in": n, "dim_out": m, "kraus": [matrix, ...]}; validated.
channels::KrausChannel parse_channel(const Json &j);
Json channel_to_json(const channels::KrausChannel &phi);

/// Finite values as numbers, +inf as the string "inf".
Json extended_to_json(const ExtendedReal &x);
/// Like extended_to_json but also maps -inf to "-inf".
Json real_to_json(double x);

/// {"value": number|"inf", "branch": ..., "overlap": number|null}
Json divergence_to_json(const ExtendedReal &value, Branch branch, std::optional<double> overlap);

Json report_to_json(const properties::SuiteReport &report);

}  // namespace unirel::io
