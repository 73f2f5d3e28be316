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

#include <string_view>

namespace unirel {

/// |r - 1| or |s| at or below this routes to the limiting formula.
inline constexpr double kBranchEps = 1e-9;

enum class Branch {
    kR1,   // Shannon / von Neumann / Kullback-Leibler / Umegaki
    kS0,   // Renyi
    kGen,  // two-parameter (r, s) form
};

std::string_view branch_name(Branch branch);

/// Informational labels for named specializations that share the kGen
/// formula: Tsallis at s = 1 and type-r at s = 1/r.
enum class Specialization {
    kNone,
    kShannon,
    kRenyi,
    kTsallis,
    kTypeR,
};

std::string_view specialization_name(Specialization spec);

/// Order r and degree s of the unified entropy family.
struct EntropyParams {
    double r = 1.0;
    double s = 0.0;

    constexpr EntropyParams() = default;
    constexpr EntropyParams(double order, double degree) : r(order), s(degree) {}

    Branch branch() const noexcept;
    Specialization specialization() const noexcept;
};

namespace detail {

/// -[(1-r)s]^{-1} (x^s - 1), evaluated as -expm1(s ln x) / ((1-r)s) so the
/// result stays accurate when s or 1-r is small. Requires x > 0.
double gen_divergence_from_overlap(double x, double r, double s);

/// -(1-r)^{-1} ln x. Requires x > 0.
double renyi_divergence_from_overlap(double x, double r);

}  // namespace detail

}  // namespace unirel
