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

#include "unirel/entropy_params.hpp"

#include <cmath>

namespace unirel {

std::string_view branch_name(Branch branch) {
    switch (branch) {
        case Branch::kR1:
            return "R1";
        case Branch::kS0:
            return "S0";
        case Branch::kGen:
            return "GEN";
    }
    return "?";
}

std::string_view specialization_name(Specialization spec) {
    switch (spec) {
        case Specialization::kNone:
            return "unified";
        case Specialization::kShannon:
            return "shannon";
        case Specialization::kRenyi:
            return "renyi";
        case Specialization::kTsallis:
            return "tsallis";
        case Specialization::kTypeR:
            return "type_r";
    }
    return "?";
}

Branch EntropyParams::branch() const noexcept {
    if (std::abs(r - 1.0) <= kBranchEps) {
        return Branch::kR1;
    }
    if (std::abs(s) <= kBranchEps) {
        return Branch::kS0;
    }
    return Branch::kGen;
}

Specialization EntropyParams::specialization() const noexcept {
    switch (branch()) {
        case Branch::kR1:
            return Specialization::kShannon;
        case Branch::kS0:
            return Specialization::kRenyi;
        case Branch::kGen:
            break;
    }
    if (std::abs(s - 1.0) <= kBranchEps) {
        return Specialization::kTsallis;
    }
    if (r > 0.0 && std::abs(s - 1.0 / r) <= kBranchEps) {
        return Specialization::kTypeR;
    }
    return Specialization::kNone;
}

namespace detail {

double gen_divergence_from_overlap(double x, double r, double s) {
    return -std::expm1(s * std::log(x)) / ((1.0 - r) * s);
}

double renyi_divergence_from_overlap(double x, double r) {
    return -std::log(x) / (1.0 - r);
}

}  // namespace detail

}  // namespace unirel
