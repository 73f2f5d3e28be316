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

#include "unirel/extended_real.hpp"

#include <cstdio>
#include <limits>

#include "unirel/errors.hpp"

namespace unirel {

double ExtendedReal::value() const {
    if (infinite_) {
        throw Error(ErrorCode::kInfiniteArithmetic, "value requested from +inf");
    }
    return value_;
}

double ExtendedReal::as_double() const noexcept {
    return infinite_ ? std::numeric_limits<double>::infinity() : value_;
}

std::string ExtendedReal::to_string(int precision) const {
    if (infinite_) {
        return "inf";
    }
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.*g", precision, value_);
    return buf;
}

}  // namespace unirel
