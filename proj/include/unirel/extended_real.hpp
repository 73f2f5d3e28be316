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

#include <compare>
#include <string>

namespace unirel {

/// A finite real or +inf. Divergences between states with incompatible
/// supports are infinite; only comparison is defined on the infinite value,
/// so any attempt to read it as a number throws kInfiniteArithmetic.
class ExtendedReal {
  public:
    constexpr ExtendedReal() = default;
    constexpr ExtendedReal(double value) : value_(value) {}  // NOLINT(google-explicit-constructor)

    static constexpr ExtendedReal infinity() {
        ExtendedReal out;
        out.infinite_ = true;
        return out;
    }

    constexpr bool is_finite() const noexcept {
        return !infinite_;
    }
    constexpr bool is_infinite() const noexcept {
        return infinite_;
    }

    double value() const;

    /// Finite value, or +HUGE_VAL for +inf. For reporting only.
    double as_double() const noexcept;

    std::string to_string(int precision = 12) const;

    friend constexpr bool operator==(const ExtendedReal &a, const ExtendedReal &b) {
        if (a.infinite_ || b.infinite_) {
            return a.infinite_ == b.infinite_;
        }
        return a.value_ == b.value_;
    }

    friend constexpr std::partial_ordering operator<=>(const ExtendedReal &a, const ExtendedReal &b) {
        if (a.infinite_ && b.infinite_) {
            return std::partial_ordering::equivalent;
        }
        if (a.infinite_) {
            return std::partial_ordering::greater;
        }
        if (b.infinite_) {
            return std::partial_ordering::less;
        }
        return a.value_ <=> b.value_;
    }

  private:
    double value_ = 0.0;
    bool infinite_ = false;
};

}  // namespace unirel
