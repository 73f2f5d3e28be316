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

// 50-digit reference values produced by tools/gen_oracles.py.
// RHO = [[0.7, 0.2+0.1i], [0.2-0.1i, 0.3]], SIGMA = [[0.4, -0.05+0.15i], [-0.05-0.15i, 0.6]].

namespace unirel::oracle {

inline constexpr double kOverlapR03 = 0.92712610977004010146;
inline constexpr double kOverlapR2 = 1.7209302325581395349;
inline constexpr double kUmegaki = 0.33121781587809545687;
inline constexpr double kGenR03Sm1 = 0.11228845393772064633;
inline constexpr double kGenR03S05 = 0.10607462711183124122;
inline constexpr double kRenyiR06 = 0.21043484386705345726;
inline constexpr double kGenR2S05 = 0.62368460952008447374;
inline constexpr double kVonNeumann = 0.50040242353818787953;
inline constexpr double kEntropyR3S2 = 0.1824;
inline constexpr double kSqrtEighthPlusSqrtThreeEighths = 0.96592582628906828675;
inline constexpr double kHalfLogFourThirds = 0.14384103622589046372;
inline constexpr double kLog2 = 0.69314718055994530942;

}  // namespace unirel::oracle
