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

#include <complex>
#include <initializer_list>
#include <vector>

#include "gtest/gtest.h"
#include "unirel/classical.hpp"
#include "unirel/errors.hpp"
#include "unirel/linalg.hpp"
#include "unirel/quantum.hpp"

namespace unirel::testing {

using linalg::Complex;
using linalg::ComplexMatrix;
using linalg::HermitianMatrix;

template <typename F>
void expect_error(ErrorCode code, F &&f) {
    try {
        f();
        ADD_FAILURE() << "expected " << error_code_name(code) << ", nothing thrown";
    } catch (const Error &e) {
        EXPECT_EQ(e.code(), code) << e.what();
    }
}

inline classical::ProbDist dist(std::initializer_list<double> w) {
    return classical::validate_dist(std::vector<double>(w));
}

inline ComplexMatrix matrix(std::size_t rows, std::size_t cols, std::initializer_list<Complex> entries) {
    return ComplexMatrix(rows, cols, std::vector<Complex>(entries));
}

inline HermitianMatrix hermitian(std::size_t dim, std::initializer_list<Complex> entries) {
    return HermitianMatrix(matrix(dim, dim, entries));
}

inline HermitianMatrix diag(std::initializer_list<double> values) {
    const std::vector<double> v(values);
    return HermitianMatrix::diagonal(v);
}

inline quantum::DensityMatrix diag_state(std::initializer_list<double> values) {
    return quantum::validate_state(diag(values));
}

inline quantum::DensityMatrix oracle_rho() {
    return quantum::validate_state(hermitian(2, {{0.7, 0.0}, {0.2, 0.1}, {0.2, -0.1}, {0.3, 0.0}}));
}

inline quantum::DensityMatrix oracle_sigma() {
    return quantum::validate_state(hermitian(2, {{0.4, 0.0}, {-0.05, 0.15}, {-0.05, -0.15}, {0.6, 0.0}}));
}

}  // namespace unirel::testing
