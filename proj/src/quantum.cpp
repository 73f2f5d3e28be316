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

#include "unirel/quantum.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "unirel/errors.hpp"

namespace unirel::quantum {

namespace {

using linalg::ComplexMatrix;

void require_same_dim(const DensityMatrix &rho, const DensityMatrix &sigma) {
    if (rho.dim() != sigma.dim()) {
        throw Error(ErrorCode::kDimMismatch,
                    "states of dimension " + std::to_string(rho.dim()) + " and " + std::to_string(sigma.dim()));
    }
}

// w(i, j) = |<p_i|q_j>|^2 between the eigenbases of rho and sigma.
std::vector<std::vector<double>> eigenbasis_weights(const DensityMatrix &rho, const DensityMatrix &sigma) {
    const ComplexMatrix cross = rho.spectral().eigenvectors.adjoint() * sigma.spectral().eigenvectors;
    const std::size_t n = rho.dim();
    std::vector<std::vector<double>> w(n, std::vector<double>(n));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            w[i][j] = std::norm(cross(i, j));
        }
    }
    return w;
}

}  // namespace

DensityMatrix validate_state(const HermitianMatrix &h, double tol) {
    SpectralDecomposition spec = linalg::jacobi_eig(h);
    const double min_eig = spec.eigenvalues.back();
    if (min_eig < -linalg::kNegativeEigenvalueTol) {
        throw Error(ErrorCode::kNotPositiveSemidefinite, "smallest eigenvalue " + std::to_string(min_eig));
    }
    const double trace = h.trace();
    if (!(std::abs(trace - 1.0) <= tol)) {
        throw Error(ErrorCode::kTraceNotOne, "trace " + std::to_string(trace));
    }
    double total = 0.0;
    for (double &lambda : spec.eigenvalues) {
        lambda = std::max(lambda, 0.0);
        total += lambda;
    }
    for (double &lambda : spec.eigenvalues) {
        lambda /= total;
    }
    HermitianMatrix rebuilt = HermitianMatrix::symmetrized(spec.reconstruct());
    return DensityMatrix(std::move(rebuilt), std::move(spec));
}

DensityMatrix mix(const DensityMatrix &rho, const DensityMatrix &sigma, double lambda) {
    require_same_dim(rho, sigma);
    if (!(lambda >= 0.0 && lambda <= 1.0)) {
        throw Error(ErrorCode::kDomainError, "mixture weight outside [0, 1]");
    }
    return validate_state(lambda * rho.matrix() + (1.0 - lambda) * sigma.matrix());
}

DensityMatrix tensor(const DensityMatrix &a, const DensityMatrix &b) {
    return validate_state(linalg::tensor_product(a.matrix(), b.matrix()));
}

DensityMatrix marginal(const DensityMatrix &rho, std::size_t dim1, std::size_t dim2, Subsystem keep) {
    return validate_state(linalg::partial_trace(rho.matrix(), dim1, dim2, keep));
}

double trace_distance(const DensityMatrix &rho, const DensityMatrix &sigma) {
    require_same_dim(rho, sigma);
    const SpectralDecomposition diff = linalg::jacobi_eig(rho.matrix() - sigma.matrix());
    double total = 0.0;
    for (double lambda : diff.eigenvalues) {
        total += std::abs(lambda);
    }
    return 0.5 * total;
}

double power_trace(const DensityMatrix &rho, double r) {
    double total = 0.0;
    for (double lambda : rho.eigenvalues()) {
        if (lambda > 0.0) {
            total += std::pow(lambda, r);
        }
    }
    return total;
}

double quantum_unified_entropy(const DensityMatrix &rho, const EntropyParams &params) {
    if (!(params.r > 0.0)) {
        throw Error(ErrorCode::kDomainError, "order r must be > 0, got " + std::to_string(params.r));
    }
    switch (params.branch()) {
        case Branch::kR1: {
            double h = 0.0;
            for (double lambda : rho.eigenvalues()) {
                if (lambda > 0.0) {
                    h -= lambda * std::log(lambda);
                }
            }
            return h;
        }
        case Branch::kS0:
            return std::log(power_trace(rho, params.r)) / (1.0 - params.r);
        case Branch::kGen:
            return std::expm1(params.s * std::log(power_trace(rho, params.r))) / ((1.0 - params.r) * params.s);
    }
    return 0.0;
}

double overlap(const DensityMatrix &rho, const DensityMatrix &sigma, double r) {
    require_same_dim(rho, sigma);
    if (!(r >= 0.0)) {
        throw Error(ErrorCode::kDomainError, "order r must be >= 0, got " + std::to_string(r));
    }
    if (r > 1.0 && !sigma.invertible()) {
        throw Error(ErrorCode::kSigmaSingularForExtendedR,
                    "r = " + std::to_string(r) + " > 1 needs an invertible sigma");
    }
    const HermitianMatrix rho_pow = linalg::matrix_power(rho.spectral(), r);
    const HermitianMatrix sigma_pow = linalg::matrix_power(sigma.spectral(), 1.0 - r);
    double x = linalg::trace_product(rho_pow, sigma_pow);
    if (r <= 1.0) {
        if (x < 0.0 && x >= -kOverlapClampDrift) {
            x = 0.0;
        } else if (x > 1.0 && x <= 1.0 + kOverlapClampDrift) {
            x = 1.0;
        }
    }
    return x;
}

ExtendedReal rel_entropy_from_overlap(double x, const EntropyParams &params) {
    const double r = params.r;
    const double s = params.s;
    switch (params.branch()) {
        case Branch::kR1:
            throw Error(ErrorCode::kDomainError, "the r = 1 branch is not a function of the overlap");
        case Branch::kS0:
            if (x <= kOverlapZeroTol) {
                return ExtendedReal::infinity();
            }
            return detail::renyi_divergence_from_overlap(x, r);
        case Branch::kGen:
            if (x <= kOverlapZeroTol) {
                if (s > 0.0) {
                    return 1.0 / ((1.0 - r) * s);
                }
                return ExtendedReal::infinity();
            }
            return detail::gen_divergence_from_overlap(x, r, s);
    }
    return 0.0;
}

DivergenceResult quantum_unified_rel_entropy(const DensityMatrix &rho, const DensityMatrix &sigma,
                                             const EntropyParams &params) {
    require_same_dim(rho, sigma);
    DivergenceResult out;
    out.branch = params.branch();
    if (out.branch == Branch::kR1) {
        out.value = umegaki_rel_entropy(rho, sigma);
        return out;
    }
    const double x = overlap(rho, sigma, params.r);
    out.overlap = x;
    out.value = rel_entropy_from_overlap(x, params);
    return out;
}

ExtendedReal umegaki_rel_entropy(const DensityMatrix &rho, const DensityMatrix &sigma) {
    require_same_dim(rho, sigma);
    const auto w = eigenbasis_weights(rho, sigma);
    const auto lambdas = rho.eigenvalues();
    const auto mus = sigma.eigenvalues();
    double value = 0.0;
    for (std::size_t i = 0; i < lambdas.size(); ++i) {
        if (lambdas[i] <= 0.0) {
            continue;
        }
        double kernel_weight = 0.0;
        double cross = 0.0;
        for (std::size_t j = 0; j < mus.size(); ++j) {
            if (mus[j] > 0.0) {
                cross += w[i][j] * std::log(mus[j]);
            } else {
                kernel_weight += w[i][j];
            }
        }
        if (kernel_weight > kSupportTol) {
            return ExtendedReal::infinity();
        }
        value += lambdas[i] * (std::log(lambdas[i]) - cross);
    }
    return value;
}

bool kernel_inclusion(const DensityMatrix &rho, const DensityMatrix &sigma) {
    require_same_dim(rho, sigma);
    const auto w = eigenbasis_weights(rho, sigma);
    const auto lambdas = rho.eigenvalues();
    const auto mus = sigma.eigenvalues();
    for (std::size_t i = 0; i < lambdas.size(); ++i) {
        if (lambdas[i] > 0.0) {
            continue;
        }
        double support_weight = 0.0;
        for (std::size_t j = 0; j < mus.size(); ++j) {
            if (mus[j] > 0.0) {
                support_weight += w[i][j];
            }
        }
        if (support_weight > kSupportTol) {
            return false;
        }
    }
    return true;
}

double tsallis_rel_entropy(const DensityMatrix &rho, const DensityMatrix &sigma, double r) {
    return -(overlap(rho, sigma, r) - 1.0) / (1.0 - r);
}

double type_r_rel_entropy(const DensityMatrix &rho, const DensityMatrix &sigma, double t) {
    if (!(t > 0.0)) {
        throw Error(ErrorCode::kDomainError, "type-r parameter must be > 0");
    }
    return -(std::pow(overlap(rho, sigma, 1.0 / t), t) - 1.0) / (t - 1.0);
}

double overlap_derivative(const DensityMatrix &rho, const DensityMatrix &sigma, double r) {
    require_same_dim(rho, sigma);
    if (r > 1.0 && !sigma.invertible()) {
        throw Error(ErrorCode::kSigmaSingularForExtendedR, "r > 1 needs an invertible sigma");
    }
    const auto power_log = [](double p) {
        return [p](double lambda) { return lambda > 0.0 ? std::pow(lambda, p) * std::log(lambda) : 0.0; };
    };
    const HermitianMatrix rho_pow_log = linalg::spectral_function(rho.spectral(), power_log(r));
    const HermitianMatrix rho_pow = linalg::matrix_power(rho.spectral(), r);
    const HermitianMatrix sigma_pow = linalg::matrix_power(sigma.spectral(), 1.0 - r);
    const HermitianMatrix sigma_pow_log = linalg::spectral_function(sigma.spectral(), power_log(1.0 - r));
    return linalg::trace_product(rho_pow_log, sigma_pow) - linalg::trace_product(rho_pow, sigma_pow_log);
}

double rel_entropy_ds(const DensityMatrix &rho, const DensityMatrix &sigma, const EntropyParams &params) {
    const double r = params.r;
    const double s = params.s;
    if (params.branch() == Branch::kR1) {
        return 0.0;
    }
    const double x = overlap(rho, sigma, r);
    if (x <= kOverlapZeroTol) {
        throw Error(ErrorCode::kDomainError, "derivative needs a positive overlap");
    }
    const double log_x = std::log(x);
    if (params.branch() == Branch::kS0) {
        return -log_x * log_x / (2.0 * (1.0 - r));
    }
    const double x_s = std::exp(s * log_x);
    return (-x_s * log_x * s + std::expm1(s * log_x)) / ((1.0 - r) * s * s);
}

double rel_entropy_dr(const DensityMatrix &rho, const DensityMatrix &sigma, const EntropyParams &params) {
    const double r = params.r;
    const double s = params.s;
    if (params.branch() == Branch::kR1) {
        throw Error(ErrorCode::kDomainError, "r-derivative is not defined on the r = 1 branch");
    }
    const double x = overlap(rho, sigma, r);
    if (x <= kOverlapZeroTol) {
        throw Error(ErrorCode::kDomainError, "derivative needs a positive overlap");
    }
    const double dx = overlap_derivative(rho, sigma, r);
    const double u = 1.0 - r;
    if (params.branch() == Branch::kS0) {
        return -std::log(x) / (u * u) - dx / (u * x);
    }
    return -std::expm1(s * std::log(x)) / (s * u * u) - std::pow(x, s - 1.0) * dx / u;
}

}  // namespace unirel::quantum
