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

#include <optional>
#include <span>

#include "unirel/entropy_params.hpp"
#include "unirel/extended_real.hpp"
#include "unirel/linalg.hpp"

namespace unirel::quantum {

using linalg::HermitianMatrix;
using linalg::SpectralDecomposition;
using linalg::Subsystem;

inline constexpr double kDefaultTraceTol = 1e-8;
/// Weight of an eigenvector on a kernel above which it counts as "outside".
inline constexpr double kSupportTol = 1e-8;
/// Overlaps at or below this take the disjoint-support branch.
inline constexpr double kOverlapZeroTol = 1e-12;
/// Overlap drift outside [0, 1] that is clamped back when 0 <= r <= 1.
inline constexpr double kOverlapClampDrift = 1e-10;

/// Positive semidefinite unit-trace Hermitian matrix with its spectral
/// decomposition cached at construction.
class DensityMatrix {
  public:
    const HermitianMatrix &matrix() const noexcept {
        return matrix_;
    }
    const SpectralDecomposition &spectral() const noexcept {
        return spectral_;
    }
    std::size_t dim() const noexcept {
        return matrix_.dim();
    }
    std::span<const double> eigenvalues() const noexcept {
        return spectral_.eigenvalues;
    }
    std::size_t rank() const noexcept {
        return spectral_.rank();
    }
    bool invertible() const noexcept {
        return rank() == dim();
    }

  private:
    friend DensityMatrix validate_state(const HermitianMatrix &h, double tol);
    DensityMatrix(HermitianMatrix m, SpectralDecomposition s) : matrix_(std::move(m)), spectral_(std::move(s)) {}

    HermitianMatrix matrix_;
    SpectralDecomposition spectral_;
};

/// Eigendecomposes, rejects eigenvalues below -1e-8 (kNotPositiveSemidefinite)
/// and traces off by more than tol (kTraceNotOne), then clamps the spectrum to
/// be nonnegative and renormalizes it to unit trace.
DensityMatrix validate_state(const HermitianMatrix &h, double tol = kDefaultTraceTol);

/// lambda rho + (1 - lambda) sigma.
DensityMatrix mix(const DensityMatrix &rho, const DensityMatrix &sigma, double lambda);
DensityMatrix tensor(const DensityMatrix &a, const DensityMatrix &b);
DensityMatrix marginal(const DensityMatrix &rho, std::size_t dim1, std::size_t dim2, Subsystem keep);

/// 1/2 ||rho - sigma||_1.
double trace_distance(const DensityMatrix &rho, const DensityMatrix &sigma);

/// P(r) = tr(rho^r) over the positive spectrum.
double power_trace(const DensityMatrix &rho, double r);

/// S(rho) for r = 1, (1-r)^{-1} ln P(r) for s = 0, otherwise
/// [(1-r)s]^{-1} (P(r)^s - 1). Throws kDomainError for r <= 0.
double quantum_unified_entropy(const DensityMatrix &rho, const EntropyParams &params);

/// tr(rho^r sigma^{1-r}) with rho^0 the support projection of rho.
/// Valid for 0 <= r <= 1, and for r > 1 when sigma is invertible
/// (kSigmaSingularForExtendedR otherwise).
double overlap(const DensityMatrix &rho, const DensityMatrix &sigma, double r);

struct DivergenceResult {
    ExtendedReal value;
    Branch branch = Branch::kGen;
    /// tr(rho^r sigma^{1-r}); absent on the R1 branch, which never forms it.
    std::optional<double> overlap;
};

/// E_r^s(rho || sigma).
///  - R1: Umegaki relative entropy (+inf when supp rho is not inside supp sigma).
///  - S0: -(1-r)^{-1} ln x, +inf when the overlap x vanishes.
///  - GEN: -[(1-r)s]^{-1} (x^s - 1). At x = 0 this is 1/((1-r)s) for s > 0
///    and +inf for s < 0, the limits of the formula as x -> 0+.
DivergenceResult quantum_unified_rel_entropy(const DensityMatrix &rho, const DensityMatrix &sigma,
                                             const EntropyParams &params);

/// The non-R1 branches evaluated from a precomputed overlap.
ExtendedReal rel_entropy_from_overlap(double x, const EntropyParams &params);

/// tr(rho ln rho) - tr(rho ln sigma), computed eigenbasis-to-eigenbasis with
/// weights |<p_i|q_j>|^2 so that ln of a singular sigma is never formed.
ExtendedReal umegaki_rel_entropy(const DensityMatrix &rho, const DensityMatrix &sigma);

/// Ker(rho) is contained in Ker(sigma), up to kSupportTol in squared weight.
bool kernel_inclusion(const DensityMatrix &rho, const DensityMatrix &sigma);

/// Explicit Tsallis form -(1-r)^{-1} (tr(rho^r sigma^{1-r}) - 1).
double tsallis_rel_entropy(const DensityMatrix &rho, const DensityMatrix &sigma, double r);

/// Explicit type-t form -(t-1)^{-1} [(tr(rho^{1/t} sigma^{1-1/t}))^t - 1].
double type_r_rel_entropy(const DensityMatrix &rho, const DensityMatrix &sigma, double t);

/// d/dr tr(rho^r sigma^{1-r}) = tr(rho^r (ln rho - ln sigma) sigma^{1-r}),
/// with logarithms taken on the supports.
double overlap_derivative(const DensityMatrix &rho, const DensityMatrix &sigma, double r);

/// dE_r^s/ds in closed form (requires a positive overlap and r != 1):
///   [-x^s ln(x) s - (1 - x^s)] / ((1-r) s^2), and -ln(x)^2 / (2(1-r)) at s = 0.
double rel_entropy_ds(const DensityMatrix &rho, const DensityMatrix &sigma, const EntropyParams &params);

/// dE_r^s/dr in closed form (requires a positive overlap and r != 1):
///   (1 - x^s) / (s (1-r)^2) - x^{s-1} x' / (1-r), and for s = 0
///   -ln(x) / (1-r)^2 - x' / ((1-r) x).
double rel_entropy_dr(const DensityMatrix &rho, const DensityMatrix &sigma, const EntropyParams &params);

}  // namespace unirel::quantum
