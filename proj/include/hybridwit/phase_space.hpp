// Copyright 2026 The hybridwit Authors
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

/**
 * @file phase_space.hpp
 * Closed-form Wigner functions of the amplified single-photon states and
 * the qubit-CV correlators built on them: lossless, after beam-splitter
 * loss, and with imperfect single-photon injection.
 *
 * The correlator at a macro-side point alpha_chi with polarizations
 * (chi; phi) is <sigma(phi) x Pi_chi(alpha_chi) x 1_chi_perp> on the
 * amplified singlet. Loss acts on the macro mode before the displaced
 * parity measurement.
 */
#pragma once

#include "hybridwit/core.hpp"
#include "hybridwit/quadrature.hpp"

namespace hybridwit {

/// A correlator value; construction enforces |value| <= 1.
class CorrelatorValue {
  public:
    explicit CorrelatorValue(double value);

    [[nodiscard]] double value() const noexcept { return value_; }
    operator double() const noexcept { return value_; } // NOLINT

  private:
    double value_;
};

/// Quadratures rotated by chi/2; the lossless correlator is a function of
/// these only.
struct RotatedQuadratures {
    double x_bar = 0.0;
    double p_bar = 0.0;
};

/// Amplitudes (alpha_phi, alpha_phi_perp) of the polarization pair phi.
struct ModeAmplitudes {
    Complex along;
    Complex across;
};

/// Which polarization carries the injected photon.
enum class PhotonBranch {
    injected,   ///< photon in phi, Wigner function W_phi
    orthogonal, ///< photon in phi_perp, Wigner function W_phi_perp
};

[[nodiscard]] RotatedQuadratures rotate_quadratures(const PhasePoint &point,
                                                    PolarizationAngle chi);

/// Re-expresses the amplitudes of the (chi, chi_perp) pair in the (phi,
/// phi_perp) pair.
[[nodiscard]] ModeAmplitudes rotate_mode_amplitudes(Complex a_chi,
                                                    Complex a_chi_perp,
                                                    PolarizationAngle chi,
                                                    PolarizationAngle phi);

/// Two-mode Wigner function of the amplified state whose photon sits in the
/// polarization selected by `branch`, at amplitudes (a_phi, a_phi_perp).
[[nodiscard]] double wigner_amplified_two_mode(const AmplifierParams &params,
                                               PolarizationAngle phi,
                                               Complex a_phi, Complex a_phi_perp,
                                               PhotonBranch branch);

/// <sigma(phi) x Pi_chi(alpha_chi) x Pi_chi_perp(alpha_chi_perp)> on the
/// lossless amplified singlet.
[[nodiscard]] double two_mode_correlator_q(const AmplifierParams &params,
                                           const PhasePoint &alpha_chi,
                                           const PhasePoint &alpha_chi_perp,
                                           PolarizationAngle chi,
                                           PolarizationAngle phi);

[[nodiscard]] CorrelatorValue correlator_lossless(const PhasePoint &point,
                                                  PolarizationAngle chi,
                                                  PolarizationAngle phi,
                                                  const AmplifierParams &params);

/// Damping of the origin correlator under loss:
/// eta [1 + 2 nbar (1 - eta)] / (1 + 4 eta (1 - eta) nbar)^(3/2).
[[nodiscard]] double loss_function(const AmplifierParams &params,
                                   const Channel &channel);

[[nodiscard]] CorrelatorValue correlator_lossy(const PhasePoint &point,
                                               PolarizationAngle chi,
                                               PolarizationAngle phi,
                                               const AmplifierParams &params,
                                               const Channel &channel);

/// Lossy correlator by direct 2-D Gaussian convolution of the lossless one.
/// Verification path only; throws ConvergenceError when panel doubling does
/// not settle within the given quadrature settings.
[[nodiscard]] quadrature::QuadratureResult
correlator_convolved(const PhasePoint &point, PolarizationAngle chi,
                     PolarizationAngle phi, const AmplifierParams &params,
                     const Channel &channel,
                     const quadrature::QuadratureSpec &spec = {});

/// p * correlator_lossy: the vacuum-injection branch carries no correlation.
[[nodiscard]] CorrelatorValue correlator_injected(const PhasePoint &point,
                                                  PolarizationAngle chi,
                                                  PolarizationAngle phi,
                                                  const AmplifierParams &params,
                                                  const Channel &channel);

/// Signed single-mode Wigner function at the origin of the amplified
/// injected polarization mode (squeezed single photon) after loss.
[[nodiscard]] double wigner_origin_lossy(const AmplifierParams &params,
                                         const Channel &channel);

/// Gaussian loss kernel K_eta(X, P; X', P') mapping a Wigner function at
/// (X', P') to the detected one at (X, P). Integrates to one over (X, P).
[[nodiscard]] double loss_kernel(const Channel &channel, double x, double p,
                                 double x_src, double p_src);

/// Reduced Wigner function of the amplified injected polarization mode
/// (squeezed single photon) before loss, as a function of the mode's own
/// quadratures.
[[nodiscard]] double wigner_injected_mode(const AmplifierParams &params,
                                          PolarizationAngle phi,
                                          const PhasePoint &point);

} // namespace hybridwit
