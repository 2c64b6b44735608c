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
 * @file core.hpp
 * Domain types shared by every module: amplifier parameters, the loss
 * channel, phase-space points, equatorial polarization angles and the
 * four-setting tuple of a CHSH-type evaluation.
 *
 * Conventions used throughout the library:
 *  - complex amplitude alpha = X + iP;
 *  - Wigner functions integrate to one over dX dP, so the vacuum reads
 *    (2/pi) exp(-2|alpha|^2) and <Pi(alpha)> = (pi/2) W(alpha);
 *  - angles are radians.
 */
#pragma once

#include <complex>
#include <numbers>
#include <stdexcept>
#include <string>

namespace hybridwit {

using Complex = std::complex<double>;

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kSqrt2 = std::numbers::sqrt2;
inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

/// Separable / local-realistic bound shared by the CHSH parameter and the
/// witness.
inline constexpr double kSeparableBound = 2.0;

/// Raised when an input lies outside the domain of a type or operation. The
/// message is prefixed with the offending field name.
class DomainError : public std::invalid_argument {
  public:
    DomainError(std::string field, const std::string &message);
    [[nodiscard]] const std::string &field() const noexcept { return field_; }

  private:
    std::string field_;
};

/// Raised when a numerical procedure fails its own convergence rule.
class ConvergenceError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Gain g of the parametric amplifier and single-photon injection
/// efficiency p.
class AmplifierParams {
  public:
    explicit AmplifierParams(double gain, double injection = 1.0);

    [[nodiscard]] double gain() const noexcept { return gain_; }
    [[nodiscard]] double injection() const noexcept { return injection_; }

    friend bool operator==(const AmplifierParams &,
                           const AmplifierParams &) = default;

  private:
    double gain_;
    double injection_;
};

/// Beam-splitter loss of transmittivity eta in (0, 1].
class Channel {
  public:
    explicit Channel(double eta);

    [[nodiscard]] double eta() const noexcept { return eta_; }
    [[nodiscard]] bool lossless() const noexcept { return eta_ == 1.0; }

    static Channel ideal() { return Channel(1.0); }

    friend bool operator==(const Channel &, const Channel &) = default;

  private:
    double eta_;
};

/// Quadrature pair (X, P).
class PhasePoint {
  public:
    PhasePoint() = default;
    PhasePoint(double x, double p);

    [[nodiscard]] double x() const noexcept { return x_; }
    [[nodiscard]] double p() const noexcept { return p_; }
    [[nodiscard]] Complex amplitude() const noexcept { return {x_, p_}; }

    static PhasePoint origin() { return {}; }
    static PhasePoint from_amplitude(Complex alpha) {
        return {alpha.real(), alpha.imag()};
    }

    friend bool operator==(const PhasePoint &, const PhasePoint &) = default;

  private:
    double x_ = 0.0;
    double p_ = 0.0;
};

/// Equatorial polarization phase, stored reduced to [0, 2pi).
class PolarizationAngle {
  public:
    PolarizationAngle() = default;

    static PolarizationAngle radians(double theta);
    static PolarizationAngle degrees(double theta);

    [[nodiscard]] double value() const noexcept { return theta_; }

    friend bool operator==(const PolarizationAngle &,
                           const PolarizationAngle &) = default;

  private:
    explicit PolarizationAngle(double reduced) : theta_(reduced) {}
    double theta_ = 0.0;
};

/// Difference chi - phi in radians (not reduced).
[[nodiscard]] inline double angle_difference(PolarizationAngle chi,
                                             PolarizationAngle phi) noexcept {
    return chi.value() - phi.value();
}

/// Settings of one CHSH-type evaluation: micro-side polarizations (phi,
/// phi'), macro-side polarizations (chi, chi') and the phase-space points
/// (alpha, alpha') probed on the macro side.
struct MeasurementSettings {
    PolarizationAngle phi;
    PolarizationAngle phi_prime;
    PolarizationAngle chi;
    PolarizationAngle chi_prime;
    PhasePoint alpha;
    PhasePoint alpha_prime;

    friend bool operator==(const MeasurementSettings &,
                           const MeasurementSettings &) = default;
};

/// Mean number of photon pairs, sinh^2 g.
[[nodiscard]] double mean_photon_pairs(const AmplifierParams &params);

/// Mean photon number of the amplified injected polarization mode, 3 sinh^2 g + 1.
[[nodiscard]] double mean_macro_photons(const AmplifierParams &params);

/// Mean photon number summed over both polarization modes, 4 sinh^2 g + 1.
[[nodiscard]] double mean_total_photons(const AmplifierParams &params);

} // namespace hybridwit
