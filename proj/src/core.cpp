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

#include "hybridwit/core.hpp"

#include <cmath>

namespace hybridwit {

DomainError::DomainError(std::string field, const std::string &message)
    : std::invalid_argument(field + ": " + message), field_(std::move(field)) {}

AmplifierParams::AmplifierParams(double gain, double injection)
    : gain_(gain), injection_(injection) {
    if (!std::isfinite(gain) || gain < 0.0) {
        throw DomainError("g", "gain must be finite and >= 0");
    }
    if (!std::isfinite(injection) || injection < 0.0 || injection > 1.0) {
        throw DomainError("p", "injection efficiency must lie in [0, 1]");
    }
}

Channel::Channel(double eta) : eta_(eta) {
    if (!std::isfinite(eta) || eta <= 0.0 || eta > 1.0) {
        throw DomainError("eta", "transmittivity must lie in (0, 1]");
    }
}

PhasePoint::PhasePoint(double x, double p) : x_(x), p_(p) {
    if (!std::isfinite(x)) {
        throw DomainError("x", "quadrature must be finite");
    }
    if (!std::isfinite(p)) {
        throw DomainError("p_quad", "quadrature must be finite");
    }
}

PolarizationAngle PolarizationAngle::radians(double theta) {
    if (!std::isfinite(theta)) {
        throw DomainError("angle", "polarization angle must be finite");
    }
    double reduced = std::fmod(theta, kTwoPi);
    if (reduced < 0.0) {
        reduced += kTwoPi;
    }
    if (reduced >= kTwoPi) {
        reduced = 0.0;
    }
    return PolarizationAngle(reduced);
}

PolarizationAngle PolarizationAngle::degrees(double theta) {
    return radians(theta * kPi / 180.0);
}

double mean_photon_pairs(const AmplifierParams &params) {
    const double s = std::sinh(params.gain());
    return s * s;
}

double mean_macro_photons(const AmplifierParams &params) {
    return 3.0 * mean_photon_pairs(params) + 1.0;
}

double mean_total_photons(const AmplifierParams &params) {
    return 4.0 * mean_photon_pairs(params) + 1.0;
}

} // namespace hybridwit
