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

#include "hybridwit/phase_space.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace hybridwit {

namespace {

constexpr double kCorrelatorSlack = 1e-12;

// Squeezing coefficients of the amplified modes: cosh 2g and sinh 2g.
struct Squeeze {
    double ch;
    double sh;
};

Squeeze squeeze_of(const AmplifierParams &params) {
    const double g = params.gain();
    return {std::cosh(2.0 * g), std::sinh(2.0 * g)};
}

} // namespace

CorrelatorValue::CorrelatorValue(double value) : value_(value) {
    if (!(std::abs(value) <= 1.0 + kCorrelatorSlack)) {
        throw std::logic_error("correlator outside [-1, 1]: " +
                               std::to_string(value));
    }
    value_ = std::clamp(value, -1.0, 1.0);
}

RotatedQuadratures rotate_quadratures(const PhasePoint &point,
                                      PolarizationAngle chi) {
    const double c = std::cos(0.5 * chi.value());
    const double s = std::sin(0.5 * chi.value());
    return {point.x() * c - point.p() * s, point.x() * s + point.p() * c};
}

ModeAmplitudes rotate_mode_amplitudes(Complex a_chi, Complex a_chi_perp,
                                      PolarizationAngle chi,
                                      PolarizationAngle phi) {
    const double delta = angle_difference(chi, phi);
    const Complex phase = std::polar(1.0, 0.5 * delta);
    const Complex i{0.0, 1.0};
    const double c = std::cos(delta);
    const double s = std::sin(delta);
    return {phase * (a_chi * c - i * a_chi_perp * s),
            phase * (a_chi_perp * c - i * a_chi * s)};
}

double wigner_amplified_two_mode(const AmplifierParams &params,
                                 PolarizationAngle phi, Complex a_phi,
                                 Complex a_phi_perp, PhotonBranch branch) {
    const auto [ch, sh] = squeeze_of(params);
    const Complex rot = std::polar(1.0, phi.value());
    // Quadratic forms of the two squeezed modes; the injected polarization is
    // squeezed along the opposite axis to its partner.
    const double q_along =
        std::norm(a_phi) * ch - sh * (a_phi * a_phi * rot).real();
    const double q_across =
        std::norm(a_phi_perp) * ch + sh * (a_phi_perp * a_phi_perp * rot).real();
    const double photon = branch == PhotonBranch::injected ? q_along : q_across;
    return 4.0 / (kPi * kPi) * (4.0 * photon - 1.0) *
           std::exp(-2.0 * (q_along + q_across));
}

double two_mode_correlator_q(const AmplifierParams &params,
                             const PhasePoint &alpha_chi,
                             const PhasePoint &alpha_chi_perp,
                             PolarizationAngle chi, PolarizationAngle phi) {
    const ModeAmplitudes a = rotate_mode_amplitudes(
        alpha_chi.amplitude(), alpha_chi_perp.amplitude(), chi, phi);
    const double w_orth = wigner_amplified_two_mode(
        params, phi, a.along, a.across, PhotonBranch::orthogonal);
    const double w_inj = wigner_amplified_two_mode(params, phi, a.along,
                                                   a.across, PhotonBranch::injected);
    return kPi * kPi / 8.0 * (w_orth - w_inj);
}

CorrelatorValue correlator_lossless(const PhasePoint &point,
                                    PolarizationAngle chi,
                                    PolarizationAngle phi,
                                    const AmplifierParams &params) {
    const RotatedQuadratures r = rotate_quadratures(point, chi);
    const double g = params.gain();
    const double z =
        2.0 * (std::exp(-2.0 * g) * r.x_bar * r.x_bar +
               std::exp(2.0 * g) * r.p_bar * r.p_bar);
    const double angular = std::cos(2.0 * angle_difference(chi, phi));
    return CorrelatorValue(angular * std::exp(-z) * (1.0 - z));
}

double loss_function(const AmplifierParams &params, const Channel &channel) {
    const double nbar = mean_photon_pairs(params);
    const double eta = channel.eta();
    const double loss = 1.0 - eta;
    const double denom = 1.0 + 4.0 * eta * loss * nbar;
    return eta * (1.0 + 2.0 * nbar * loss) / (denom * std::sqrt(denom));
}

CorrelatorValue correlator_lossy(const PhasePoint &point, PolarizationAngle chi,
                                 PolarizationAngle phi,
                                 const AmplifierParams &params,
                                 const Channel &channel) {
    const RotatedQuadratures r = rotate_quadratures(point, chi);
    const double g = params.gain();
    const double eta = channel.eta();
    const double nbar = mean_photon_pairs(params);
    const double up = std::exp(2.0 * g);
    const double down = std::exp(-2.0 * g);
    const double m = eta * up + (1.0 - eta);
    const double n = eta * down + (1.0 - eta);
    const double denom = 1.0 + 4.0 * eta * (1.0 - eta) * nbar;
    const double x2 = r.x_bar * r.x_bar;
    const double p2 = r.p_bar * r.p_bar;
    const double envelope = std::exp(-2.0 * (x2 / m + p2 / n)) / std::sqrt(denom);
    const double bracket = 1.0 - (1.0 - eta) * (1.0 + 2.0 * eta * nbar) / denom -
                           2.0 * eta * (up * x2 / (m * m) + down * p2 / (n * n));
    const double angular = std::cos(2.0 * angle_difference(chi, phi));
    return CorrelatorValue(angular * envelope * bracket);
}

double loss_kernel(const Channel &channel, double x, double p, double x_src,
                   double p_src) {
    const double eta = channel.eta();
    const double loss = 1.0 - eta;
    const double root = std::sqrt(eta);
    const double dx = x - root * x_src;
    const double dp = p - root * p_src;
    return 2.0 / (kPi * loss) * std::exp(-2.0 * (dx * dx + dp * dp) / loss);
}

quadrature::QuadratureResult
correlator_convolved(const PhasePoint &point, PolarizationAngle chi,
                     PolarizationAngle phi, const AmplifierParams &params,
                     const Channel &channel,
                     const quadrature::QuadratureSpec &spec) {
    if (channel.lossless()) {
        return {correlator_lossless(point, chi, phi, params).value(), 0.0, 0, 1};
    }
    // Integrate in the chi/2-rotated frame: the kernel is isotropic, and the
    // lossless correlator is axis-aligned there.
    const RotatedQuadratures centre = rotate_quadratures(point, chi);
    const double g = params.gain();
    const double eta = channel.eta();
    const double root = std::sqrt(eta);
    const double angular = std::cos(2.0 * angle_difference(chi, phi));
    const double down = std::exp(-2.0 * g);
    const double up = std::exp(2.0 * g);

    const double wide = 6.0 * std::max(1.0, std::exp(g));
    const double narrow = 6.0;
    const double reach = 6.0 * std::sqrt((1.0 - eta) / eta);
    const quadrature::Box box{
        quadrature::intersect({-wide, wide}, {centre.x_bar / root - reach,
                                              centre.x_bar / root + reach}),
        quadrature::intersect({-narrow, narrow}, {centre.p_bar / root - reach,
                                                  centre.p_bar / root + reach}),
    };

    const auto integrand = [&](double u, double v) {
        const double z = 2.0 * (down * u * u + up * v * v);
        const double lossless = angular * (1.0 - z) * std::exp(-z);
        return lossless * loss_kernel(channel, centre.x_bar, centre.p_bar, u, v);
    };
    return quadrature::integrate_2d(integrand, box, spec);
}

CorrelatorValue correlator_injected(const PhasePoint &point,
                                    PolarizationAngle chi, PolarizationAngle phi,
                                    const AmplifierParams &params,
                                    const Channel &channel) {
    const double lossy = correlator_lossy(point, chi, phi, params, channel);
    return CorrelatorValue(params.injection() * lossy);
}

double wigner_injected_mode(const AmplifierParams &params, PolarizationAngle phi,
                            const PhasePoint &point) {
    const auto [ch, sh] = squeeze_of(params);
    const Complex a = point.amplitude();
    const double q =
        std::norm(a) * ch - sh * (a * a * std::polar(1.0, phi.value())).real();
    return 2.0 / kPi * (4.0 * q - 1.0) * std::exp(-2.0 * q);
}

double wigner_origin_lossy(const AmplifierParams &params,
                           const Channel &channel) {
    // Gaussian convolution of the squeezed single photon evaluated at the
    // origin; the integral factorizes along the squeezing axes.
    const double g = params.gain();
    const double eta = channel.eta();
    const double loss = 1.0 - eta;
    const double a = std::exp(-2.0 * g);
    const double b = std::exp(2.0 * g);
    const double ma = loss * a + eta;
    const double mb = loss * b + eta;
    return 2.0 / kPi * (loss * (a / ma + b / mb) - 1.0) / std::sqrt(ma * mb);
}

} // namespace hybridwit
