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

#include "hybridwit/inequality.hpp"

#include <array>
#include <cmath>
#include <stdexcept>

#include "hybridwit/phase_space.hpp"

namespace hybridwit {

namespace {

// Below this transmittivity 4 sqrt(2) L(g, eta) < 2 for every gain, so
// neither test can be violated, and L need not be monotone in g.
constexpr double kMonotoneEtaFloor = 1.0 / 3.0;

// Nodes per unit eta in the violation scan. eta = 1/2 is always a node.
constexpr int kEtaScanNodes = 2000;

constexpr int kMaxBisections = 400;

double optimal_chsh_value(double g, double eta, double p) {
    return 2.0 * kSqrt2 * p * loss_function(AmplifierParams(g), Channel(eta));
}

double h_of(double eta) { return eta > 0.5 ? 1.0 / eta : 2.0; }

double optimal_witness_value(double g, double eta, double p) {
    return h_of(eta) * optimal_chsh_value(g, eta, p);
}

// Bisects f on [lo, hi] where f(lo) <= 0 < f(hi) or the reverse. Stops once
// the bracket is below tol and |f(mid)| < tol.
template <typename F>
double bisect(const F &f, double lo, double hi, bool lo_positive, double tol) {
    double mid = 0.5 * (lo + hi);
    for (int i = 0; i < kMaxBisections; ++i) {
        mid = 0.5 * (lo + hi);
        if (!(lo < mid && mid < hi)) {
            break;
        }
        const double value = f(mid);
        if (hi - lo < tol && std::abs(value) < tol) {
            break;
        }
        if ((value > 0.0) == lo_positive) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    return mid;
}

template <typename F>
Threshold smallest_violating_eta(const F &parameter, double tol) {
    const auto excess = [&](double eta) { return parameter(eta) - 2.0; };
    double previous = 0.0; // parameter -> 0 as eta -> 0
    for (int i = 1; i <= kEtaScanNodes; ++i) {
        const double eta = static_cast<double>(i) / kEtaScanNodes;
        if (excess(eta) > 0.0) {
            const double root = bisect(excess, previous, eta, false, tol);
            return {ThresholdOutcome::found, root, excess(root)};
        }
        previous = eta;
    }
    return {ThresholdOutcome::never_violated};
}

template <typename F>
Threshold gain_crossing(const F &parameter, double eta,
                        const ThresholdOptions &options) {
    if (eta < kMonotoneEtaFloor) {
        return {ThresholdOutcome::never_violated};
    }
    if (!loss_function_monotone_in_gain()) {
        throw std::logic_error("loss function is not monotone in g on the check grid");
    }
    const auto excess = [&](double g) { return parameter(g) - 2.0; };
    if (excess(0.0) <= 0.0) {
        return {ThresholdOutcome::never_violated};
    }
    if (excess(options.g_max) > 0.0) {
        return {ThresholdOutcome::always_violated};
    }
    const double root = bisect(excess, 0.0, options.g_max, true, options.tol);
    return {ThresholdOutcome::found, root, excess(root)};
}

void check_tol(const ThresholdOptions &options) {
    if (!(options.tol > 0.0)) {
        throw DomainError("tol", "tolerance must be > 0");
    }
    if (!(options.g_max > 0.0) || !std::isfinite(options.g_max)) {
        throw DomainError("g_max", "gain ceiling must be finite and > 0");
    }
}

} // namespace

TestResult TestResult::of(double value) {
    const double margin = std::abs(value) - kSeparableBound;
    return {value, margin > 0.0, margin};
}

MeasurementSettings optimal_settings() {
    MeasurementSettings s;
    s.chi = PolarizationAngle::radians(0.0);
    s.chi_prime = PolarizationAngle::radians(-kPi / 4.0);
    s.phi = PolarizationAngle::radians(-3.0 * kPi / 8.0);
    s.phi_prime = PolarizationAngle::radians(-kPi / 8.0);
    s.alpha = PhasePoint::origin();
    s.alpha_prime = PhasePoint::origin();
    return s;
}

TestResult chsh_parameter(const MeasurementSettings &s,
                          const AmplifierParams &params,
                          const Channel &channel) {
    const auto c = [&](const PhasePoint &a, PolarizationAngle chi,
                       PolarizationAngle phi) {
        return correlator_injected(a, chi, phi, params, channel).value();
    };
    const double b = c(s.alpha_prime, s.chi_prime, s.phi_prime) +
                     c(s.alpha_prime, s.chi_prime, s.phi) +
                     c(s.alpha, s.chi, s.phi_prime) - c(s.alpha, s.chi, s.phi);
    return TestResult::of(b);
}

TestResult chsh_parameter_optimal(const AmplifierParams &params,
                                  const Channel &channel) {
    return TestResult::of(2.0 * kSqrt2 * params.injection() *
                          loss_function(params, channel));
}

WitnessCorrection witness_correction(const Channel &channel) {
    return {h_of(channel.eta())};
}

TestResult witness_parameter(const MeasurementSettings &settings,
                             const AmplifierParams &params,
                             const Channel &channel) {
    return TestResult::of(witness_correction(channel).h *
                          chsh_parameter(settings, params, channel).value);
}

TestResult witness_parameter_optimal(const AmplifierParams &params,
                                     const Channel &channel) {
    return TestResult::of(witness_correction(channel).h *
                          chsh_parameter_optimal(params, channel).value);
}

Threshold eta_threshold_chsh(const AmplifierParams &params,
                             const ThresholdOptions &options) {
    check_tol(options);
    return smallest_violating_eta(
        [&](double eta) {
            return optimal_chsh_value(params.gain(), eta, params.injection());
        },
        options.tol);
}

Threshold gain_threshold_chsh(const Channel &channel, double p,
                              const ThresholdOptions &options) {
    check_tol(options);
    const double eta = channel.eta();
    (void)AmplifierParams(0.0, p); // validates p
    return gain_crossing(
        [&](double g) { return optimal_chsh_value(g, eta, p); }, eta, options);
}

Threshold eta_threshold_witness(const AmplifierParams &params,
                                const ThresholdOptions &options) {
    check_tol(options);
    return smallest_violating_eta(
        [&](double eta) {
            return optimal_witness_value(params.gain(), eta, params.injection());
        },
        options.tol);
}

Threshold gain_threshold_witness(const Channel &channel, double p,
                                 const ThresholdOptions &options) {
    check_tol(options);
    const double eta = channel.eta();
    (void)AmplifierParams(0.0, p);
    return gain_crossing(
        [&](double g) { return optimal_witness_value(g, eta, p); }, eta, options);
}

bool loss_function_monotone_in_gain() {
    static const bool monotone = [] {
        constexpr std::array<double, 9> etas{kMonotoneEtaFloor, 0.4, 0.5, 0.6, 0.7,
                                             0.8, 0.9, 0.95, 0.99};
        for (double eta : etas) {
            double previous = loss_function(AmplifierParams(0.0), Channel(eta));
            for (int i = 1; i <= 100; ++i) {
                const double current =
                    loss_function(AmplifierParams(0.05 * i), Channel(eta));
                if (!(current < previous)) {
                    return false;
                }
                previous = current;
            }
        }
        return true;
    }();
    return monotone;
}

} // namespace hybridwit
