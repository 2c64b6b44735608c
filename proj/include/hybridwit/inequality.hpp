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
 * @file inequality.hpp
 * CHSH-type parameter B, the loss-compensated witness W_eta = h(eta) B_eta,
 * the canonical optimal settings, and the violation thresholds in eta and g.
 */
#pragma once

#include <limits>

#include "hybridwit/core.hpp"

namespace hybridwit {

/// Value of B or W against the separable bound 2.
struct TestResult {
    double value = 0.0;
    bool violated = false;
    /// |value| - 2; positive exactly when violated.
    double margin = 0.0;

    static TestResult of(double value);
};

/// Loss-compensation factor of the witness observable
/// O(alpha; eta) = h Pi(alpha) + (1 - h).
struct WitnessCorrection {
    double h = 1.0;
};

[[nodiscard]] MeasurementSettings optimal_settings();

[[nodiscard]] TestResult chsh_parameter(const MeasurementSettings &settings,
                                        const AmplifierParams &params,
                                        const Channel &channel);

/// 2 sqrt(2) p L(g, eta): B at the optimal settings without evaluating the
/// four correlators.
[[nodiscard]] TestResult chsh_parameter_optimal(const AmplifierParams &params,
                                                const Channel &channel);

/// h = 1/eta for eta > 1/2, h = 2 otherwise.
[[nodiscard]] WitnessCorrection witness_correction(const Channel &channel);

[[nodiscard]] TestResult witness_parameter(const MeasurementSettings &settings,
                                           const AmplifierParams &params,
                                           const Channel &channel);

[[nodiscard]] TestResult witness_parameter_optimal(const AmplifierParams &params,
                                                   const Channel &channel);

enum class ThresholdOutcome {
    found,
    /// No violation anywhere in the searched range.
    never_violated,
    /// Violation persists up to the end of the searched range.
    always_violated,
};

struct Threshold {
    ThresholdOutcome outcome = ThresholdOutcome::never_violated;
    double value = std::numeric_limits<double>::quiet_NaN();
    /// Target-equation residual (parameter - 2) at value.
    double residual = std::numeric_limits<double>::quiet_NaN();

    [[nodiscard]] bool found() const noexcept {
        return outcome == ThresholdOutcome::found;
    }
};

struct ThresholdOptions {
    double tol = 1e-9;
    double g_max = 5.0;
};

/// Smallest eta at which the optimal B exceeds 2.
[[nodiscard]] Threshold eta_threshold_chsh(const AmplifierParams &params,
                                           const ThresholdOptions &options = {});

/// Gain at which the optimal B drops to 2 for fixed eta and p.
[[nodiscard]] Threshold gain_threshold_chsh(const Channel &channel, double p,
                                            const ThresholdOptions &options = {});

/// Smallest eta at which the optimal W exceeds 2. The violating set need
/// not be an interval: the low-eta branch can open an island around
/// eta = 1/2 that is detached from the high-eta region.
[[nodiscard]] Threshold eta_threshold_witness(const AmplifierParams &params,
                                              const ThresholdOptions &options = {});

/// Gain at which the optimal W drops to 2 for fixed eta and p.
[[nodiscard]] Threshold gain_threshold_witness(const Channel &channel, double p,
                                               const ThresholdOptions &options = {});

/// True when L(g, eta) is strictly decreasing in g along a coarse grid with
/// eta in [1/3, 1). Checked once, before the first gain bisection.
[[nodiscard]] bool loss_function_monotone_in_gain();

} // namespace hybridwit
