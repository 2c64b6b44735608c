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
 * @file sweep.hpp
 * Evaluation of the closed forms over rectangular (eta, g) grids, per-column
 * extraction of the level-2 threshold, and the B_eta versus lost-photons
 * table.
 */
#pragma once

#include <string>
#include <vector>

namespace hybridwit {

struct SweepGrid {
    std::vector<double> eta_axis;
    std::vector<double> g_axis;
    double p = 1.0;

    /// `steps` evenly spaced points per axis, endpoints included.
    static SweepGrid uniform(double eta_min, double eta_max, int eta_steps,
                             double g_min, double g_max, int g_steps, double p = 1.0);

    /// Throws DomainError unless both axes are strictly ascending with at
    /// least two points, eta in (0, 1], g >= 0 and p in [0, 1].
    void validate() const;
};

struct SweepRecord {
    double eta = 0.0;
    double g = 0.0;
    double nbar = 0.0;
    /// Photons in the amplified injected polarization mode, 3 nbar + 1.
    double mean_n = 0.0;
    /// Photons summed over both polarization modes, 4 nbar + 1.
    double mean_n_total = 0.0;
    /// (1 - eta) mean_n.
    double lost_photons = 0.0;
    double L = 0.0;
    double B_eta = 0.0;
    double h = 0.0;
    double W_eta = 0.0;
    double wigner_origin = 0.0;
    /// max(0, -wigner_origin).
    double negativity = 0.0;
};

[[nodiscard]] SweepRecord evaluate_node(double eta, double g, double p = 1.0);

/// One record per node, ordered by (eta, g). threads = 0 picks the hardware
/// concurrency; the output does not depend on it.
[[nodiscard]] std::vector<SweepRecord> evaluate_grid(const SweepGrid &grid,
                                                     unsigned threads = 0);

enum class TestKind { chsh, witness };

[[nodiscard]] std::string to_string(TestKind kind);

struct ContourVertex {
    double eta = 0.0;
    double g = 0.0;
};

struct ContourLine {
    TestKind kind = TestKind::chsh;
    double level = 2.0;
    std::vector<ContourVertex> vertices;

    [[nodiscard]] bool empty() const noexcept { return vertices.empty(); }
};

/// Value of the optimal B (chsh) or W (witness) at one node.
[[nodiscard]] double test_parameter(TestKind kind, double eta, double g, double p);

/// For every eta column whose parameter falls through 2 between two g
/// nodes, bisects in g to `tol` and emits the crossing. Columns that stay on
/// one side of the level contribute nothing.
[[nodiscard]] ContourLine extract_contour(const SweepGrid &grid, TestKind kind,
                                          double tol = 1e-9);

struct Figure3Row {
    /// "B_eta" for the data curve, "B_LHV" for the reference level.
    std::string curve;
    double g = 0.0;
    double eta = 0.0;
    double lost_photons = 0.0;
    double B_eta = 0.0;
};

/// Rows of (lost_photons, B_eta) for every gain and eta sample, followed for
/// each gain by the constant reference rows at B = 2.
[[nodiscard]] std::vector<Figure3Row>
figure3_dataset(const std::vector<double> &gains,
                const std::vector<double> &eta_samples, double p = 1.0);

[[nodiscard]] std::vector<double> default_figure3_gains();

} // namespace hybridwit
