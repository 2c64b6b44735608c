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
 * @file quadrature.hpp
 * Tensor-product composite Gauss-Legendre integration over rectangles.
 * Only the verification paths use it (convolution and closure checks); the
 * closed forms never integrate numerically.
 */
#pragma once

#include <functional>
#include <vector>

namespace hybridwit::quadrature {

struct Interval {
    double lo = 0.0;
    double hi = 0.0;

    [[nodiscard]] double width() const noexcept { return hi - lo; }
    [[nodiscard]] bool empty() const noexcept { return !(hi > lo); }
};

struct Box {
    Interval x;
    Interval y;
};

/// Intersection of two intervals; empty when they do not overlap.
[[nodiscard]] Interval intersect(const Interval &a, const Interval &b);

struct QuadratureSpec {
    /// Stop once doubling the panel count changes the result by less than
    /// max(rel_tol * |I|, abs_tol).
    double rel_tol = 1e-6;
    double abs_tol = 1e-12;
    int initial_panels = 2;
    int max_panels = 1024;
};

struct QuadratureResult {
    double value = 0.0;
    /// |I(2n) - I(n)| at the accepted level.
    double change = 0.0;
    int panels = 0;
    long evaluations = 0;
};

/// Nodes and weights of a composite 20-point Gauss-Legendre rule.
struct Rule1d {
    std::vector<double> nodes;
    std::vector<double> weights;
};

[[nodiscard]] Rule1d composite_gauss_legendre(const Interval &range, int panels);

using Integrand2d = std::function<double(double, double)>;

/// Fixed rule with the given number of panels per axis.
[[nodiscard]] double integrate_2d_fixed(const Integrand2d &f, const Box &box,
                                        int panels_x, int panels_y);

/// Doubles the panel count per axis until the change falls under the
/// tolerance. Throws ConvergenceError when max_panels is reached first.
[[nodiscard]] QuadratureResult integrate_2d(const Integrand2d &f,
                                            const Box &box,
                                            const QuadratureSpec &spec = {});

} // namespace hybridwit::quadrature
