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

#include "hybridwit/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include <boost/math/quadrature/gauss.hpp>

#include "hybridwit/core.hpp"

namespace hybridwit::quadrature {

namespace {

constexpr unsigned kOrder = 20;
using Gauss = boost::math::quadrature::gauss<double, kOrder>;

} // namespace

Interval intersect(const Interval &a, const Interval &b) {
    return {std::max(a.lo, b.lo), std::min(a.hi, b.hi)};
}

Rule1d composite_gauss_legendre(const Interval &range, int panels) {
    Rule1d rule;
    if (range.empty() || panels < 1) {
        return rule;
    }
    // Boost stores the non-negative half of the symmetric rule.
    const auto &abscissa = Gauss::abscissa();
    const auto &weights = Gauss::weights();
    const double h = range.width() / panels;
    rule.nodes.reserve(static_cast<std::size_t>(panels) * kOrder);
    rule.weights.reserve(static_cast<std::size_t>(panels) * kOrder);
    for (int k = 0; k < panels; ++k) {
        const double mid = range.lo + (k + 0.5) * h;
        const double half = 0.5 * h;
        for (std::size_t i = 0; i < abscissa.size(); ++i) {
            rule.nodes.push_back(mid + half * abscissa[i]);
            rule.weights.push_back(half * weights[i]);
            if (abscissa[i] != 0.0) {
                rule.nodes.push_back(mid - half * abscissa[i]);
                rule.weights.push_back(half * weights[i]);
            }
        }
    }
    return rule;
}

double integrate_2d_fixed(const Integrand2d &f, const Box &box, int panels_x,
                          int panels_y) {
    const Rule1d rx = composite_gauss_legendre(box.x, panels_x);
    const Rule1d ry = composite_gauss_legendre(box.y, panels_y);
    double sum = 0.0;
    for (std::size_t i = 0; i < rx.nodes.size(); ++i) {
        double row = 0.0;
        for (std::size_t j = 0; j < ry.nodes.size(); ++j) {
            row += ry.weights[j] * f(rx.nodes[i], ry.nodes[j]);
        }
        sum += rx.weights[i] * row;
    }
    return sum;
}

QuadratureResult integrate_2d(const Integrand2d &f, const Box &box,
                              const QuadratureSpec &spec) {
    QuadratureResult result;
    if (box.x.empty() || box.y.empty()) {
        return result;
    }
    int panels = std::max(1, spec.initial_panels);
    double previous = integrate_2d_fixed(f, box, panels, panels);
    result.evaluations += static_cast<long>(panels) * panels * kOrder * kOrder;
    while (panels * 2 <= spec.max_panels) {
        panels *= 2;
        const double current = integrate_2d_fixed(f, box, panels, panels);
        result.evaluations +=
            static_cast<long>(panels) * panels * kOrder * kOrder;
        const double change = std::abs(current - previous);
        if (change <= std::max(spec.rel_tol * std::abs(current), spec.abs_tol)) {
            result.value = current;
            result.change = change;
            result.panels = panels;
            return result;
        }
        previous = current;
    }
    std::ostringstream msg;
    msg << "2-D quadrature did not converge within " << spec.max_panels
        << " panels per axis (last value " << previous << ")";
    throw ConvergenceError(msg.str());
}

} // namespace hybridwit::quadrature
