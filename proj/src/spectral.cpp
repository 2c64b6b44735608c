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

#include "hybridwit/spectral.hpp"

#include <cmath>
#include <complex>
#include <stdexcept>

namespace hybridwit::spectral {

std::vector<double> bessel_j_sequence(double tau, int kmax) {
    if (!(tau >= 0.0) || kmax < 0) {
        throw std::invalid_argument("bessel_j_sequence: need tau >= 0, kmax >= 0");
    }
    std::vector<double> j(static_cast<std::size_t>(kmax) + 1, 0.0);
    if (tau == 0.0) {
        j[0] = 1.0;
        return j;
    }
    // Start far enough above both kmax and tau that the arbitrary seed has
    // decayed away by the time the recurrence reaches the wanted orders.
    const int start =
        std::max(kmax, static_cast<int>(tau)) + 20 +
        static_cast<int>(std::sqrt(40.0 * (std::max(kmax, static_cast<int>(tau)) + 1)));
    std::vector<double> work(static_cast<std::size_t>(start) + 2, 0.0);
    work[start] = 1e-30;
    for (int k = start; k >= 1; --k) {
        work[k - 1] = (2.0 * k / tau) * work[k] - work[k + 1];
        if (std::abs(work[k - 1]) > 1e100) {
            for (int m = k - 1; m <= start; ++m) {
                work[m] *= 1e-100;
            }
        }
    }
    double norm = work[0];
    for (int k = 2; k <= start; k += 2) {
        norm += 2.0 * work[k];
    }
    for (int k = 0; k <= kmax; ++k) {
        j[k] = work[k] / norm;
    }
    return j;
}

int chebyshev_terms(double tau) {
    return static_cast<int>(std::ceil(tau + 12.0 * std::cbrt(tau) + 30.0));
}

Eigen::VectorXcd chebyshev_exp(const HermitianApply &apply, double radius,
                               double t, const Eigen::VectorXcd &v) {
    if (radius <= 0.0 || t == 0.0) {
        return v;
    }
    // exp(i t H) = exp(i tau x) with x = sign(t) H / radius in [-1, 1].
    const double tau = std::abs(t) * radius;
    const double scale = (t > 0.0 ? 1.0 : -1.0) / radius;
    const int terms = chebyshev_terms(tau);
    const std::vector<double> bessel = bessel_j_sequence(tau, terms);

    Eigen::VectorXcd scratch(v.size());
    const auto apply_x = [&](const Eigen::VectorXcd &in, Eigen::VectorXcd &out) {
        apply(in, scratch);
        out = scale * scratch;
    };

    Eigen::VectorXcd prev = v;
    Eigen::VectorXcd cur(v.size());
    apply_x(prev, cur);
    Eigen::VectorXcd result = bessel[0] * prev;
    std::complex<double> ik{0.0, 1.0};
    result += 2.0 * ik * bessel[1] * cur;
    Eigen::VectorXcd next(v.size());
    for (int k = 2; k <= terms; ++k) {
        apply_x(cur, next);
        next = 2.0 * next - prev;
        ik *= std::complex<double>{0.0, 1.0};
        result += 2.0 * ik * bessel[k] * next;
        prev.swap(cur);
        cur.swap(next);
    }
    return result;
}

} // namespace hybridwit::spectral
