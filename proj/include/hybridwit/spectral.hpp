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
 * @file spectral.hpp
 * Chebyshev propagation exp(i t H) v for Hermitian H with a known spectral
 * bound, plus the Bessel coefficient sequence it needs. The Fock oracle
 * builds squeezers and polarization rotations with it instead of forming
 * dense matrix exponentials.
 */
#pragma once

#include <functional>
#include <vector>

#include <Eigen/Dense>

namespace hybridwit::spectral {

/// J_0(tau) .. J_kmax(tau) by Miller's backward recurrence, normalized with
/// J_0 + 2 sum_k J_2k = 1. Requires tau >= 0.
[[nodiscard]] std::vector<double> bessel_j_sequence(double tau, int kmax);

/// Number of Chebyshev terms after which |J_k(tau)| is below double
/// precision.
[[nodiscard]] int chebyshev_terms(double tau);

/// out = H in; must not alias.
using HermitianApply =
    std::function<void(const Eigen::VectorXcd &in, Eigen::VectorXcd &out)>;

/// exp(i t H) v, given that the spectrum of H lies in [-radius, radius].
[[nodiscard]] Eigen::VectorXcd chebyshev_exp(const HermitianApply &apply,
                                             double radius, double t,
                                             const Eigen::VectorXcd &v);

} // namespace hybridwit::spectral
