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
 * @file fock_oracle.hpp
 * Brute-force reference engine on a truncated Fock space. States are built
 * from squeezers, rotated between polarization bases by the passive
 * two-mode unitary, sent through the beam-splitter loss channel and probed
 * with the displaced parity. Nothing here uses the phase-space closed
 * forms; they are checked against it.
 *
 * Truncation follows one rule throughout: start from default_dimension()
 * (or an explicit dimension), double until every reported expectation moves
 * by less than the convergence tolerance, and fail loudly otherwise.
 */
#pragma once

#include <vector>

#include <Eigen/Dense>

#include "hybridwit/core.hpp"
#include "hybridwit/phase_space.hpp"

namespace hybridwit::fock {

using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

/// Dense operator on number states 0 .. dim-1 of one mode.
using FockOperator = Matrix;

struct OracleSpec {
    /// Starting dimension per mode; 0 selects default_dimension().
    int dim = 0;
    /// Double the dimension until results move by less than this.
    double convergence_tol = 1e-8;
    /// When false, evaluate once at the starting dimension.
    bool enforce_convergence = true;
    int max_dim = 2048;
    /// Largest accepted norm lost to truncation.
    double norm_tol = 1e-8;
};

/// ceil(20 + 30 sinh^2 g max(1, e^{2g}/4)).
[[nodiscard]] int default_dimension(const AmplifierParams &params);

[[nodiscard]] bool is_hermitian(const FockOperator &op, double tol = 1e-12);

/// Smallest eigenvalue above -floor, tested by a Cholesky factorization of
/// op + floor * I.
[[nodiscard]] bool is_positive_semidefinite(const FockOperator &op,
                                            double floor = 1e-10);

/// exp(alpha a^dag - alpha^* a) of the truncated generator; exactly unitary
/// on the truncated space.
[[nodiscard]] FockOperator displacement(Complex alpha, int dim);

[[nodiscard]] FockOperator parity(int dim);

/// D(alpha) (-1)^n D(alpha)^dag restricted to the first dim number states,
/// computed as D(2 alpha) (-1)^n on a padded space so that the kept block
/// is free of edge effects.
[[nodiscard]] FockOperator displaced_parity(Complex alpha, int dim);

/// Tr[Pi(alpha) rho]; (2/pi) times this is the Wigner function at alpha.
[[nodiscard]] double displaced_parity_expectation(const FockOperator &rho,
                                                  Complex alpha);

/// S(xi)|n0> with S(xi) = exp((xi^* a^2 - xi a^dag^2) / 2), propagated on a
/// padded space and cut to dim. captured_norm is the squared norm kept.
struct TruncatedVector {
    Vector amplitudes;
    double captured_norm = 0.0;
};

[[nodiscard]] TruncatedVector squeezed_number_state(Complex xi, int photons,
                                                    int dim);

[[nodiscard]] double mean_photon_number(const Vector &amplitudes);

/// Pure state of a polarization mode pair. amplitudes(j, k) multiplies
/// |j>_first |k>_second, where the first mode has polarization `basis`
/// and the second its orthogonal partner.
struct TwoModeState {
    Matrix amplitudes;
    PolarizationAngle basis;
    double captured_norm = 1.0;

    [[nodiscard]] int dim() const { return static_cast<int>(amplitudes.rows()); }
};

/// S_phi(-g e^{-i phi}) S_phi_perp(g e^{-i phi}) applied to one photon in
/// the polarization picked by `branch` (phi or phi_perp), vacuum in the
/// other. Throws ConvergenceError when the truncation keeps less than
/// 1 - 1e-8 of the norm.
[[nodiscard]] TwoModeState build_amplified_state(const AmplifierParams &params,
                                                 PolarizationAngle phi,
                                                 PhotonBranch branch, int dim);

/// Re-expresses the state in the pair (basis + delta, its partner) with the
/// passive unitary exp(-i delta N / 2) exp(i delta (a^dag b + a b^dag)),
/// applied block by block in total photon number.
[[nodiscard]] TwoModeState rotate_polarization_basis(const TwoModeState &state,
                                                     double delta);

/// Reduced density operator of the first mode.
[[nodiscard]] FockOperator reduced_first_mode(const TwoModeState &state);

/// Beam-splitter loss on a single-mode density operator, as the Kraus sum
/// with K_k = sum_n sqrt(C(n, k) eta^{n-k} (1-eta)^k) |n-k><n|.
[[nodiscard]] FockOperator apply_loss(const FockOperator &rho,
                                      const Channel &channel);

/// Single-photon-side observable paired with sigma(phi).
enum class MacroObservable {
    parity,  ///< Pi(alpha)
    witness, ///< h Pi(alpha) + (1 - h), h from the witness correction
};

struct OracleCorrelators {
    double lossless = 0.0;
    double lossy = 0.0;
    double witness = 0.0;
    /// Dimension of the accepted evaluation and the change from the previous
    /// one (zero when convergence was not enforced).
    int dim = 0;
    double change = 0.0;
};

/// Lossless, lossy and witness correlators at one setting, sharing the
/// states and the displaced parity between the three.
[[nodiscard]] OracleCorrelators oracle_correlators(const PhasePoint &point,
                                                   PolarizationAngle chi,
                                                   PolarizationAngle phi,
                                                   const AmplifierParams &params,
                                                   const Channel &channel,
                                                   const OracleSpec &spec = {});

/// The same for several phase-space points at one setting; the states are
/// built once per dimension and convergence is judged over the whole batch.
[[nodiscard]] std::vector<OracleCorrelators>
oracle_correlators(const std::vector<PhasePoint> &points, PolarizationAngle chi,
                   PolarizationAngle phi, const AmplifierParams &params,
                   const Channel &channel, const OracleSpec &spec = {});

[[nodiscard]] double oracle_correlator(const PhasePoint &point,
                                       PolarizationAngle chi,
                                       PolarizationAngle phi,
                                       const AmplifierParams &params,
                                       const Channel &channel,
                                       const OracleSpec &spec = {});

[[nodiscard]] double oracle_witness_correlator(const PhasePoint &point,
                                               PolarizationAngle chi,
                                               PolarizationAngle phi,
                                               const AmplifierParams &params,
                                               const Channel &channel,
                                               const OracleSpec &spec = {});

/// <sigma(phi) x Pi_chi(alpha_chi) x Pi_chi_perp(alpha_chi_perp)> on the
/// lossless state.
[[nodiscard]] double oracle_two_mode_q(const AmplifierParams &params,
                                       const PhasePoint &alpha_chi,
                                       const PhasePoint &alpha_chi_perp,
                                       PolarizationAngle chi,
                                       PolarizationAngle phi,
                                       const OracleSpec &spec = {});

/// (2/pi)^2 <Pi(a_phi) x Pi(a_phi_perp)> on build_amplified_state.
[[nodiscard]] double oracle_two_mode_wigner(const AmplifierParams &params,
                                            PolarizationAngle phi,
                                            Complex a_phi, Complex a_phi_perp,
                                            PhotonBranch branch,
                                            const OracleSpec &spec = {});

/// (2/pi) Tr[Pi(0) rho] for the injected polarization mode after loss.
[[nodiscard]] double wigner_origin(const AmplifierParams &params,
                                   const Channel &channel,
                                   const OracleSpec &spec = {});

/// The same correlator as oracle_correlator, from an explicit
/// qubit x two-mode density matrix: singlet plus the vacuum-injection
/// branch, dense basis rotation, Kraus loss on the chi mode, full trace.
/// Fixed dimension, no convergence loop; meant for dim <= 12.
[[nodiscard]] double explicit_singlet_correlator(const PhasePoint &point,
                                                 PolarizationAngle chi,
                                                 PolarizationAngle phi,
                                                 const AmplifierParams &params,
                                                 const Channel &channel,
                                                 int dim,
                                                 MacroObservable observable =
                                                     MacroObservable::parity);

/// Product of an equatorial qubit state (Bloch radius r, polarization
/// angle theta) and the amplified photon of polarization psi.
struct ProductState {
    PolarizationAngle qubit_angle;
    double qubit_radius = 1.0;
    PolarizationAngle macro_polarization;
};

/// <sigma(phi)> <O_chi(alpha)> on a product state; the separable benchmark.
[[nodiscard]] double product_state_correlator(const ProductState &state,
                                              const PhasePoint &point,
                                              PolarizationAngle chi,
                                              PolarizationAngle phi,
                                              const AmplifierParams &params,
                                              const Channel &channel,
                                              MacroObservable observable,
                                              const OracleSpec &spec = {});

} // namespace hybridwit::fock
