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

#include "hybridwit/fock_oracle.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <vector>

#include "hybridwit/inequality.hpp"
#include "hybridwit/spectral.hpp"

namespace hybridwit::fock {

namespace {

// Blocks of total photon number carrying less squared norm than this are
// left out of the basis rotation.
constexpr double kNegligibleBlock = 1e-32;

constexpr double kHermitianTol = 1e-12;
constexpr double kEigenFloor = 1e-10;

// Squeeze parameters reproducing the phase-space Wigner pair: the injected
// polarization and its partner are squeezed along opposite axes.
Complex xi_injected(const AmplifierParams &params, PolarizationAngle phi) {
    return -params.gain() * std::polar(1.0, -phi.value());
}

Complex xi_partner(const AmplifierParams &params, PolarizationAngle phi) {
    return params.gain() * std::polar(1.0, -phi.value());
}

double witness_h(const Channel &channel) { return witness_correction(channel).h; }

double trace_real(const Matrix &a, const Matrix &b) {
    // Re Tr[a b] without forming the product.
    return (a.transpose().cwiseProduct(b)).sum().real();
}

int padding_for(double radius, int dim) {
    if (radius == 0.0) {
        return 0;
    }
    return static_cast<int>(std::ceil(radius * radius +
                                      2.0 * radius * std::sqrt(static_cast<double>(dim)) +
                                      10.0 * radius + 20.0));
}

// Doubles the dimension until every entry of eval(dim) moves by less than
// the tolerance. Returns the accepted values, dimension and change.
template <typename Eval>
std::vector<double> converge(const OracleSpec &spec, int start, const Eval &eval,
                             int &accepted_dim, double &change) {
    // A starting dimension too small to hold the state is a truncation
    // failure like any other: double past it.
    int dim = start;
    std::vector<double> previous;
    while (true) {
        try {
            previous = eval(dim);
            break;
        } catch (const ConvergenceError &) {
            if (!spec.enforce_convergence || 2 * dim > spec.max_dim) {
                throw;
            }
            dim *= 2;
        }
    }
    accepted_dim = dim;
    change = 0.0;
    if (!spec.enforce_convergence) {
        return previous;
    }
    while (true) {
        if (2 * dim > spec.max_dim) {
            std::ostringstream msg;
            msg << "Fock truncation did not converge below dimension " << spec.max_dim
                << " (last change " << change << ")";
            throw ConvergenceError(msg.str());
        }
        dim *= 2;
        std::vector<double> current = eval(dim);
        change = 0.0;
        for (std::size_t i = 0; i < current.size(); ++i) {
            change = std::max(change, std::abs(current[i] - previous[i]));
        }
        if (change < spec.convergence_tol) {
            accepted_dim = dim;
            return current;
        }
        previous = std::move(current);
    }
}

int start_dim(const OracleSpec &spec, const AmplifierParams &params) {
    return spec.dim > 0 ? spec.dim : default_dimension(params);
}

void check_density(const FockOperator &rho) {
    if (!is_hermitian(rho, kHermitianTol)) {
        throw ConvergenceError("density operator lost Hermiticity");
    }
    if (!is_positive_semidefinite(rho, kEigenFloor)) {
        throw ConvergenceError("density operator has an eigenvalue below -1e-10");
    }
}

// Rotated, lossy reduced states of the chi mode for one branch.
struct BranchStates {
    FockOperator lossless;
    FockOperator lossy;
};

BranchStates branch_states(const AmplifierParams &params, PolarizationAngle source,
                           PolarizationAngle chi, const Channel &channel,
                           PhotonBranch branch, int dim) {
    const TwoModeState state = build_amplified_state(params, source, branch, dim);
    const TwoModeState rotated =
        rotate_polarization_basis(state, angle_difference(chi, source));
    BranchStates out;
    out.lossless = reduced_first_mode(rotated);
    if (channel.lossless()) {
        out.lossy = out.lossless;
    } else {
        out.lossy = apply_loss(out.lossless, channel);
        check_density(out.lossy);
    }
    return out;
}

Matrix kraus_operator(int k, double eta, int dim) {
    Matrix op = Matrix::Zero(dim, dim);
    for (int n = k; n < dim; ++n) {
        const double log_w = std::lgamma(n + 1.0) - std::lgamma(k + 1.0) -
                             std::lgamma(n - k + 1.0) +
                             (n - k) * std::log(eta) +
                             (k > 0 ? k * std::log1p(-eta) : 0.0);
        op(n - k, n) = std::exp(0.5 * log_w);
    }
    return op;
}

// Top-left keep x keep block of exp(alpha a^dag - alpha^* a) on `dim`
// number states.
Matrix displacement_block(Complex alpha, int dim, int keep) {
    const double r = std::abs(alpha);
    if (r == 0.0) {
        return Matrix::Identity(keep, keep);
    }
    // alpha a^dag - alpha^* a = i r G (a + a^dag) G^dag with
    // G = diag(e^{i n (arg alpha - pi/2)}); a + a^dag is real tridiagonal.
    Eigen::VectorXd diag = Eigen::VectorXd::Zero(dim);
    Eigen::VectorXd sub(std::max(dim - 1, 0));
    for (int n = 0; n + 1 < dim; ++n) {
        sub(n) = std::sqrt(n + 1.0);
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver;
    solver.computeFromTridiagonal(diag, sub, Eigen::ComputeEigenvectors);
    const Eigen::MatrixXd q = solver.eigenvectors().topRows(keep);
    const Eigen::ArrayXd phase = r * solver.eigenvalues().array();

    // Real and imaginary parts as two real products over the kept rows.
    const Eigen::MatrixXd re = (q * phase.cos().matrix().asDiagonal()) * q.transpose();
    const Eigen::MatrixXd im = (q * phase.sin().matrix().asDiagonal()) * q.transpose();
    Matrix d(keep, keep);
    const double theta = std::arg(alpha) - 0.5 * kPi;
    for (int k = 0; k < keep; ++k) {
        for (int j = 0; j < keep; ++j) {
            d(j, k) = Complex(re(j, k), im(j, k)) * std::polar(1.0, (j - k) * theta);
        }
    }
    return d;
}

} // namespace

int default_dimension(const AmplifierParams &params) {
    const double g = params.gain();
    const double s = std::sinh(g);
    return static_cast<int>(
        std::ceil(20.0 + 30.0 * s * s * std::max(1.0, std::exp(2.0 * g) / 4.0)));
}

bool is_hermitian(const FockOperator &op, double tol) {
    if (op.rows() != op.cols()) {
        return false;
    }
    return (op - op.adjoint()).cwiseAbs().maxCoeff() <= tol;
}

bool is_positive_semidefinite(const FockOperator &op, double floor) {
    const Matrix shifted = op + floor * Matrix::Identity(op.rows(), op.cols());
    const Eigen::LLT<Matrix> llt(shifted);
    return llt.info() == Eigen::Success;
}

FockOperator displacement(Complex alpha, int dim) {
    if (dim < 1) {
        throw DomainError("dim", "dimension must be >= 1");
    }
    return displacement_block(alpha, dim, dim);
}

FockOperator parity(int dim) {
    Matrix p = Matrix::Zero(dim, dim);
    for (int n = 0; n < dim; ++n) {
        p(n, n) = (n % 2 == 0) ? 1.0 : -1.0;
    }
    return p;
}

FockOperator displaced_parity(Complex alpha, int dim) {
    // D(alpha) Pi D(alpha)^dag = D(2 alpha) Pi.
    const Complex beta = 2.0 * alpha;
    const int padded = dim + padding_for(std::abs(beta), dim);
    Matrix op = displacement_block(beta, padded, dim);
    for (int k = 1; k < dim; k += 2) {
        op.col(k) = -op.col(k);
    }
    return op;
}

double displaced_parity_expectation(const FockOperator &rho, Complex alpha) {
    return trace_real(displaced_parity(alpha, static_cast<int>(rho.rows())), rho);
}

TruncatedVector squeezed_number_state(Complex xi, int photons, int dim) {
    if (dim < photons + 1) {
        throw DomainError("dim", "dimension too small for the seed state");
    }
    const int padded = std::max(2 * dim, dim + 20);
    Vector seed = Vector::Zero(padded);
    seed(photons) = 1.0;
    Vector full = seed;
    if (std::abs(xi) > 0.0) {
        // S(xi) = exp(i H) with H = -i (xi^* a^2 - xi a^dag^2) / 2.
        std::vector<double> lower(padded, 0.0); // sqrt(n (n - 1))
        for (int n = 2; n < padded; ++n) {
            lower[n] = std::sqrt(static_cast<double>(n) * (n - 1));
        }
        const Complex half_i{0.0, -0.5};
        const Complex xc = std::conj(xi);
        const auto apply = [&](const Vector &in, Vector &out) {
            for (int n = 0; n < padded; ++n) {
                Complex acc = 0.0;
                if (n + 2 < padded) {
                    acc += xc * lower[n + 2] * in(n + 2);
                }
                if (n >= 2) {
                    acc -= xi * lower[n] * in(n - 2);
                }
                out(n) = half_i * acc;
            }
        };
        full = spectral::chebyshev_exp(apply, std::abs(xi) * padded, 1.0, seed);
    }
    TruncatedVector out;
    out.amplitudes = full.head(dim);
    out.captured_norm = out.amplitudes.squaredNorm();
    return out;
}

double mean_photon_number(const Vector &amplitudes) {
    double sum = 0.0;
    for (int n = 0; n < amplitudes.size(); ++n) {
        sum += n * std::norm(amplitudes(n));
    }
    return sum;
}

TwoModeState build_amplified_state(const AmplifierParams &params,
                                   PolarizationAngle phi, PhotonBranch branch,
                                   int dim) {
    const bool injected = branch == PhotonBranch::injected;
    const TruncatedVector first =
        squeezed_number_state(xi_injected(params, phi), injected ? 1 : 0, dim);
    const TruncatedVector second =
        squeezed_number_state(xi_partner(params, phi), injected ? 0 : 1, dim);
    TwoModeState state;
    state.amplitudes = first.amplitudes * second.amplitudes.transpose();
    state.basis = phi;
    state.captured_norm = first.captured_norm * second.captured_norm;
    if (state.captured_norm < 1.0 - 1e-8) {
        std::ostringstream msg;
        msg.precision(12);
        msg << "dimension " << dim << " captures only " << state.captured_norm
            << " of the amplified state";
        throw ConvergenceError(msg.str());
    }
    return state;
}

TwoModeState rotate_polarization_basis(const TwoModeState &state, double delta) {
    const int dim = state.dim();
    TwoModeState out;
    out.basis = PolarizationAngle::radians(state.basis.value() + delta);
    if (delta == 0.0) {
        out.amplitudes = state.amplitudes;
        out.captured_norm = state.captured_norm;
        return out;
    }
    out.amplitudes = Matrix::Zero(dim, dim);
    // G has spectrum total, total - 2, ..., -total, so exp(i pi G) = (-1)^total
    // and the propagation angle can be folded into [-pi/2, pi/2].
    const double wrapped = std::remainder(delta, kPi);
    const bool odd_turns =
        static_cast<long long>(std::llround((delta - wrapped) / kPi)) % 2 != 0;
    for (int total = 0; total <= 2 * (dim - 1); ++total) {
        const int lo = std::max(0, total - dim + 1);
        const int hi = std::min(total, dim - 1);
        Vector block = Vector::Zero(total + 1);
        double weight = 0.0;
        for (int n = lo; n <= hi; ++n) {
            block(n) = state.amplitudes(n, total - n);
            weight += std::norm(block(n));
        }
        if (weight < kNegligibleBlock) {
            continue;
        }
        // G = a^dag b + a b^dag on |n, total - n>, n = 0 .. total.
        std::vector<double> hop(total + 1, 0.0); // <n+1|G|n>
        for (int n = 0; n < total; ++n) {
            hop[n] = std::sqrt((n + 1.0) * (total - n));
        }
        const auto apply = [&](const Vector &in, Vector &res) {
            for (int n = 0; n <= total; ++n) {
                Complex acc = 0.0;
                if (n > 0) {
                    acc += hop[n - 1] * in(n - 1);
                }
                if (n < total) {
                    acc += hop[n] * in(n + 1);
                }
                res(n) = acc;
            }
        };
        const Vector turned =
            spectral::chebyshev_exp(apply, static_cast<double>(total), wrapped, block);
        Complex phase = std::polar(1.0, -0.5 * delta * total);
        if (odd_turns && total % 2 != 0) {
            phase = -phase;
        }
        for (int n = lo; n <= hi; ++n) {
            out.amplitudes(n, total - n) = phase * turned(n);
        }
    }
    out.captured_norm = out.amplitudes.squaredNorm();
    if (state.captured_norm - out.captured_norm > 1e-8) {
        std::ostringstream msg;
        msg << "basis rotation at dimension " << dim << " pushed "
            << state.captured_norm - out.captured_norm << " of the norm past the cut";
        throw ConvergenceError(msg.str());
    }
    return out;
}

FockOperator reduced_first_mode(const TwoModeState &state) {
    return state.amplitudes * state.amplitudes.adjoint();
}

FockOperator apply_loss(const FockOperator &rho, const Channel &channel) {
    if (channel.lossless()) {
        return rho;
    }
    const int dim = static_cast<int>(rho.rows());
    const double eta = channel.eta();
    const double log_eta = std::log(eta);
    const double log_loss = std::log1p(-eta);
    // a(m, k) = sqrt(C(m + k, k) eta^m (1 - eta)^k)
    Eigen::MatrixXd a = Eigen::MatrixXd::Zero(dim, dim);
    for (int m = 0; m < dim; ++m) {
        for (int k = 0; m + k < dim; ++k) {
            const double log_w = std::lgamma(m + k + 1.0) - std::lgamma(k + 1.0) -
                                 std::lgamma(m + 1.0) + m * log_eta + k * log_loss;
            a(m, k) = std::exp(0.5 * log_w);
        }
    }
    Matrix out = Matrix::Zero(dim, dim);
    for (int n = 0; n < dim; ++n) {
        for (int m = 0; m < dim; ++m) {
            Complex acc = 0.0;
            const int kmax = dim - std::max(m, n);
            for (int k = 0; k < kmax; ++k) {
                acc += a(m, k) * a(n, k) * rho(m + k, n + k);
            }
            out(m, n) = acc;
        }
    }
    return out;
}

std::vector<OracleCorrelators>
oracle_correlators(const std::vector<PhasePoint> &points, PolarizationAngle chi,
                   PolarizationAngle phi, const AmplifierParams &params,
                   const Channel &channel, const OracleSpec &spec) {
    const double h = witness_h(channel);
    const std::size_t count = points.size();
    // Values laid out as (lossless, lossy, witness) per point, so that one
    // convergence check covers the whole batch.
    const auto eval = [&](int dim) {
        std::vector<double> values(3 * count, 0.0);
        for (PhotonBranch branch : {PhotonBranch::orthogonal, PhotonBranch::injected}) {
            const double sign = branch == PhotonBranch::orthogonal ? 0.5 : -0.5;
            const BranchStates s = branch_states(params, phi, chi, channel, branch, dim);
            const double trace = s.lossy.trace().real();
            for (std::size_t i = 0; i < count; ++i) {
                const Matrix probe = displaced_parity(points[i].amplitude(), dim);
                const double lossy_parity = trace_real(probe, s.lossy);
                values[3 * i] += sign * trace_real(probe, s.lossless);
                values[3 * i + 1] += sign * lossy_parity;
                values[3 * i + 2] += sign * (h * lossy_parity + (1.0 - h) * trace);
            }
        }
        // The vacuum-injection branch leaves the qubit maximally mixed, so
        // sigma(phi) averages to zero there and only the weight p survives.
        for (double &v : values) {
            v *= params.injection();
        }
        return values;
    };
    int dim = 0;
    double change = 0.0;
    const std::vector<double> v = converge(spec, start_dim(spec, params), eval, dim, change);
    std::vector<OracleCorrelators> out(count);
    for (std::size_t i = 0; i < count; ++i) {
        out[i] = {v[3 * i], v[3 * i + 1], v[3 * i + 2], dim, change};
    }
    return out;
}

OracleCorrelators oracle_correlators(const PhasePoint &point, PolarizationAngle chi,
                                     PolarizationAngle phi,
                                     const AmplifierParams &params,
                                     const Channel &channel, const OracleSpec &spec) {
    return oracle_correlators(std::vector<PhasePoint>{point}, chi, phi, params, channel,
                              spec)
        .front();
}

double oracle_correlator(const PhasePoint &point, PolarizationAngle chi,
                         PolarizationAngle phi, const AmplifierParams &params,
                         const Channel &channel, const OracleSpec &spec) {
    return oracle_correlators(point, chi, phi, params, channel, spec).lossy;
}

double oracle_witness_correlator(const PhasePoint &point, PolarizationAngle chi,
                                 PolarizationAngle phi, const AmplifierParams &params,
                                 const Channel &channel, const OracleSpec &spec) {
    return oracle_correlators(point, chi, phi, params, channel, spec).witness;
}

double oracle_two_mode_q(const AmplifierParams &params, const PhasePoint &alpha_chi,
                         const PhasePoint &alpha_chi_perp, PolarizationAngle chi,
                         PolarizationAngle phi, const OracleSpec &spec) {
    const auto eval = [&](int dim) {
        const Matrix a = displaced_parity(alpha_chi.amplitude(), dim);
        const Matrix b = displaced_parity(alpha_chi_perp.amplitude(), dim);
        double q = 0.0;
        for (PhotonBranch branch : {PhotonBranch::orthogonal, PhotonBranch::injected}) {
            const double sign = branch == PhotonBranch::orthogonal ? 0.5 : -0.5;
            const TwoModeState rotated = rotate_polarization_basis(
                build_amplified_state(params, phi, branch, dim),
                angle_difference(chi, phi));
            const Matrix &psi = rotated.amplitudes;
            q += sign *
                 (psi.conjugate().cwiseProduct(a * psi * b.transpose())).sum().real();
        }
        return std::vector<double>{q};
    };
    int dim = 0;
    double change = 0.0;
    return converge(spec, start_dim(spec, params), eval, dim, change)[0];
}

double oracle_two_mode_wigner(const AmplifierParams &params, PolarizationAngle phi,
                              Complex a_phi, Complex a_phi_perp, PhotonBranch branch,
                              const OracleSpec &spec) {
    const auto eval = [&](int dim) {
        const Matrix a = displaced_parity(a_phi, dim);
        const Matrix b = displaced_parity(a_phi_perp, dim);
        const Matrix &psi = build_amplified_state(params, phi, branch, dim).amplitudes;
        const double parity =
            (psi.conjugate().cwiseProduct(a * psi * b.transpose())).sum().real();
        return std::vector<double>{4.0 / (kPi * kPi) * parity};
    };
    int dim = 0;
    double change = 0.0;
    return converge(spec, start_dim(spec, params), eval, dim, change)[0];
}

double wigner_origin(const AmplifierParams &params, const Channel &channel,
                     const OracleSpec &spec) {
    const auto eval = [&](int dim) {
        const TruncatedVector photon =
            squeezed_number_state(-params.gain(), 1, dim);
        if (photon.captured_norm < 1.0 - spec.norm_tol) {
            throw ConvergenceError("squeezed photon not captured by the truncation");
        }
        const FockOperator rho =
            apply_loss(photon.amplitudes * photon.amplitudes.adjoint(), channel);
        check_density(rho);
        double parity = 0.0;
        for (int n = 0; n < dim; ++n) {
            parity += (n % 2 == 0 ? 1.0 : -1.0) * rho(n, n).real();
        }
        return std::vector<double>{2.0 / kPi * parity};
    };
    int dim = 0;
    double change = 0.0;
    return converge(spec, start_dim(spec, params), eval, dim, change)[0];
}

double explicit_singlet_correlator(const PhasePoint &point, PolarizationAngle chi,
                                   PolarizationAngle phi, const AmplifierParams &params,
                                   const Channel &channel, int dim,
                                   MacroObservable observable) {
    const int modes = dim * dim;
    const int joint = 2 * modes;
    const auto kron = [&](const Vector &u, const Vector &v) {
        Vector out(modes);
        for (int j = 0; j < dim; ++j) {
            for (int k = 0; k < dim; ++k) {
                out(j * dim + k) = u(j) * v(k);
            }
        }
        return out;
    };
    const Complex xi_a = xi_injected(params, phi);
    const Complex xi_b = xi_partner(params, phi);
    const Vector a0 = squeezed_number_state(xi_a, 0, dim).amplitudes;
    const Vector a1 = squeezed_number_state(xi_a, 1, dim).amplitudes;
    const Vector b0 = squeezed_number_state(xi_b, 0, dim).amplitudes;
    const Vector b1 = squeezed_number_state(xi_b, 1, dim).amplitudes;

    // Dense passive rotation on the truncated two-mode space.
    Eigen::MatrixXd hop = Eigen::MatrixXd::Zero(modes, modes);
    for (int j = 0; j + 1 < dim; ++j) {
        for (int k = 1; k < dim; ++k) {
            // a^dag b |j, k> = sqrt((j + 1) k) |j + 1, k - 1>
            const double w = std::sqrt((j + 1.0) * k);
            hop((j + 1) * dim + (k - 1), j * dim + k) = w;
            hop(j * dim + k, (j + 1) * dim + (k - 1)) = w;
        }
    }
    const double delta = angle_difference(chi, phi);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(hop);
    const Matrix vecs = solver.eigenvectors().cast<Complex>();
    Vector phases(modes);
    for (int i = 0; i < modes; ++i) {
        phases(i) = std::polar(1.0, delta * solver.eigenvalues()(i));
    }
    Matrix rotation = vecs * phases.asDiagonal() * vecs.adjoint();
    for (int j = 0; j < dim; ++j) {
        for (int k = 0; k < dim; ++k) {
            rotation.row(j * dim + k) *= std::polar(1.0, -0.5 * delta * (j + k));
        }
    }

    // Qubit basis {|phi>, |phi_perp>}; singlet plus the vacuum branch.
    const Vector with_orth = rotation * kron(a0, b1);
    const Vector with_inj = rotation * kron(a1, b0);
    const Vector vacuum = rotation * kron(a0, b0);
    Vector singlet(joint);
    singlet.head(modes) = with_orth / std::sqrt(2.0);
    singlet.tail(modes) = -with_inj / std::sqrt(2.0);
    const double p = params.injection();
    Matrix rho = p * singlet * singlet.adjoint();
    const Matrix vac = vacuum * vacuum.adjoint();
    rho.topLeftCorner(modes, modes) += 0.5 * (1.0 - p) * vac;
    rho.bottomRightCorner(modes, modes) += 0.5 * (1.0 - p) * vac;

    if (!channel.lossless()) {
        Matrix lossy = Matrix::Zero(joint, joint);
        for (int k = 0; k < dim; ++k) {
            const Matrix kraus = kraus_operator(k, channel.eta(), dim);
            Matrix full = Matrix::Zero(joint, joint);
            for (int q = 0; q < 2; ++q) {
                for (int j = 0; j < dim; ++j) {
                    for (int jj = 0; jj < dim; ++jj) {
                        if (kraus(j, jj) == 0.0) {
                            continue;
                        }
                        for (int k2 = 0; k2 < dim; ++k2) {
                            full(q * modes + j * dim + k2, q * modes + jj * dim + k2) =
                                kraus(j, jj);
                        }
                    }
                }
            }
            lossy += full * rho * full.adjoint();
        }
        rho = lossy;
    }

    Matrix macro = displaced_parity(point.amplitude(), dim);
    if (observable == MacroObservable::witness) {
        const double h = witness_h(channel);
        macro = h * macro + (1.0 - h) * Matrix::Identity(dim, dim);
    }
    Matrix measured = Matrix::Zero(joint, joint);
    for (int q = 0; q < 2; ++q) {
        const double sigma = q == 0 ? 1.0 : -1.0;
        for (int j = 0; j < dim; ++j) {
            for (int jj = 0; jj < dim; ++jj) {
                for (int k = 0; k < dim; ++k) {
                    measured(q * modes + j * dim + k, q * modes + jj * dim + k) =
                        sigma * macro(j, jj);
                }
            }
        }
    }
    return trace_real(measured, rho);
}

double product_state_correlator(const ProductState &state, const PhasePoint &point,
                                PolarizationAngle chi, PolarizationAngle phi,
                                const AmplifierParams &params, const Channel &channel,
                                MacroObservable observable, const OracleSpec &spec) {
    if (!(state.qubit_radius >= 0.0 && state.qubit_radius <= 1.0)) {
        throw DomainError("qubit_radius", "Bloch radius must lie in [0, 1]");
    }
    const double qubit = state.qubit_radius *
                         std::cos(2.0 * angle_difference(phi, state.qubit_angle));
    const double h = observable == MacroObservable::witness ? witness_h(channel) : 1.0;
    const auto eval = [&](int dim) {
        const BranchStates s =
            branch_states(params, state.macro_polarization, chi, channel,
                          PhotonBranch::injected, dim);
        const double parity =
            trace_real(displaced_parity(point.amplitude(), dim), s.lossy);
        return std::vector<double>{h * parity + (1.0 - h) * s.lossy.trace().real()};
    };
    int dim = 0;
    double change = 0.0;
    return qubit * converge(spec, start_dim(spec, params), eval, dim, change)[0];
}

} // namespace hybridwit::fock
