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

#include "hybridwit/sweep.hpp"

#include <algorithm>
#include <cmath>
#include <thread>

#include "hybridwit/core.hpp"
#include "hybridwit/inequality.hpp"
#include "hybridwit/phase_space.hpp"

namespace hybridwit {

namespace {

void check_axis(const std::vector<double> &axis, const char *field) {
    if (axis.size() < 2) {
        throw DomainError(field, "axis needs at least two points");
    }
    for (std::size_t i = 0; i < axis.size(); ++i) {
        if (!std::isfinite(axis[i])) {
            throw DomainError(field, "axis values must be finite");
        }
        if (i > 0 && !(axis[i] > axis[i - 1])) {
            throw DomainError(field, "axis must be strictly ascending");
        }
    }
}

std::vector<double> linspace(double lo, double hi, int steps) {
    std::vector<double> out(static_cast<std::size_t>(std::max(steps, 0)));
    for (int i = 0; i < steps; ++i) {
        out[i] = steps == 1 ? lo : lo + (hi - lo) * i / (steps - 1);
    }
    if (steps > 1) {
        out.back() = hi;
    }
    return out;
}

} // namespace

SweepGrid SweepGrid::uniform(double eta_min, double eta_max, int eta_steps,
                             double g_min, double g_max, int g_steps, double p) {
    if (eta_steps < 2) {
        throw DomainError("eta_steps", "need at least two points");
    }
    if (g_steps < 2) {
        throw DomainError("g_steps", "need at least two points");
    }
    SweepGrid grid{linspace(eta_min, eta_max, eta_steps),
                   linspace(g_min, g_max, g_steps), p};
    grid.validate();
    return grid;
}

void SweepGrid::validate() const {
    check_axis(eta_axis, "eta");
    check_axis(g_axis, "g");
    (void)Channel(eta_axis.front());
    (void)Channel(eta_axis.back());
    (void)AmplifierParams(g_axis.front(), p);
}

SweepRecord evaluate_node(double eta, double g, double p) {
    const AmplifierParams params(g, p);
    const Channel channel(eta);
    SweepRecord r;
    r.eta = eta;
    r.g = g;
    r.nbar = mean_photon_pairs(params);
    r.mean_n = mean_macro_photons(params);
    r.mean_n_total = mean_total_photons(params);
    r.lost_photons = (1.0 - eta) * r.mean_n;
    r.L = loss_function(params, channel);
    r.B_eta = chsh_parameter_optimal(params, channel).value;
    r.h = witness_correction(channel).h;
    r.W_eta = r.h * r.B_eta;
    r.wigner_origin = wigner_origin_lossy(params, channel);
    r.negativity = std::max(0.0, -r.wigner_origin);
    return r;
}

std::vector<SweepRecord> evaluate_grid(const SweepGrid &grid, unsigned threads) {
    grid.validate();
    const std::size_t n_g = grid.g_axis.size();
    const std::size_t total = grid.eta_axis.size() * n_g;
    std::vector<SweepRecord> records(total);
    if (threads == 0) {
        threads = std::max(1u, std::thread::hardware_concurrency());
    }
    threads = static_cast<unsigned>(std::min<std::size_t>(threads, total));
    // Each worker fills a strided set of slots; slot order is (eta, g).
    const auto work = [&](unsigned worker) {
        for (std::size_t i = worker; i < total; i += threads) {
            records[i] = evaluate_node(grid.eta_axis[i / n_g], grid.g_axis[i % n_g],
                                       grid.p);
        }
    };
    if (threads <= 1) {
        work(0);
        return records;
    }
    std::vector<std::thread> pool;
    pool.reserve(threads);
    for (unsigned t = 0; t < threads; ++t) {
        pool.emplace_back(work, t);
    }
    for (auto &t : pool) {
        t.join();
    }
    return records;
}

std::string to_string(TestKind kind) {
    return kind == TestKind::chsh ? "chsh" : "witness";
}

double test_parameter(TestKind kind, double eta, double g, double p) {
    const AmplifierParams params(g, p);
    const Channel channel(eta);
    return kind == TestKind::chsh ? chsh_parameter_optimal(params, channel).value
                                  : witness_parameter_optimal(params, channel).value;
}

ContourLine extract_contour(const SweepGrid &grid, TestKind kind, double tol) {
    grid.validate();
    if (!(tol > 0.0)) {
        throw DomainError("tol", "tolerance must be > 0");
    }
    ContourLine line;
    line.kind = kind;
    for (double eta : grid.eta_axis) {
        const auto excess = [&](double g) {
            return test_parameter(kind, eta, g, grid.p) - line.level;
        };
        double lo = grid.g_axis.front();
        double f_lo = excess(lo);
        for (std::size_t j = 1; j < grid.g_axis.size(); ++j) {
            const double hi = grid.g_axis[j];
            const double f_hi = excess(hi);
            if (f_lo > 0.0 && f_hi <= 0.0) {
                // Bracket [lo, hi] with the violation on the left.
                double a = lo;
                double b = hi;
                double mid = 0.5 * (a + b);
                for (int it = 0; it < 400; ++it) {
                    mid = 0.5 * (a + b);
                    if (!(a < mid && mid < b)) {
                        break;
                    }
                    const double f_mid = excess(mid);
                    if (b - a < tol && std::abs(f_mid) < tol) {
                        break;
                    }
                    (f_mid > 0.0 ? a : b) = mid;
                }
                line.vertices.push_back({eta, mid});
                break;
            }
            lo = hi;
            f_lo = f_hi;
        }
    }
    return line;
}

std::vector<Figure3Row> figure3_dataset(const std::vector<double> &gains,
                                        const std::vector<double> &eta_samples,
                                        double p) {
    std::vector<Figure3Row> rows;
    rows.reserve(gains.size() * eta_samples.size() * 2);
    for (double g : gains) {
        const AmplifierParams params(g, p);
        const double mean_n = mean_macro_photons(params);
        for (double eta : eta_samples) {
            const Channel channel(eta);
            rows.push_back({"B_eta", g, eta, (1.0 - eta) * mean_n,
                            chsh_parameter_optimal(params, channel).value});
        }
        for (double eta : eta_samples) {
            rows.push_back({"B_LHV", g, eta, (1.0 - eta) * mean_n, kSeparableBound});
        }
    }
    return rows;
}

std::vector<double> default_figure3_gains() { return {0.1, 0.5, 1.0, 1.5}; }

} // namespace hybridwit
