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

#include "cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <random>
#include <sstream>
#include <variant>

#include <CLI11.hpp>
#include <json.hpp>

#include "hybridwit/core.hpp"
#include "hybridwit/fock_oracle.hpp"
#include "hybridwit/inequality.hpp"
#include "hybridwit/phase_space.hpp"
#include "hybridwit/sweep.hpp"

namespace hybridwit::cli {

namespace {

using Json = nlohmann::ordered_json;
using Cell = std::variant<double, long long, bool, std::string>;

struct IoFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ConfigFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

/// Column-oriented result; some columns appear only in JSON.
class Table {
  public:
    void column(std::string name, bool in_csv = true) {
        names_.push_back(std::move(name));
        in_csv_.push_back(in_csv);
    }
    void row(std::vector<Cell> cells) { rows_.push_back(std::move(cells)); }

    [[nodiscard]] std::string csv() const {
        std::string text;
        bool first = true;
        for (std::size_t i = 0; i < names_.size(); ++i) {
            if (in_csv_[i]) {
                text += (first ? "" : ",") + names_[i];
                first = false;
            }
        }
        text += '\n';
        for (const auto &r : rows_) {
            first = true;
            for (std::size_t i = 0; i < names_.size(); ++i) {
                if (!in_csv_[i]) {
                    continue;
                }
                if (!first) {
                    text += ',';
                }
                first = false;
                text += std::visit(
                    [](const auto &v) -> std::string {
                        using T = std::decay_t<decltype(v)>;
                        if constexpr (std::is_same_v<T, double>) {
                            return format_double(v);
                        } else if constexpr (std::is_same_v<T, bool>) {
                            return v ? "true" : "false";
                        } else if constexpr (std::is_same_v<T, long long>) {
                            return std::to_string(v);
                        } else {
                            return v;
                        }
                    },
                    r[i]);
            }
            text += '\n';
        }
        return text;
    }

    [[nodiscard]] Json records() const {
        Json out = Json::array();
        for (const auto &r : rows_) {
            Json rec = Json::object();
            for (std::size_t i = 0; i < names_.size(); ++i) {
                std::visit([&](const auto &v) { rec[names_[i]] = v; }, r[i]);
            }
            out.push_back(std::move(rec));
        }
        return out;
    }

  private:
    std::vector<std::string> names_;
    std::vector<bool> in_csv_;
    std::vector<std::vector<Cell>> rows_;
};

struct RunConfig {
    // Shared physics inputs.
    double g = 0.0;
    double eta = 1.0;
    double p = 1.0;
    double x = 0.0;
    double p_quad = 0.0;
    double x_prime = 0.0;
    double p_quad_prime = 0.0;
    double chi = 0.0;
    double phi = 0.0;
    double chi_prime = 0.0;
    double phi_prime = 0.0;
    bool degrees = false;

    // Grids.
    double eta_min = 0.5;
    double eta_max = 1.0;
    int eta_steps = 51;
    double g_min = 0.0;
    double g_max = 2.0;
    int g_steps = 41;
    unsigned threads = 0;
    std::string test = "chsh";
    double contour_tol = 1e-9;
    std::vector<double> gains = default_figure3_gains();

    // Oracle check.
    int dim = 0;
    double ceiling = 1.25;
    int samples = 10;
    unsigned long long seed = 1;
    double oracle_tol = 1e-6;

    // Output.
    std::string format = "csv";
    std::string output;
    std::string config;
};

int emit(const Table &table, Json config, const RunConfig &c, std::ostream &out,
         std::ostream &err) {
    std::string text;
    if (c.format == "json") {
        Json doc = Json::object();
        doc["config"] = std::move(config);
        doc["records"] = table.records();
        text = doc.dump(2) + "\n";
    } else {
        text = table.csv();
    }
    if (c.output.empty()) {
        out << text;
        return kExitOk;
    }
    std::ofstream file(c.output, std::ios::binary | std::ios::trunc);
    if (!file) {
        err << "error: cannot open output file '" << c.output << "'\n";
        return kExitIo;
    }
    file << text;
    file.close();
    if (!file) {
        err << "error: failed writing output file '" << c.output << "'\n";
        return kExitIo;
    }
    return kExitOk;
}

PolarizationAngle angle(double value, bool degrees) {
    return degrees ? PolarizationAngle::degrees(value) : PolarizationAngle::radians(value);
}

bool user_gave(const std::vector<std::string> &args, const std::string &flag) {
    return std::any_of(args.begin(), args.end(), [&](const std::string &a) {
        return a == flag || a.rfind(flag + "=", 0) == 0;
    });
}

std::string config_value(const Json &v) {
    if (v.is_number_integer() || v.is_number_unsigned()) {
        return v.dump();
    }
    if (v.is_number()) {
        return format_double(v.get<double>());
    }
    if (v.is_string()) {
        return v.get<std::string>();
    }
    if (v.is_array()) {
        std::string joined;
        for (const auto &item : v) {
            joined += (joined.empty() ? "" : ",") + config_value(item);
        }
        return joined;
    }
    throw ConfigFailure("unsupported value " + v.dump());
}

// Splices the flags of a --config JSON file in front of the user's flags.
// Top-level scalar keys apply to any subcommand; an object keyed by the
// subcommand name overrides them. Flags given on the command line win.
std::vector<std::string> expand_config(const std::vector<std::string> &args) {
    std::string path;
    for (std::size_t i = 0; i < args.size(); ++i) {
        if (args[i] == "--config" && i + 1 < args.size()) {
            path = args[i + 1];
        } else if (args[i].rfind("--config=", 0) == 0) {
            path = args[i].substr(9);
        }
    }
    if (path.empty() || args.empty()) {
        return args;
    }
    std::ifstream file(path);
    if (!file) {
        throw IoFailure("cannot read config file '" + path + "'");
    }
    Json doc;
    try {
        doc = Json::parse(file);
    } catch (const Json::parse_error &e) {
        throw ConfigFailure(std::string("config: ") + e.what());
    }
    if (!doc.is_object()) {
        throw ConfigFailure("config: top level must be a JSON object");
    }
    const std::string &command = args.front();
    Json merged = Json::object();
    for (const auto &[key, value] : doc.items()) {
        if (!value.is_object()) {
            merged[key] = value;
        }
    }
    if (doc.contains(command) && doc[command].is_object()) {
        for (const auto &[key, value] : doc[command].items()) {
            merged[key] = value;
        }
    }
    std::vector<std::string> injected;
    for (const auto &[key, value] : merged.items()) {
        std::string flag = "--" + key;
        std::replace(flag.begin() + 2, flag.end(), '_', '-');
        if (flag == "--config" || user_gave(args, flag)) {
            continue;
        }
        if (value.is_boolean()) {
            if (value.get<bool>()) {
                injected.push_back(flag);
            }
            continue;
        }
        try {
            injected.push_back(flag);
            injected.push_back(config_value(value));
        } catch (const ConfigFailure &e) {
            throw ConfigFailure("config: " + key + ": " + e.what());
        }
    }
    std::vector<std::string> out;
    out.push_back(command);
    out.insert(out.end(), injected.begin(), injected.end());
    out.insert(out.end(), args.begin() + 1, args.end());
    return out;
}

Json physics_config(const std::string &command, const RunConfig &c) {
    Json j = Json::object();
    j["command"] = command;
    j["g"] = c.g;
    j["eta"] = c.eta;
    j["p"] = c.p;
    return j;
}

Json grid_config(const std::string &command, const RunConfig &c) {
    Json j = Json::object();
    j["command"] = command;
    j["eta_min"] = c.eta_min;
    j["eta_max"] = c.eta_max;
    j["eta_steps"] = c.eta_steps;
    j["g_min"] = c.g_min;
    j["g_max"] = c.g_max;
    j["g_steps"] = c.g_steps;
    j["p"] = c.p;
    return j;
}

int cmd_correlator(const RunConfig &c, std::ostream &out, std::ostream &err) {
    const AmplifierParams params(c.g, c.p);
    const Channel channel(c.eta);
    const PhasePoint point(c.x, c.p_quad);
    const PolarizationAngle chi = angle(c.chi, c.degrees);
    const PolarizationAngle phi = angle(c.phi, c.degrees);
    const double value = correlator_injected(point, chi, phi, params, channel).value();

    Table t;
    for (const char *name : {"g", "eta", "p", "x", "p_quad", "chi", "phi", "value"}) {
        t.column(name);
    }
    t.row({c.g, c.eta, c.p, c.x, c.p_quad, chi.value(), phi.value(), value});
    Json config = physics_config("correlator", c);
    config["x"] = c.x;
    config["p_quad"] = c.p_quad;
    config["chi"] = chi.value();
    config["phi"] = phi.value();
    return emit(t, config, c, out, err);
}

struct SettingOptions {
    CLI::Option *phi = nullptr;
    CLI::Option *phi_prime = nullptr;
    CLI::Option *chi = nullptr;
    CLI::Option *chi_prime = nullptr;
    CLI::Option *x = nullptr;
    CLI::Option *p_quad = nullptr;
    CLI::Option *x_prime = nullptr;
    CLI::Option *p_quad_prime = nullptr;
};

int cmd_test(TestKind kind, const RunConfig &c, const SettingOptions &given,
             std::ostream &out, std::ostream &err) {
    const AmplifierParams params(c.g, c.p);
    const Channel channel(c.eta);
    MeasurementSettings s = optimal_settings();
    if (given.phi->count() > 0) {
        s.phi = angle(c.phi, c.degrees);
    }
    if (given.phi_prime->count() > 0) {
        s.phi_prime = angle(c.phi_prime, c.degrees);
    }
    if (given.chi->count() > 0) {
        s.chi = angle(c.chi, c.degrees);
    }
    if (given.chi_prime->count() > 0) {
        s.chi_prime = angle(c.chi_prime, c.degrees);
    }
    s.alpha = PhasePoint(c.x, c.p_quad);
    s.alpha_prime = PhasePoint(c.x_prime, c.p_quad_prime);
    const TestResult r = kind == TestKind::chsh ? chsh_parameter(s, params, channel)
                                                : witness_parameter(s, params, channel);
    Table t;
    for (const char *name : {"test", "g", "eta", "p", "phi", "phi_prime", "chi",
                             "chi_prime", "x", "p_quad", "x_prime", "p_quad_prime",
                             "value", "violated", "margin"}) {
        t.column(name);
    }
    t.row({to_string(kind), c.g, c.eta, c.p, s.phi.value(), s.phi_prime.value(),
           s.chi.value(), s.chi_prime.value(), s.alpha.x(), s.alpha.p(),
           s.alpha_prime.x(), s.alpha_prime.p(), r.value, r.violated, r.margin});
    return emit(t, physics_config(to_string(kind), c), c, out, err);
}

int cmd_sweep(const RunConfig &c, std::ostream &out, std::ostream &err) {
    const SweepGrid grid = SweepGrid::uniform(c.eta_min, c.eta_max, c.eta_steps,
                                              c.g_min, c.g_max, c.g_steps, c.p);
    const std::vector<SweepRecord> records = evaluate_grid(grid, c.threads);
    Table t;
    for (const char *name : {"eta", "g", "nbar", "mean_n"}) {
        t.column(name);
    }
    t.column("mean_n_total", false);
    for (const char *name : {"lost_photons", "L", "B_eta", "h", "W_eta",
                             "wigner_origin", "negativity"}) {
        t.column(name);
    }
    for (const SweepRecord &r : records) {
        t.row({r.eta, r.g, r.nbar, r.mean_n, r.mean_n_total, r.lost_photons, r.L,
               r.B_eta, r.h, r.W_eta, r.wigner_origin, r.negativity});
    }
    return emit(t, grid_config("sweep", c), c, out, err);
}

TestKind parse_test(const std::string &name) {
    if (name == "chsh") {
        return TestKind::chsh;
    }
    if (name == "witness") {
        return TestKind::witness;
    }
    throw DomainError("test", "must be chsh or witness");
}

int cmd_contour(const RunConfig &c, std::ostream &out, std::ostream &err) {
    const TestKind kind = parse_test(c.test);
    const SweepGrid grid = SweepGrid::uniform(c.eta_min, c.eta_max, c.eta_steps,
                                              c.g_min, c.g_max, c.g_steps, c.p);
    const ContourLine line = extract_contour(grid, kind, c.contour_tol);
    Table t;
    for (const char *name : {"test", "level", "eta", "g", "value"}) {
        t.column(name);
    }
    for (const ContourVertex &v : line.vertices) {
        t.row({to_string(kind), line.level, v.eta, v.g,
               test_parameter(kind, v.eta, v.g, c.p)});
    }
    if (line.empty()) {
        err << "no crossing: the " << to_string(kind)
            << " parameter does not cross 2 in any eta column of the grid\n";
    }
    Json config = grid_config("contour", c);
    config["test"] = to_string(kind);
    config["tol"] = c.contour_tol;
    return emit(t, config, c, out, err);
}

int cmd_fig3(const RunConfig &c, std::ostream &out, std::ostream &err) {
    if (c.eta_steps < 2) {
        throw DomainError("eta_steps", "need at least two points");
    }
    std::vector<double> etas(static_cast<std::size_t>(c.eta_steps));
    for (int i = 0; i < c.eta_steps; ++i) {
        etas[i] = c.eta_min + (c.eta_max - c.eta_min) * i / (c.eta_steps - 1);
    }
    etas.back() = c.eta_max;
    for (double eta : etas) {
        (void)Channel(eta);
    }
    if (c.gains.empty()) {
        throw DomainError("gains", "need at least one gain");
    }
    const std::vector<Figure3Row> rows = figure3_dataset(c.gains, etas, c.p);
    Table t;
    for (const char *name : {"curve", "g", "eta", "lost_photons", "B_eta"}) {
        t.column(name);
    }
    for (const Figure3Row &r : rows) {
        t.row({r.curve, r.g, r.eta, r.lost_photons, r.B_eta});
    }
    Json config = Json::object();
    config["command"] = "fig3";
    config["gains"] = c.gains;
    config["eta_min"] = c.eta_min;
    config["eta_max"] = c.eta_max;
    config["eta_steps"] = c.eta_steps;
    config["p"] = c.p;
    return emit(t, config, c, out, err);
}

int cmd_oracle_check(const RunConfig &c, std::ostream &out, std::ostream &err) {
    const AmplifierParams params(c.g, c.p);
    const Channel channel(c.eta);
    if (!(c.ceiling > 0.0)) {
        throw DomainError("ceiling", "must be > 0");
    }
    if (c.g > c.ceiling) {
        throw DomainError("g", format_double(c.g) + " is above oracle ceiling " +
                                   format_double(c.ceiling));
    }
    if (c.samples < 1) {
        throw DomainError("samples", "need at least one sample");
    }
    if (c.dim < 0) {
        throw DomainError("dim", "must be >= 0");
    }
    if (!(c.oracle_tol > 0.0)) {
        throw DomainError("tol", "tolerance must be > 0");
    }
    fock::OracleSpec spec;
    spec.dim = c.dim;

    std::mt19937_64 rng(c.seed);
    std::uniform_real_distribution<double> coord(-1.0, 1.0);
    std::uniform_real_distribution<double> turn(0.0, kTwoPi);
    const double h = witness_correction(channel).h;

    double d_lossless = 0.0;
    double d_lossy = 0.0;
    double d_witness = 0.0;
    double d_q = 0.0;
    for (int i = 0; i < c.samples; ++i) {
        const PhasePoint point(coord(rng), coord(rng));
        const PhasePoint partner(0.5 * coord(rng), 0.5 * coord(rng));
        const PolarizationAngle chi = PolarizationAngle::radians(turn(rng));
        const PolarizationAngle phi = PolarizationAngle::radians(turn(rng));
        const fock::OracleCorrelators o =
            fock::oracle_correlators(point, chi, phi, params, channel, spec);
        const double lossless =
            correlator_injected(point, chi, phi, params, Channel::ideal());
        const double lossy = correlator_injected(point, chi, phi, params, channel);
        d_lossless = std::max(d_lossless, std::abs(lossless - o.lossless));
        d_lossy = std::max(d_lossy, std::abs(lossy - o.lossy));
        d_witness = std::max(d_witness, std::abs(h * lossy - o.witness));
        const double q = two_mode_correlator_q(params, point, partner, chi, phi);
        d_q = std::max(d_q, std::abs(
                                q - fock::oracle_two_mode_q(params, point, partner, chi,
                                                            phi, spec)));
    }
    const double d_origin = std::abs(wigner_origin_lossy(params, channel) -
                                     fock::wigner_origin(params, channel, spec));

    const std::vector<std::pair<std::string, std::pair<double, long long>>> rows = {
        {"correlator_lossless", {d_lossless, c.samples}},
        {"correlator_lossy", {d_lossy, c.samples}},
        {"witness_correlator", {d_witness, c.samples}},
        {"two_mode_q", {d_q, c.samples}},
        {"wigner_origin", {d_origin, 1}},
    };
    Table t;
    for (const char *name : {"quantity", "max_abs_discrepancy", "samples"}) {
        t.column(name);
    }
    bool falsified = false;
    for (const auto &[name, data] : rows) {
        t.row({name, data.first, data.second});
        if (!(data.first < c.oracle_tol)) {
            falsified = true;
            err << "oracle falsification: " << name << " differs by "
                << format_double(data.first) << " (tol " << format_double(c.oracle_tol)
                << ")\n";
        }
    }
    Json config = physics_config("oracle-check", c);
    config["tol"] = c.oracle_tol;
    config["dim"] = c.dim;
    config["samples"] = c.samples;
    config["seed"] = c.seed;
    const int written = emit(t, config, c, out, err);
    if (written != kExitOk) {
        return written;
    }
    return falsified ? kExitFalsified : kExitOk;
}

void add_output_flags(CLI::App *sub, RunConfig &c) {
    sub->add_option("--format", c.format, "output format: csv | json")
        ->check(CLI::IsMember({"csv", "json"}))
        ->capture_default_str();
    sub->add_option("--output", c.output, "write to this file instead of stdout");
    sub->add_option("--config", c.config,
                    "JSON file supplying default flag values; explicit flags win");
}

void add_physics_flags(CLI::App *sub, RunConfig &c) {
    sub->add_option("--g", c.g, "amplifier gain g, real >= 0")->capture_default_str();
    sub->add_option("--eta", c.eta, "detection transmittivity eta, 0 < eta <= 1")
        ->capture_default_str();
    sub->add_option("--p", c.p, "single-photon injection efficiency p, 0 <= p <= 1")
        ->capture_default_str();
}

void add_grid_flags(CLI::App *sub, RunConfig &c) {
    sub->add_option("--eta-min", c.eta_min, "smallest eta, 0 < eta-min < eta-max")
        ->capture_default_str();
    sub->add_option("--eta-max", c.eta_max, "largest eta, eta-max <= 1")
        ->capture_default_str();
    sub->add_option("--eta-steps", c.eta_steps, "eta grid points, integer >= 2")
        ->capture_default_str();
    sub->add_option("--g-min", c.g_min, "smallest gain, real >= 0")->capture_default_str();
    sub->add_option("--g-max", c.g_max, "largest gain, g-max > g-min")
        ->capture_default_str();
    sub->add_option("--g-steps", c.g_steps, "gain grid points, integer >= 2")
        ->capture_default_str();
    sub->add_option("--p", c.p, "single-photon injection efficiency p, 0 <= p <= 1")
        ->capture_default_str();
    sub->add_option("--threads", c.threads,
                    "worker threads, integer >= 0 (0 = hardware concurrency)")
        ->capture_default_str();
}

CLI::Option *add_angle(CLI::App *sub, const std::string &flag, double &target,
                       const std::string &what) {
    return sub
        ->add_option(flag, target,
                     what + ", finite real in radians (degrees with --degrees)")
        ->capture_default_str();
}

} // namespace

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
    std::vector<std::string> tokens;
    try {
        tokens = expand_config(args);
    } catch (const IoFailure &e) {
        err << "error: " << e.what() << "\n";
        return kExitIo;
    } catch (const ConfigFailure &e) {
        err << "error: " << e.what() << "\n";
        return kExitValidation;
    }

    RunConfig c;
    CLI::App app{"Micro-macro entanglement tests for an amplified single photon: "
                 "correlators, CHSH parameter, loss-compensated witness, sweeps and "
                 "a Fock-space cross-check.",
                 "hybridwit"};
    app.require_subcommand(1);

    auto *corr = app.add_subcommand("correlator", "qubit-CV correlator C(alpha, chi; phi)");
    add_physics_flags(corr, c);
    corr->add_option("--x", c.x, "quadrature X of the probed point, finite real")
        ->capture_default_str();
    corr->add_option("--p-quad", c.p_quad, "quadrature P of the probed point, finite real")
        ->capture_default_str();
    add_angle(corr, "--chi", c.chi, "macro-side polarization chi");
    add_angle(corr, "--phi", c.phi, "single-photon-side polarization phi");
    corr->add_flag("--degrees", c.degrees, "read angles in degrees");
    add_output_flags(corr, c);

    SettingOptions chsh_given;
    SettingOptions witness_given;
    auto add_test = [&](const std::string &name, const std::string &about,
                        SettingOptions &given) {
        auto *sub = app.add_subcommand(name, about);
        add_physics_flags(sub, c);
        given.phi = add_angle(sub, "--phi", c.phi, "setting phi (default optimal)");
        given.phi_prime =
            add_angle(sub, "--phi-prime", c.phi_prime, "setting phi' (default optimal)");
        given.chi = add_angle(sub, "--chi", c.chi, "setting chi (default optimal)");
        given.chi_prime =
            add_angle(sub, "--chi-prime", c.chi_prime, "setting chi' (default optimal)");
        given.x = sub->add_option("--x", c.x, "X of alpha, finite real")
                      ->capture_default_str();
        given.p_quad = sub->add_option("--p-quad", c.p_quad, "P of alpha, finite real")
                           ->capture_default_str();
        given.x_prime = sub->add_option("--x-prime", c.x_prime, "X of alpha', finite real")
                            ->capture_default_str();
        given.p_quad_prime =
            sub->add_option("--p-quad-prime", c.p_quad_prime, "P of alpha', finite real")
                ->capture_default_str();
        sub->add_flag("--degrees", c.degrees, "read angles in degrees");
        add_output_flags(sub, c);
        return sub;
    };
    auto *chsh = add_test("chsh", "CHSH-type parameter B (optimal settings by default)",
                          chsh_given);
    auto *witness = add_test(
        "witness", "loss-compensated witness W_eta (optimal settings by default)",
        witness_given);

    auto *sweep = app.add_subcommand("sweep", "closed-form table over an (eta, g) grid");
    add_grid_flags(sweep, c);
    add_output_flags(sweep, c);

    auto *contour =
        app.add_subcommand("contour", "level-2 threshold of B or W per eta column");
    add_grid_flags(contour, c);
    contour->add_option("--test", c.test, "parameter to threshold: chsh | witness")
        ->check(CLI::IsMember({"chsh", "witness"}))
        ->capture_default_str();
    contour->add_option("--tol", c.contour_tol, "bisection tolerance in g, real > 0")
        ->capture_default_str();
    add_output_flags(contour, c);

    auto *fig3 = app.add_subcommand("fig3", "B_eta against lost photons per gain");
    fig3->add_option("--gains", c.gains, "comma-separated gains, each real >= 0")
        ->delimiter(',')
        ->capture_default_str();
    fig3->add_option("--eta-min", c.eta_min, "smallest eta, 0 < eta-min < eta-max")
        ->capture_default_str();
    fig3->add_option("--eta-max", c.eta_max, "largest eta, eta-max <= 1")
        ->capture_default_str();
    fig3->add_option("--eta-steps", c.eta_steps, "eta samples, integer >= 2")
        ->capture_default_str();
    fig3->add_option("--p", c.p, "single-photon injection efficiency p, 0 <= p <= 1")
        ->capture_default_str();
    add_output_flags(fig3, c);

    auto *oracle = app.add_subcommand(
        "oracle-check", "compare the closed forms with the Fock-space oracle");
    add_physics_flags(oracle, c);
    oracle->add_option("--tol", c.oracle_tol,
                       "largest accepted |closed form - oracle|, real > 0")
        ->capture_default_str();
    oracle->add_option("--dim", c.dim,
                       "starting Fock dimension per mode, integer >= 0 (0 = automatic)")
        ->capture_default_str();
    oracle->add_option("--ceiling", c.ceiling, "largest gain accepted, real > 0")
        ->capture_default_str();
    oracle->add_option("--samples", c.samples, "random settings compared, integer >= 1")
        ->capture_default_str();
    oracle->add_option("--seed", c.seed, "seed of the settings generator, integer >= 0")
        ->capture_default_str();
    add_output_flags(oracle, c);

    try {
        std::vector<std::string> reversed(tokens.rbegin(), tokens.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError &e) {
        if (e.get_exit_code() == 0) {
            app.exit(e, out, err);
            return kExitOk;
        }
        err << "error: " << e.what() << "\n";
        return kExitValidation;
    }

    try {
        if (corr->parsed()) {
            return cmd_correlator(c, out, err);
        }
        if (chsh->parsed()) {
            return cmd_test(TestKind::chsh, c, chsh_given, out, err);
        }
        if (witness->parsed()) {
            return cmd_test(TestKind::witness, c, witness_given, out, err);
        }
        if (sweep->parsed()) {
            return cmd_sweep(c, out, err);
        }
        if (contour->parsed()) {
            return cmd_contour(c, out, err);
        }
        if (fig3->parsed()) {
            return cmd_fig3(c, out, err);
        }
        if (oracle->parsed()) {
            return cmd_oracle_check(c, out, err);
        }
    } catch (const DomainError &e) {
        err << "error: " << e.what() << "\n";
        return kExitValidation;
    } catch (const ConvergenceError &e) {
        err << "error: oracle did not converge: " << e.what() << "\n";
        return kExitFalsified;
    }
    return kExitValidation;
}

} // namespace hybridwit::cli
