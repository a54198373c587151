// Copyright 2026 The qecho Authors
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

// Command-line front end: cavity photon-echo memory runs with CSV output.
//
//   qecho simulate  --schedule <file> [ensemble/state/stepper flags] --output <csv>
//   qecho oracle    --gamma <g> --scenario free|j0|fast [--tau <t>] --t-end <T> --output <csv>
//   qecho fig1      [ensemble flags] --output <csv>
//   qecho sweep     --protocol j0|j2pi --gamma-tau <list> --output <csv>

#include <cctype>
#include <charconv>
#include <cmath>
#include <complex>
#include <fstream>
#include <future>
#include <iostream>
#include <numbers>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "qecho/csv.hpp"
#include "qecho/oracle.hpp"
#include "qecho/timeline.hpp"
#include "qecho/version.hpp"

using json = nlohmann::json;
using namespace qecho;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitToleranceFailure = 1;
constexpr int kExitInputError = 2;

struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

double parse_double_strict(const std::string& text, const std::string& what) {
    double value = 0.0;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc() || ptr != text.data() + text.size() || !std::isfinite(value)) {
        throw InputError("expected a finite number for " + what + ", got '" + text + "'");
    }
    return value;
}

// Complex literal "a+bi": "1", "-2.5", "0.5+0.5i", "1e-2-3e-1i", "i", "-i".
std::complex<double> parse_complex(const std::string& raw) {
    std::string s;
    for (char c : raw) {
        if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
    }
    if (s.empty()) throw InputError("empty complex literal");

    std::size_t split = std::string::npos;
    for (std::size_t i = 1; i < s.size(); ++i) {
        if ((s[i] == '+' || s[i] == '-') && s[i - 1] != 'e' && s[i - 1] != 'E') {
            split = i;
        }
    }

    const auto parse_imag_body = [](std::string body) -> double {
        if (body.empty() || body == "+") return 1.0;
        if (body == "-") return -1.0;
        return parse_double_strict(body, "imaginary part");
    };

    if (split != std::string::npos) {
        std::string tail = s.substr(split);
        if (tail.back() != 'i') {
            throw InputError("complex literal '" + raw + "' must end in 'i' after the second term");
        }
        tail.pop_back();
        return {parse_double_strict(s.substr(0, split), "real part"), parse_imag_body(tail)};
    }
    if (s.back() == 'i') {
        s.pop_back();
        return {0.0, parse_imag_body(s)};
    }
    return {parse_double_strict(s, "real part"), 0.0};
}

// "fock:<n>" or "superposition:<c0>,<c1>,..." -> normalized field amplitudes.
std::vector<std::complex<double>> parse_initial(const std::string& descriptor) {
    if (descriptor.rfind("fock:", 0) == 0) {
        const std::string num = descriptor.substr(5);
        int n = -1;
        const auto [ptr, ec] = std::from_chars(num.data(), num.data() + num.size(), n);
        if (ec != std::errc() || ptr != num.data() + num.size() || n < 0) {
            throw InputError("bad Fock level in initial-state descriptor '" + descriptor + "'");
        }
        std::vector<std::complex<double>> field(static_cast<std::size_t>(n) + 1, 0.0);
        field.back() = 1.0;
        return field;
    }
    if (descriptor.rfind("superposition:", 0) == 0) {
        std::vector<std::complex<double>> field;
        std::stringstream body(descriptor.substr(14));
        std::string item;
        while (std::getline(body, item, ',')) {
            field.push_back(parse_complex(item));
        }
        if (field.empty()) {
            throw InputError("superposition descriptor lists no amplitudes");
        }
        double norm2 = 0.0;
        for (const auto& c : field) norm2 += std::norm(c);
        if (norm2 <= 0.0) throw InputError("superposition has zero norm");
        for (auto& c : field) c /= std::sqrt(norm2);
        return field;
    }
    throw InputError("initial state must be 'fock:<n>' or 'superposition:<c0>,<c1>,...'");
}

struct EnsembleFlags {
    int n_atoms = 400;
    std::string kind = "comb";
    double width = 100.0;
    std::string coupling;  // empty -> preset reference coupling
    double width3 = -1.0;  // < 0 -> same as width
    std::optional<std::uint64_t> seed;
    std::string preset;

    void attach(CLI::App* cmd) {
        cmd->add_option("--atoms", n_atoms, "number of atoms")->check(CLI::PositiveNumber);
        cmd->add_option("--kind", kind, "detuning distribution: comb|gaussian|lorentzian");
        cmd->add_option("--width", width, "distribution width (comb: full width W)");
        cmd->add_option("--coupling", coupling,
                        "cavity coupling g as a complex literal 'a+bi'");
        cmd->add_option("--width3", width3, "control-transition comb width (default: --width)");
        cmd->add_option("--seed", seed, "RNG seed (required for random distributions)");
        cmd->add_option("--preset", preset, "'paper-fig1': comb N=400, W=100, gamma=1");
    }
};

// Reference comb: gamma = pi N g^2 / W = 1 for g = sqrt(W / (pi N)).
EnsembleSpec reference_ensemble() {
    const double g = std::sqrt(100.0 / (400.0 * std::numbers::pi));
    return make_comb(400, 100.0, g);
}

EnsembleSpec build_ensemble(const EnsembleFlags& flags) {
    if (!flags.preset.empty()) {
        if (flags.preset != "paper-fig1") {
            throw InputError("unknown preset '" + flags.preset + "'");
        }
        return reference_ensemble();
    }
    const auto kind = distribution_kind_from_string(flags.kind);
    const std::complex<double> g = flags.coupling.empty()
                                       ? std::sqrt(flags.width / (std::numbers::pi *
                                                                  static_cast<double>(flags.n_atoms)))
                                       : parse_complex(flags.coupling);
    if (kind == DistributionKind::comb) {
        const double w3 = flags.width3 < 0.0 ? flags.width : flags.width3;
        return make_comb(flags.n_atoms, flags.width, g, w3);
    }
    if (!flags.seed) {
        throw InputError("random distributions need --seed for reproducibility");
    }
    return sample_random(flags.n_atoms, kind, flags.width, g, *flags.seed);
}

json ensemble_json(const EnsembleSpec& e) {
    json j;
    j["n_atoms"] = e.n_atoms;
    j["kind"] = to_string(e.meta.kind);
    j["width"] = e.meta.width;
    j["g2_at_zero"] = e.meta.g2_at_zero;
    j["coupling_re"] = e.couplings.empty() ? 0.0 : e.couplings[0].real();
    j["coupling_im"] = e.couplings.empty() ? 0.0 : e.couplings[0].imag();
    if (e.meta.seed) j["seed"] = *e.meta.seed;
    return j;
}

struct StepperFlags {
    std::string method = "auto";
    double dt = 1e-3;
    double tolerance = 1e-9;

    void attach(CLI::App* cmd) {
        cmd->add_option("--method", method, "stepper: auto|expm|rk4");
        cmd->add_option("--dt", dt, "rk4 step size")->check(CLI::PositiveNumber);
        cmd->add_option("--tolerance", tolerance, "norm-drift bound per unit time")
            ->check(CLI::PositiveNumber);
    }

    StepperConfig config() const {
        StepperConfig cfg;
        if (method == "auto") {
            cfg.method = StepMethod::auto_select;
        } else if (method == "expm") {
            cfg.method = StepMethod::expm_eig;
        } else if (method == "rk4") {
            cfg.method = StepMethod::rk4;
        } else {
            throw InputError("unknown stepper method '" + method + "'");
        }
        cfg.dt = dt;
        cfg.tolerance = tolerance;
        return cfg;
    }

    json to_json() const {
        return json{{"method", method}, {"dt", dt}, {"tolerance", tolerance}};
    }
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot open '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

void write_file(const std::string& path, const std::string& contents) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw InputError("cannot write '" + path + "'");
    out << contents;
    if (!out.good()) throw InputError("failed while writing '" + path + "'");
}

void print_warnings(const ValidityReport& report) {
    for (const auto& w : report.warnings) {
        std::cout << "warning = " << w << "\n";
    }
}

std::string csv_to_string(const TimeSeries& series, const json& header) {
    std::ostringstream out;
    write_timeseries_csv(out, series, header.dump());
    return out.str();
}

json final_state_json(const SectorState& state, double fidelity_vs_initial, double gamma,
                      double tau_d) {
    json sectors = json::array();
    for (const auto& sector : state.sectors) {
        json amps = json::array();
        for (Eigen::Index i = 0; i < sector.amplitudes().size(); ++i) {
            amps.push_back({sector.amplitudes()(i).real(), sector.amplitudes()(i).imag()});
        }
        sectors.push_back({{"n_exc", sector.basis().n_exc()},
                           {"n_atoms", sector.basis().n_atoms()},
                           {"three_level", sector.basis().three_level()},
                           {"amplitudes", amps}});
    }
    return json{{"version", kVersion},
                {"sectors", sectors},
                {"summary",
                 {{"fidelity_vs_initial", fidelity_vs_initial},
                  {"gamma", gamma},
                  {"tau_d", tau_d}}}};
}

// ---------------------------------------------------------------------------
// simulate
// ---------------------------------------------------------------------------

struct SimulateOptions {
    EnsembleFlags ensemble;
    StepperFlags stepper;
    std::string initial = "fock:1";
    std::string schedule_path;
    double sample_dt = 0.01;
    std::string output;
    std::string final_state_path;
    std::size_t dimension_cap = kDefaultDimensionCap;
};

int run_simulate(const SimulateOptions& opt) {
    const auto ensemble = build_ensemble(opt.ensemble);
    const auto field = parse_initial(opt.initial);
    const auto cfg = opt.stepper.config();

    auto schedule = parse_protocol(read_file(opt.schedule_path));
    const double gamma = decay_rate(ensemble);
    double tau_d_value = std::numeric_limits<double>::quiet_NaN();
    if (gamma > 0.0) tau_d_value = oracle::tau_d(gamma);
    if (schedule.unit == TimeUnit::tau_d_units) {
        if (!(gamma > 0.0)) {
            throw InputError("schedule uses tauD units but the ensemble has gamma = 0");
        }
        schedule = schedule.resolved(tau_d_value);
    }

    const auto report = validity(ensemble, schedule.end_time);
    std::cout << "qecho simulate v" << kVersion << "\n";
    std::cout << "gamma = " << format_sci(gamma) << "\n";
    std::cout << "tau_d = " << format_sci(tau_d_value) << "\n";
    print_warnings(report);

    json header;
    header["tool"] = "qecho simulate";
    header["version"] = kVersion;
    header["ensemble"] = ensemble_json(ensemble);
    header["gamma"] = gamma;
    header["tau_d"] = tau_d_value;
    header["initial"] = opt.initial;
    header["schedule"] = opt.schedule_path;
    header["sample_dt"] = opt.sample_dt;
    header["stepper"] = opt.stepper.to_json();
    header["warnings"] = report.warnings;

    // A pure Fock input stays in one excitation sector; superpositions run
    // each sector and gain the p_n marginal columns.
    const bool multi =
        opt.initial.rfind("superposition:", 0) == 0;
    const bool needs_three_level =
        std::any_of(schedule.events.begin(), schedule.events.end(),
                    [](const ProtocolEvent& e) { return e.kind == EventKind::finite_pulse; });

    double fid = 0.0;
    double final_norm = 0.0;
    SectorState final_state;
    TimeSeries series;

    if (multi) {
        auto result = sector_evolve(field, ensemble, schedule, opt.sample_dt, cfg,
                                    opt.dimension_cap);
        std::complex<double> overlap(0.0, 0.0);
        for (std::size_t n = 0; n < field.size(); ++n) {
            overlap += std::conj(field[n]) * result.recovered_field[n];
        }
        fid = std::norm(overlap);
        final_norm = total_norm(result.final_state);
        series = std::move(result.series);
        final_state = std::move(result.final_state);
        for (std::size_t n = 0; n < result.residual_atomic.size(); ++n) {
            std::cout << "residual_atomic[" << n << "] = "
                      << format_sci(result.residual_atomic[n]) << "\n";
        }
    } else {
        const int n_exc = static_cast<int>(field.size()) - 1;
        auto basis = std::make_shared<const BasisIndex>(BasisIndex::enumerate(
            ensemble.n_atoms, n_exc, needs_three_level, opt.dimension_cap));
        const auto initial = QuantumState::full_photon(basis);
        auto result = run_timeline(initial, ensemble, schedule, opt.sample_dt, cfg);
        fid = fidelity(initial, result.final_state);
        final_norm = result.final_state.norm();
        series = std::move(result.series);
        final_state.sectors.push_back(std::move(result.final_state));
    }

    write_file(opt.output, csv_to_string(series, header));
    std::cout << "rows = " << series.rows() << "\n";
    std::cout << "final_norm = " << format_sci(final_norm) << "\n";
    std::cout << "fidelity_vs_initial = " << format_sci(fid) << "\n";
    if (!opt.final_state_path.empty()) {
        write_file(opt.final_state_path,
                   final_state_json(final_state, fid, gamma, tau_d_value).dump(2) + "\n");
        std::cout << "wrote " << opt.final_state_path << "\n";
    }
    std::cout << "wrote " << opt.output << "\n";
    return kExitOk;
}

// ---------------------------------------------------------------------------
// oracle
// ---------------------------------------------------------------------------

struct OracleOptions {
    double gamma = 1.0;
    std::string scenario = "free";
    double tau = 0.0;
    double t_end = 3.0;
    double sample_dt = 0.01;
    std::string output;
};

int run_oracle(const OracleOptions& opt) {
    if (!(opt.gamma > 0.0)) throw InputError("oracle needs gamma > 0");
    if (!(opt.t_end > 0.0)) throw InputError("oracle needs t-end > 0");
    if (!(opt.sample_dt > 0.0)) throw InputError("oracle needs sample-dt > 0");

    enum class Scenario { free_decay, j0, fast } scenario;
    if (opt.scenario == "free") {
        scenario = Scenario::free_decay;
    } else if (opt.scenario == "j0") {
        scenario = Scenario::j0;
        if (!(opt.tau > 0.0)) throw InputError("scenario j0 needs --tau > 0");
    } else if (opt.scenario == "fast") {
        scenario = Scenario::fast;
    } else {
        throw InputError("unknown oracle scenario '" + opt.scenario + "'");
    }

    const double td = oracle::tau_d(opt.gamma);
    TimeSeries series;
    const auto steps = std::max<long>(1, std::lround(opt.t_end / opt.sample_dt));
    const double step = opt.t_end / static_cast<double>(steps);
    for (long k = 0; k <= steps; ++k) {
        const double t = (k == steps) ? opt.t_end : static_cast<double>(k) * step;
        double c = 0.0;
        double p_atoms = 0.0;
        switch (scenario) {
            case Scenario::free_decay:
                c = oracle::cph_free_decay(t, opt.gamma);
                p_atoms = 1.0 - c * c;
                break;
            case Scenario::j0:
                c = (t < opt.tau) ? oracle::cph_free_decay(t, opt.gamma)
                                  : oracle::cph_j0(t, opt.tau, opt.gamma);
                p_atoms = 1.0 - c * c;
                break;
            case Scenario::fast:
                c = oracle::cph_fast_absorption(t, opt.gamma);
                p_atoms = (t < td) ? 1.0 - c * c
                                   : oracle::p_atoms_fast_absorption(t, opt.gamma);
                break;
        }
        series.t.push_back(t);
        series.cph.emplace_back(c, 0.0);
        series.p_atoms.push_back(p_atoms);
        series.norm.push_back(c * c + p_atoms);
    }

    json header;
    header["tool"] = "qecho oracle";
    header["version"] = kVersion;
    header["gamma"] = opt.gamma;
    header["tau_d"] = td;
    header["scenario"] = opt.scenario;
    if (scenario == Scenario::j0) header["tau"] = opt.tau;
    header["t_end"] = opt.t_end;
    header["sample_dt"] = opt.sample_dt;

    write_file(opt.output, csv_to_string(series, header));
    std::cout << "qecho oracle v" << kVersion << "\n";
    std::cout << "gamma = " << format_sci(opt.gamma) << "\n";
    std::cout << "tau_d = " << format_sci(td) << "\n";
    std::cout << "rows = " << series.rows() << "\n";
    std::cout << "wrote " << opt.output << "\n";
    return kExitOk;
}

// ---------------------------------------------------------------------------
// fig1
// ---------------------------------------------------------------------------

struct Fig1Options {
    EnsembleFlags ensemble;
    StepperFlags stepper;
    double sample_dt_tau_d = 1.0 / 200.0;  // sample step in tau_D units
    std::string output;
    std::string final_state_path;
};

constexpr const char* kFig1Schedule =
    "unit tauD\n"
    "J0 at 1.0\n"
    "J2PI at 5.0\n"
    "J0 at 9.0\n"
    "end at 12.0\n";

int run_fig1(const Fig1Options& opt) {
    const EnsembleFlags& flags = opt.ensemble;
    const bool all_defaults = flags.preset.empty() && flags.coupling.empty() &&
                              flags.n_atoms == 400 && flags.kind == "comb" &&
                              flags.width == 100.0 && flags.width3 < 0.0 && !flags.seed;
    const auto ensemble = all_defaults ? reference_ensemble() : build_ensemble(flags);

    const double gamma = decay_rate(ensemble);
    if (!(gamma > 0.0)) throw InputError("fig1 needs an ensemble with gamma > 0");
    const double td = oracle::tau_d(gamma);
    const auto schedule = parse_protocol(kFig1Schedule).resolved(td);
    const double sample_dt = opt.sample_dt_tau_d * td;

    const auto report = validity(ensemble, schedule.end_time);
    std::cout << "qecho fig1 v" << kVersion << "\n";
    std::cout << "gamma = " << format_sci(gamma) << "\n";
    std::cout << "tau_d = " << format_sci(td) << "\n";
    print_warnings(report);

    auto basis = std::make_shared<const BasisIndex>(
        BasisIndex::enumerate(ensemble.n_atoms, 1, false));
    const auto initial = QuantumState::full_photon(basis);  // single photon in
    const auto result =
        run_timeline(initial, ensemble, schedule, sample_dt, opt.stepper.config());
    const auto& s = result.series;

    // Checkpoints: stored field stays dark between the fast absorption and the
    // retrieval kick; re-emission begins near the end of the mirror-symmetric
    // dark window; the input state returns at t = 10 tau_D.
    double dark_max = 0.0;
    for (std::size_t i = 0; i < s.rows(); ++i) {
        if (s.t[i] > 2.0 * td && s.t[i] < 5.0 * td) {
            dark_max = std::max(dark_max, std::abs(s.cph[i]));
        }
    }
    double onset = -1.0;
    for (std::size_t i = 0; i < s.rows(); ++i) {
        if (s.t[i] > 5.0 * td && std::abs(s.cph[i]) > 0.05) {
            onset = s.t[i];
            break;
        }
    }
    const double recovered = std::abs(s.cph[s.row_nearest(10.0 * td)]);

    const bool dark_ok = dark_max <= 0.02;
    const bool onset_ok = onset > 6.0 * td && onset <= 8.25 * td;
    const bool recovery_ok = recovered >= 0.98;

    std::cout << "check dark_window: max|c_ph| on (2,5)tau_D = " << format_sci(dark_max)
              << (dark_ok ? "  [ok <= 0.02]" : "  [FAIL > 0.02]") << "\n";
    std::cout << "check emission_onset: t/tau_D = "
              << (onset < 0.0 ? std::string("none") : format_sci(onset / td))
              << (onset_ok ? "  [ok in (6, 8.25]]" : "  [FAIL outside (6, 8.25]]") << "\n";
    std::cout << "check recovery: |c_ph(10 tau_D)| = " << format_sci(recovered)
              << (recovery_ok ? "  [ok >= 0.98]" : "  [FAIL < 0.98]") << "\n";
    std::cout << "fidelity_at_10tau_d = " << format_sci(recovered * recovered) << "\n";

    json header;
    header["tool"] = "qecho fig1";
    header["version"] = kVersion;
    header["ensemble"] = ensemble_json(ensemble);
    header["gamma"] = gamma;
    header["tau_d"] = td;
    header["schedule"] = "builtin: J0 at tau_D, J2PI at 5 tau_D, J0 at 9 tau_D, end 12 tau_D";
    header["sample_dt"] = sample_dt;
    header["stepper"] = opt.stepper.to_json();
    header["warnings"] = report.warnings;
    write_file(opt.output, csv_to_string(s, header));

    if (!opt.final_state_path.empty()) {
        SectorState fs;
        fs.sectors.push_back(result.final_state);
        write_file(opt.final_state_path,
                   final_state_json(fs, fidelity(initial, result.final_state), gamma, td)
                           .dump(2) +
                       "\n");
    }
    std::cout << "wrote " << opt.output << "\n";
    return (dark_ok && onset_ok && recovery_ok) ? kExitOk : kExitToleranceFailure;
}

// ---------------------------------------------------------------------------
// sweep
// ---------------------------------------------------------------------------

struct SweepOptions {
    EnsembleFlags ensemble;
    StepperFlags stepper;
    std::string protocol = "j0";
    std::vector<double> gamma_tau;
    std::vector<double> tau;
    double sample_dt = 0.0;  // 0: tau/200 per point
    std::string output;
};

struct SweepRow {
    double gamma_tau;
    double tau;
    std::complex<double> echo;
    double p_atoms;
    double fidelity_value;
};

int run_sweep(const SweepOptions& opt) {
    if (opt.protocol != "j0" && opt.protocol != "j2pi") {
        throw InputError("sweep protocol must be j0 or j2pi");
    }
    if (opt.gamma_tau.empty() == opt.tau.empty()) {
        throw InputError("give exactly one sweep axis: --gamma-tau or --tau");
    }
    const auto ensemble = build_ensemble(opt.ensemble);
    const double gamma = decay_rate(ensemble);
    if (!(gamma > 0.0)) throw InputError("sweep needs an ensemble with gamma > 0");

    std::vector<double> taus;
    if (!opt.tau.empty()) {
        taus = opt.tau;
    } else {
        for (double gt : opt.gamma_tau) taus.push_back(gt / gamma);
    }
    for (double tau : taus) {
        if (!(tau > 0.0)) throw InputError("sweep points must be positive delays");
    }

    const auto kind = (opt.protocol == "j0") ? EventKind::frequency_inversion
                                             : EventKind::j2pi_composite;
    const auto cfg = opt.stepper.config();

    auto basis = std::make_shared<const BasisIndex>(
        BasisIndex::enumerate(ensemble.n_atoms, 1, false));
    const auto initial = QuantumState::full_photon(basis);

    const auto run_point = [&](double tau) {
        ProtocolSchedule schedule;
        schedule.events.push_back({tau, kind, 0.0, 0.0, {}});
        schedule.end_time = 2.0 * tau;
        const double dt = (opt.sample_dt > 0.0) ? opt.sample_dt : tau / 200.0;
        const auto result = run_timeline(initial, ensemble, schedule, dt, cfg);
        SweepRow row;
        row.gamma_tau = gamma * tau;
        row.tau = tau;
        row.echo = full_photon_amplitude(result.final_state);
        row.p_atoms = atomic_excitation_probability(result.final_state);
        row.fidelity_value = fidelity(initial, result.final_state);
        return row;
    };

    // Points are independent; evaluate concurrently, emit in input order.
    std::vector<std::future<SweepRow>> futures;
    futures.reserve(taus.size());
    for (double tau : taus) {
        futures.push_back(std::async(std::launch::async, run_point, tau));
    }
    std::vector<SweepRow> rows;
    rows.reserve(taus.size());
    for (auto& f : futures) rows.push_back(f.get());

    json header;
    header["tool"] = "qecho sweep";
    header["version"] = kVersion;
    header["ensemble"] = ensemble_json(ensemble);
    header["gamma"] = gamma;
    header["tau_d"] = oracle::tau_d(gamma);
    header["protocol"] = opt.protocol;
    header["stepper"] = opt.stepper.to_json();

    std::ostringstream out;
    out << "# header-json:" << header.dump() << "\n";
    out << "gamma_tau,tau,echo_re,echo_im,echo_abs,echo_phase,p_atoms,fidelity\n";
    for (const auto& row : rows) {
        out << format_sci(row.gamma_tau) << ',' << format_sci(row.tau) << ','
            << format_sci(row.echo.real()) << ',' << format_sci(row.echo.imag()) << ','
            << format_sci(std::abs(row.echo)) << ',' << format_sci(std::arg(row.echo)) << ','
            << format_sci(row.p_atoms) << ',' << format_sci(row.fidelity_value) << "\n";
    }
    write_file(opt.output, out.str());

    std::cout << "qecho sweep v" << kVersion << "\n";
    std::cout << "gamma = " << format_sci(gamma) << "\n";
    std::cout << "points = " << rows.size() << "\n";
    std::cout << "wrote " << opt.output << "\n";
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Cavity photon-echo quantum-memory simulator"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string("qecho ") + kVersion);

    SimulateOptions sim;
    auto* simulate = app.add_subcommand("simulate", "run a schedule on an ensemble");
    sim.ensemble.attach(simulate);
    sim.stepper.attach(simulate);
    simulate->add_option("--initial", sim.initial, "fock:<n> or superposition:<c0>,<c1>,...");
    simulate->add_option("--schedule", sim.schedule_path, "protocol schedule file")->required();
    simulate->add_option("--sample-dt", sim.sample_dt, "sampling step")
        ->check(CLI::PositiveNumber);
    simulate->add_option("--output", sim.output, "CSV output path")->required();
    simulate->add_option("--final-state", sim.final_state_path, "final-state JSON path");
    simulate->add_option("--dimension-cap", sim.dimension_cap, "largest allowed sector");

    OracleOptions orc;
    auto* oracle_cmd = app.add_subcommand("oracle", "emit closed-form curves");
    oracle_cmd->add_option("--gamma", orc.gamma, "decay rate")->required();
    oracle_cmd->add_option("--scenario", orc.scenario, "free|j0|fast")->required();
    oracle_cmd->add_option("--tau", orc.tau, "inversion delay (j0 scenario)");
    oracle_cmd->add_option("--t-end", orc.t_end, "end time")->required();
    oracle_cmd->add_option("--sample-dt", orc.sample_dt, "sampling step");
    oracle_cmd->add_option("--output", orc.output, "CSV output path")->required();

    Fig1Options fig;
    auto* fig1 = app.add_subcommand("fig1", "storage, hold and retrieval reference run");
    fig.ensemble.attach(fig1);
    fig.stepper.attach(fig1);
    fig1->add_option("--sample-dt-taud", fig.sample_dt_tau_d, "sample step in tau_D units")
        ->check(CLI::PositiveNumber);
    fig1->add_option("--output", fig.output, "CSV output path")->required();
    fig1->add_option("--final-state", fig.final_state_path, "final-state JSON path");

    SweepOptions swp;
    auto* sweep = app.add_subcommand("sweep", "echo quality across delays");
    swp.ensemble.attach(sweep);
    swp.stepper.attach(sweep);
    sweep->add_option("--protocol", swp.protocol, "j0|j2pi")->required();
    sweep->add_option("--gamma-tau", swp.gamma_tau, "delays as gamma*tau values")
        ->delimiter(',');
    sweep->add_option("--tau", swp.tau, "delays in absolute time")->delimiter(',');
    sweep->add_option("--sample-dt", swp.sample_dt, "sampling step (default tau/200)");
    sweep->add_option("--output", swp.output, "CSV output path")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitInputError;
    }

    try {
        if (simulate->parsed()) return run_simulate(sim);
        if (oracle_cmd->parsed()) return run_oracle(orc);
        if (fig1->parsed()) return run_fig1(fig);
        if (sweep->parsed()) return run_sweep(swp);
    } catch (const StepperError& e) {
        std::cerr << "numerical failure: " << e.what() << "\n";
        return kExitToleranceFailure;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    }
    return kExitInputError;
}
