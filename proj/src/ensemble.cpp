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

#include "qecho/ensemble.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <random>
#include <stdexcept>

namespace qecho {

std::string to_string(DistributionKind kind) {
    switch (kind) {
        case DistributionKind::comb: return "comb";
        case DistributionKind::gaussian: return "gaussian";
        case DistributionKind::lorentzian: return "lorentzian";
    }
    return "unknown";
}

DistributionKind distribution_kind_from_string(const std::string& name) {
    if (name == "comb") return DistributionKind::comb;
    if (name == "gaussian") return DistributionKind::gaussian;
    if (name == "lorentzian") return DistributionKind::lorentzian;
    throw std::invalid_argument("unknown distribution kind: '" + name + "'");
}

EnsembleSpec make_comb(int n_atoms, double total_width, std::complex<double> coupling,
                       double width3) {
    if (n_atoms < 2) {
        throw std::invalid_argument("make_comb: need at least 2 atoms");
    }
    if (!(total_width > 0.0)) {
        throw std::invalid_argument("make_comb: total_width must be positive");
    }
    EnsembleSpec e;
    e.n_atoms = n_atoms;
    e.couplings.assign(static_cast<std::size_t>(n_atoms), coupling);
    e.detunings2.resize(static_cast<std::size_t>(n_atoms));
    e.detunings3.resize(static_cast<std::size_t>(n_atoms));
    for (int j = 0; j < n_atoms; ++j) {
        const double frac = (static_cast<double>(j) + 0.5) / static_cast<double>(n_atoms);
        e.detunings2[static_cast<std::size_t>(j)] = -0.5 * total_width + frac * total_width;
        e.detunings3[static_cast<std::size_t>(j)] =
            e.detunings2[static_cast<std::size_t>(j)] * (width3 / total_width);
    }
    e.meta.kind = DistributionKind::comb;
    e.meta.width = total_width;
    e.meta.g2_at_zero = 1.0 / total_width;
    return e;
}

EnsembleSpec make_comb(int n_atoms, double total_width, std::complex<double> coupling) {
    return make_comb(n_atoms, total_width, coupling, total_width);
}

EnsembleSpec sample_random(int n_atoms, DistributionKind kind, double width,
                           std::complex<double> coupling, std::uint64_t seed) {
    if (n_atoms < 1) {
        throw std::invalid_argument("sample_random: need at least 1 atom");
    }
    if (!(width > 0.0)) {
        throw std::invalid_argument("sample_random: width must be positive");
    }
    if (kind == DistributionKind::comb) {
        throw std::invalid_argument("sample_random: the comb is deterministic, use make_comb");
    }
    EnsembleSpec e;
    e.n_atoms = n_atoms;
    e.couplings.assign(static_cast<std::size_t>(n_atoms), coupling);
    e.detunings2.resize(static_cast<std::size_t>(n_atoms));

    std::mt19937_64 rng(seed);
    if (kind == DistributionKind::gaussian) {
        std::normal_distribution<double> dist(0.0, width);
        for (auto& d : e.detunings2) d = dist(rng);
        e.meta.g2_at_zero = 1.0 / (width * std::sqrt(2.0 * std::numbers::pi));
    } else {
        std::cauchy_distribution<double> dist(0.0, width);  // width = HWHM
        for (auto& d : e.detunings2) d = dist(rng);
        e.meta.g2_at_zero = 1.0 / (std::numbers::pi * width);
    }
    e.detunings3 = e.detunings2;
    e.meta.kind = kind;
    e.meta.width = width;
    e.meta.seed = seed;
    return e;
}

double mean_square_coupling(const EnsembleSpec& ensemble) {
    double sum = 0.0;
    for (const auto& g : ensemble.couplings) sum += std::norm(g);
    return sum / static_cast<double>(ensemble.n_atoms);
}

double decay_rate(const EnsembleSpec& ensemble) {
    if (!(ensemble.meta.g2_at_zero > 0.0)) {
        throw std::invalid_argument("decay_rate: G2(0) is not set on this ensemble");
    }
    return std::numbers::pi * static_cast<double>(ensemble.n_atoms) *
           mean_square_coupling(ensemble) * ensemble.meta.g2_at_zero;
}

EnsembleSpec invert_detunings(const EnsembleSpec& ensemble) {
    EnsembleSpec flipped = ensemble;
    for (auto& d : flipped.detunings2) d = -d;
    return flipped;
}

double recurrence_time(const EnsembleSpec& ensemble) {
    if (ensemble.meta.kind == DistributionKind::comb && ensemble.meta.width > 0.0) {
        return 2.0 * std::numbers::pi * static_cast<double>(ensemble.n_atoms) /
               ensemble.meta.width;
    }
    return std::numeric_limits<double>::infinity();
}

ValidityReport validity(const EnsembleSpec& ensemble, double t_max) {
    ValidityReport report;
    report.delta_in = ensemble.meta.width;
    report.t_recurrence = recurrence_time(ensemble);
    if (ensemble.meta.width > 0.0) {
        report.t_min_valid = 5.0 / ensemble.meta.width;
    } else {
        report.t_min_valid = std::numeric_limits<double>::infinity();
        report.warnings.push_back(
            "inhomogeneous width is zero: no dephasing, the memory protocol cannot store");
    }
    if (ensemble.meta.g2_at_zero > 0.0) {
        report.gamma = decay_rate(ensemble);
        report.tau_d = std::log(2.0) / (2.0 * report.gamma);
        if (ensemble.meta.width > 0.0 && report.gamma > 0.1 * ensemble.meta.width) {
            report.warnings.push_back(
                "gamma is not small against the inhomogeneous width (gamma/width = " +
                std::to_string(report.gamma / ensemble.meta.width) +
                "); the exponential decay law degrades");
        }
    }
    if (t_max > 0.5 * report.t_recurrence) {
        report.warnings.push_back(
            "run extends past half the comb recurrence time (T_rec = " +
            std::to_string(report.t_recurrence) +
            "); comb revivals invalidate the continuous-distribution decay law");
    }
    return report;
}

}  // namespace qecho
