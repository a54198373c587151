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

#include "qecho/oracle.hpp"

#include <cmath>
#include <stdexcept>

namespace qecho::oracle {

double cph_free_decay(double t, double gamma) {
    if (t < 0.0) throw std::invalid_argument("cph_free_decay: t must be >= 0");
    return std::exp(-gamma * t);
}

std::complex<double> cj_free_decay(double t, double delta, std::complex<double> g,
                                   double gamma) {
    if (t < 0.0) throw std::invalid_argument("cj_free_decay: t must be >= 0");
    const std::complex<double> i(0.0, 1.0);
    const std::complex<double> pole = i * delta - gamma;
    const std::complex<double> phase = std::exp(-i * delta * t);
    if (std::abs(pole) * t < 1e-8) {
        // Degenerate pole: the integral tends to t (1 + pole t / 2 + ...).
        return i * g * phase * t * (1.0 + 0.5 * pole * t);
    }
    return i * g * phase * (std::exp(pole * t) - 1.0) / pole;
}

double cph_j0(double t, double tau, double gamma) {
    if (t < tau) {
        throw std::invalid_argument("cph_j0: formula applies for t >= tau; use cph_free_decay");
    }
    return 2.0 * std::exp(-gamma * t) - std::exp(-gamma * std::abs(t - 2.0 * tau));
}

double tau_d(double gamma) {
    if (!(gamma > 0.0)) throw std::invalid_argument("tau_d: gamma must be positive");
    return std::log(2.0) / (2.0 * gamma);
}

double cph_fast_absorption(double t, double gamma) {
    if (t < 0.0) throw std::invalid_argument("cph_fast_absorption: t must be >= 0");
    const double td = tau_d(gamma);
    if (t <= td) return cph_free_decay(t, gamma);
    if (t < 2.0 * td) return 2.0 * std::exp(-gamma * t) - 0.5 * std::exp(gamma * t);
    return 0.0;
}

double p_atoms_fast_absorption(double t, double gamma) {
    const double td = tau_d(gamma);
    if (t < td) {
        throw std::invalid_argument("p_atoms_fast_absorption: defined for t >= tau_D");
    }
    if (t < 2.0 * td) {
        return 3.0 - (4.0 * std::exp(-2.0 * gamma * t) + 0.25 * std::exp(2.0 * gamma * t));
    }
    return 1.0;
}

double p_atoms_j0_echo(double tau, double gamma) {
    if (tau < 0.0) throw std::invalid_argument("p_atoms_j0_echo: tau must be >= 0");
    const double x = std::exp(-2.0 * gamma * tau);
    return 4.0 * x * (1.0 - x);
}

std::vector<std::complex<double>> multiphoton_echo_map(
    std::span<const std::complex<double>> field_amplitudes) {
    std::vector<std::complex<double>> out(field_amplitudes.begin(), field_amplitudes.end());
    for (std::size_t n = 1; n < out.size(); n += 2) {
        out[n] = -out[n];
    }
    return out;
}

std::complex<double> dephasing_kernel(const EnsembleSpec& ensemble, double s) {
    std::complex<double> sum(0.0, 0.0);
    for (int j = 0; j < ensemble.n_atoms; ++j) {
        const auto k = static_cast<std::size_t>(j);
        sum += std::norm(ensemble.couplings[k]) *
               std::exp(std::complex<double>(0.0, ensemble.detunings2[k] * s));
    }
    return sum;
}

}  // namespace qecho::oracle
