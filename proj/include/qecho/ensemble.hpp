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

#ifndef QECHO_ENSEMBLE_HPP
#define QECHO_ENSEMBLE_HPP

#include <complex>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace qecho {

enum class DistributionKind { comb, gaussian, lorentzian };

std::string to_string(DistributionKind kind);
DistributionKind distribution_kind_from_string(const std::string& name);

struct DistributionMeta {
    DistributionKind kind = DistributionKind::comb;
    // Comb: total width W. Gaussian: sigma. Lorentzian: HWHM.
    double width = 0.0;
    // Spectral density of the memory transition at zero detuning.
    double g2_at_zero = 0.0;
    std::optional<std::uint64_t> seed;
};

// Static description of the atomic ensemble: per-atom cavity couplings g_j
// and detunings of the cavity-coupled transition (detunings2) and of the
// control transition (detunings3). All energies are angular frequencies
// (hbar = 1); time is measured in inverse angular-frequency units.
struct EnsembleSpec {
    int n_atoms = 0;
    std::vector<std::complex<double>> couplings;
    std::vector<double> detunings2;
    std::vector<double> detunings3;
    DistributionMeta meta;
};

// Deterministic midpoint comb spanning [-W/2, W/2]: delta_j = -W/2 + (j+1/2)W/N.
// Couplings are uniform. detunings3 form the same comb rescaled to width3.
EnsembleSpec make_comb(int n_atoms, double total_width, std::complex<double> coupling,
                       double width3);
// width3 defaults to total_width (fully correlated broadenings).
EnsembleSpec make_comb(int n_atoms, double total_width, std::complex<double> coupling);

// Random detunings, reproducible for a fixed seed. detunings3 = detunings2.
EnsembleSpec sample_random(int n_atoms, DistributionKind kind, double width,
                           std::complex<double> coupling, std::uint64_t seed);

// Mean squared coupling (1/N) sum_j |g_j|^2.
double mean_square_coupling(const EnsembleSpec& ensemble);

// Collective absorption rate gamma = pi N <|g|^2> G2(0).
double decay_rate(const EnsembleSpec& ensemble);

// delta2_j -> -delta2_j for every atom; couplings and detunings3 unchanged.
EnsembleSpec invert_detunings(const EnsembleSpec& ensemble);

// Revival period of the finite comb, 2 pi N / W; +inf for random ensembles.
double recurrence_time(const EnsembleSpec& ensemble);

// Model-validity bookkeeping for a run of duration t_max. Comparisons against
// the closed-form decay law are only meaningful inside this window.
struct ValidityReport {
    double gamma = 0.0;
    double tau_d = 0.0;
    double delta_in = 0.0;        // inhomogeneous width of the memory transition
    double t_recurrence = 0.0;    // +inf when no exact recurrence exists
    double t_min_valid = 0.0;     // decay law needs t >> 1/delta_in
    std::vector<std::string> warnings;
};

ValidityReport validity(const EnsembleSpec& ensemble, double t_max);

}  // namespace qecho

#endif
