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

#ifndef QECHO_STATE_HPP
#define QECHO_STATE_HPP

#include <complex>
#include <map>
#include <memory>
#include <vector>

#include <Eigen/Dense>

#include "qecho/basis.hpp"

namespace qecho {

// Complex amplitude vector over one BasisIndex. Immutable value type:
// every operation returns a new state.
class QuantumState {
public:
    QuantumState(std::shared_ptr<const BasisIndex> basis, Eigen::VectorXcd amplitudes);

    // All photons in the field, every atom in the ground level (amplitude 1
    // on the canonical index-0 state).
    static QuantumState full_photon(std::shared_ptr<const BasisIndex> basis);

    const BasisIndex& basis() const { return *basis_; }
    const std::shared_ptr<const BasisIndex>& basis_ptr() const { return basis_; }
    const Eigen::VectorXcd& amplitudes() const { return amplitudes_; }
    std::size_t dimension() const { return static_cast<std::size_t>(amplitudes_.size()); }

    double norm() const { return amplitudes_.norm(); }
    QuantumState normalized() const;
    QuantumState with_amplitudes(Eigen::VectorXcd amplitudes) const;

private:
    std::shared_ptr<const BasisIndex> basis_;
    Eigen::VectorXcd amplitudes_;
};

// Amplitude of the pure-photon basis state of the single-excitation sector
// (the c_ph coefficient). Throws std::invalid_argument outside n_exc = 1.
std::complex<double> photon_amplitude(const QuantumState& state);

// Amplitude of the all-photon, atoms-ground state of any sector.
std::complex<double> full_photon_amplitude(const QuantumState& state);

// Probability that at least one atom is excited. In the single-excitation
// sector this is exactly sum_j |c_j|^2.
double atomic_excitation_probability(const QuantumState& state);

// Probability carried by basis states with at least one atom in level 3.
double level3_population(const QuantumState& state);

// |<a|b>|^2. Throws std::invalid_argument on basis mismatch.
double fidelity(const QuantumState& a, const QuantumState& b);
std::complex<double> inner_product(const QuantumState& a, const QuantumState& b);

// Euclidean distance between amplitude vectors.
double norm_distance(const QuantumState& a, const QuantumState& b);
// Distance minimized over a global phase: sqrt(2(|a||b| - |<a|b>|)) for unit states.
double phase_invariant_distance(const QuantumState& a, const QuantumState& b);

// Marginal photon-number probabilities (n = 0..n_exc, zeros included).
std::vector<std::pair<int, double>> photon_number_distribution(const QuantumState& state);

// Direct sum of excitation sectors n = 0..n_max. Component amplitudes carry
// the field coefficients C_n, so the total squared norm is 1 for a
// normalized field input.
struct SectorState {
    std::vector<QuantumState> sectors;
};

double total_norm(const SectorState& s);
double atomic_excitation_probability(const SectorState& s);
std::vector<std::pair<int, double>> photon_number_distribution(const SectorState& s);

}  // namespace qecho

#endif
