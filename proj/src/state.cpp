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

#include "qecho/state.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace qecho {

QuantumState::QuantumState(std::shared_ptr<const BasisIndex> basis,
                           Eigen::VectorXcd amplitudes)
    : basis_(std::move(basis)), amplitudes_(std::move(amplitudes)) {
    if (!basis_) {
        throw std::invalid_argument("QuantumState: null basis");
    }
    if (static_cast<std::size_t>(amplitudes_.size()) != basis_->dimension()) {
        throw std::invalid_argument("QuantumState: amplitude count " +
                                    std::to_string(amplitudes_.size()) +
                                    " does not match basis dimension " +
                                    std::to_string(basis_->dimension()));
    }
}

QuantumState QuantumState::full_photon(std::shared_ptr<const BasisIndex> basis) {
    Eigen::VectorXcd amps = Eigen::VectorXcd::Zero(static_cast<Eigen::Index>(basis->dimension()));
    amps(0) = 1.0;
    return QuantumState(std::move(basis), std::move(amps));
}

QuantumState QuantumState::normalized() const {
    const double n = norm();
    if (n == 0.0) {
        throw std::invalid_argument("QuantumState: cannot normalize the zero vector");
    }
    return QuantumState(basis_, amplitudes_ / n);
}

QuantumState QuantumState::with_amplitudes(Eigen::VectorXcd amplitudes) const {
    return QuantumState(basis_, std::move(amplitudes));
}

std::complex<double> photon_amplitude(const QuantumState& state) {
    if (state.basis().n_exc() != 1) {
        throw std::invalid_argument("photon_amplitude: state is not in the n_exc=1 sector");
    }
    return state.amplitudes()(0);
}

std::complex<double> full_photon_amplitude(const QuantumState& state) {
    return state.amplitudes()(0);
}

double atomic_excitation_probability(const QuantumState& state) {
    double p = 0.0;
    const auto& basis = state.basis();
    for (std::size_t i = 0; i < basis.dimension(); ++i) {
        if (!basis.state_at(i).excited.empty()) {
            p += std::norm(state.amplitudes()(static_cast<Eigen::Index>(i)));
        }
    }
    return std::clamp(p, 0.0, 1.0);
}

double level3_population(const QuantumState& state) {
    double p = 0.0;
    const auto& basis = state.basis();
    for (std::size_t i = 0; i < basis.dimension(); ++i) {
        const auto& excited = basis.state_at(i).excited;
        const bool has3 = std::any_of(excited.begin(), excited.end(),
                                      [](const auto& e) { return e.second == 3; });
        if (has3) {
            p += std::norm(state.amplitudes()(static_cast<Eigen::Index>(i)));
        }
    }
    return p;
}

std::complex<double> inner_product(const QuantumState& a, const QuantumState& b) {
    if (!a.basis().compatible_with(b.basis())) {
        throw std::invalid_argument("inner_product: basis mismatch");
    }
    return a.amplitudes().dot(b.amplitudes());  // conjugates the left factor
}

double fidelity(const QuantumState& a, const QuantumState& b) {
    return std::norm(inner_product(a, b));
}

double norm_distance(const QuantumState& a, const QuantumState& b) {
    if (!a.basis().compatible_with(b.basis())) {
        throw std::invalid_argument("norm_distance: basis mismatch");
    }
    return (a.amplitudes() - b.amplitudes()).norm();
}

double phase_invariant_distance(const QuantumState& a, const QuantumState& b) {
    const double overlap = std::abs(inner_product(a, b));
    const double d2 = a.amplitudes().squaredNorm() + b.amplitudes().squaredNorm() - 2.0 * overlap;
    return std::sqrt(std::max(d2, 0.0));
}

std::vector<std::pair<int, double>> photon_number_distribution(const QuantumState& state) {
    std::vector<double> prob(static_cast<std::size_t>(state.basis().n_exc()) + 1, 0.0);
    const auto& basis = state.basis();
    for (std::size_t i = 0; i < basis.dimension(); ++i) {
        prob[static_cast<std::size_t>(basis.state_at(i).photon_count)] +=
            std::norm(state.amplitudes()(static_cast<Eigen::Index>(i)));
    }
    std::vector<std::pair<int, double>> result;
    result.reserve(prob.size());
    for (std::size_t n = 0; n < prob.size(); ++n) {
        result.emplace_back(static_cast<int>(n), prob[n]);
    }
    return result;
}

double total_norm(const SectorState& s) {
    double sq = 0.0;
    for (const auto& sector : s.sectors) sq += sector.amplitudes().squaredNorm();
    return std::sqrt(sq);
}

double atomic_excitation_probability(const SectorState& s) {
    double p = 0.0;
    for (const auto& sector : s.sectors) {
        const auto& basis = sector.basis();
        for (std::size_t i = 0; i < basis.dimension(); ++i) {
            if (!basis.state_at(i).excited.empty()) {
                p += std::norm(sector.amplitudes()(static_cast<Eigen::Index>(i)));
            }
        }
    }
    return std::clamp(p, 0.0, 1.0);
}

std::vector<std::pair<int, double>> photon_number_distribution(const SectorState& s) {
    int n_top = 0;
    for (const auto& sector : s.sectors) n_top = std::max(n_top, sector.basis().n_exc());
    std::vector<double> prob(static_cast<std::size_t>(n_top) + 1, 0.0);
    for (const auto& sector : s.sectors) {
        const auto& basis = sector.basis();
        for (std::size_t i = 0; i < basis.dimension(); ++i) {
            prob[static_cast<std::size_t>(basis.state_at(i).photon_count)] +=
                std::norm(sector.amplitudes()(static_cast<Eigen::Index>(i)));
        }
    }
    std::vector<std::pair<int, double>> result;
    result.reserve(prob.size());
    for (std::size_t n = 0; n < prob.size(); ++n) {
        result.emplace_back(static_cast<int>(n), prob[n]);
    }
    return result;
}

}  // namespace qecho
