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

#include "qecho/hamiltonian.hpp"

#include <cmath>
#include <stdexcept>

namespace qecho {

HamiltonianMatrix::HamiltonianMatrix(Eigen::VectorXd diagonal,
                                     std::vector<OffDiagonal> off_diagonals)
    : diagonal_(std::move(diagonal)), off_diagonals_(std::move(off_diagonals)) {
    for (const auto& entry : off_diagonals_) {
        if (entry.row >= dimension() || entry.col >= dimension() || entry.row >= entry.col) {
            throw std::invalid_argument("HamiltonianMatrix: off-diagonal entry out of order");
        }
    }
}

Eigen::VectorXcd HamiltonianMatrix::apply(const Eigen::VectorXcd& x) const {
    if (static_cast<std::size_t>(x.size()) != dimension()) {
        throw std::invalid_argument("HamiltonianMatrix::apply: dimension mismatch");
    }
    Eigen::VectorXcd y = diagonal_.cast<std::complex<double>>().cwiseProduct(x);
    for (const auto& entry : off_diagonals_) {
        const auto r = static_cast<Eigen::Index>(entry.row);
        const auto c = static_cast<Eigen::Index>(entry.col);
        y(r) += entry.value * x(c);
        y(c) += std::conj(entry.value) * x(r);
    }
    return y;
}

Eigen::MatrixXcd HamiltonianMatrix::dense() const {
    const auto n = static_cast<Eigen::Index>(dimension());
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(n, n);
    m.diagonal() = diagonal_.cast<std::complex<double>>();
    for (const auto& entry : off_diagonals_) {
        const auto r = static_cast<Eigen::Index>(entry.row);
        const auto c = static_cast<Eigen::Index>(entry.col);
        m(r, c) += entry.value;
        m(c, r) += std::conj(entry.value);
    }
    return m;
}

double HamiltonianMatrix::spectral_radius_bound() const {
    Eigen::VectorXd row_sum = diagonal_.cwiseAbs();
    for (const auto& entry : off_diagonals_) {
        const double v = std::abs(entry.value);
        row_sum(static_cast<Eigen::Index>(entry.row)) += v;
        row_sum(static_cast<Eigen::Index>(entry.col)) += v;
    }
    return row_sum.size() > 0 ? row_sum.maxCoeff() : 0.0;
}

HamiltonianMatrix build_hamiltonian(const EnsembleSpec& ensemble, const BasisIndex& basis,
                                    CouplingSign sign,
                                    const std::optional<ControlField>& control) {
    const int n_atoms = basis.n_atoms();
    if (ensemble.n_atoms != n_atoms ||
        ensemble.couplings.size() != static_cast<std::size_t>(n_atoms) ||
        ensemble.detunings2.size() != static_cast<std::size_t>(n_atoms)) {
        throw std::invalid_argument("build_hamiltonian: ensemble/basis atom count mismatch");
    }
    if (control && !basis.three_level()) {
        throw std::invalid_argument("build_hamiltonian: control field needs a three-level basis");
    }
    if (basis.three_level() && ensemble.detunings3.size() != static_cast<std::size_t>(n_atoms)) {
        throw std::invalid_argument("build_hamiltonian: detunings3 missing for three-level basis");
    }
    if (control && !control->phases.empty() &&
        control->phases.size() != static_cast<std::size_t>(n_atoms)) {
        throw std::invalid_argument("build_hamiltonian: control phases must have one entry per atom");
    }

    const double exchange_sign = (sign == CouplingSign::minus) ? -1.0 : 1.0;
    const auto dim = basis.dimension();
    Eigen::VectorXd diagonal = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(dim));
    std::vector<HamiltonianMatrix::OffDiagonal> off;

    BasisState scratch;
    for (std::size_t i = 0; i < dim; ++i) {
        const BasisState& bra = basis.state_at(i);

        double d = 0.0;
        for (const auto& [atom, level] : bra.excited) {
            d += (level == 2) ? ensemble.detunings2[static_cast<std::size_t>(atom)]
                              : ensemble.detunings3[static_cast<std::size_t>(atom)];
        }
        diagonal(static_cast<Eigen::Index>(i)) = d;

        // Photon exchange: |n; S> -> |n-1; S + j@2> for each ground atom j.
        // Stored as H(i, partner) = -+ conj(g_j) sqrt(n); canonical order puts
        // the higher-photon state first, so i < partner always.
        if (bra.photon_count > 0) {
            const double root_n = std::sqrt(static_cast<double>(bra.photon_count));
            scratch = bra;
            scratch.photon_count -= 1;
            std::size_t insert_pos = 0;
            for (int atom = 0; atom < n_atoms; ++atom) {
                while (insert_pos < bra.excited.size() && bra.excited[insert_pos].first < atom) {
                    ++insert_pos;
                }
                if (insert_pos < bra.excited.size() && bra.excited[insert_pos].first == atom) {
                    continue;  // atom already excited
                }
                scratch.excited.insert(scratch.excited.begin() + static_cast<std::ptrdiff_t>(insert_pos),
                                       {atom, 2});
                const std::size_t partner = basis.index_of(scratch);
                off.push_back({i, partner,
                               exchange_sign * std::conj(ensemble.couplings[static_cast<std::size_t>(atom)]) *
                                   root_n});
                scratch.excited.erase(scratch.excited.begin() + static_cast<std::ptrdiff_t>(insert_pos));
            }
        }

        // Control drive: flip one atom 2 -> 3 at fixed photon count. The
        // 2-variant sorts first, so H(i, partner) carries the P_23 coefficient
        // -1/2 Omega_0 e^{+i phi_j}.
        if (control && control->rabi != 0.0) {
            for (std::size_t k = 0; k < bra.excited.size(); ++k) {
                if (bra.excited[k].second != 2) continue;
                scratch = bra;
                scratch.excited[k].second = 3;
                const std::size_t partner = basis.index_of(scratch);
                const double phi = control->phases.empty()
                                       ? 0.0
                                       : control->phases[static_cast<std::size_t>(bra.excited[k].first)];
                off.push_back({i, partner,
                               -0.5 * control->rabi * std::exp(std::complex<double>(0.0, phi))});
            }
        }
    }

    return HamiltonianMatrix(std::move(diagonal), std::move(off));
}

}  // namespace qecho
