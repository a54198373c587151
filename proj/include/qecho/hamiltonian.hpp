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

#ifndef QECHO_HAMILTONIAN_HPP
#define QECHO_HAMILTONIAN_HPP

#include <complex>
#include <optional>
#include <vector>

#include <Eigen/Dense>

#include "qecho/basis.hpp"
#include "qecho/ensemble.hpp"

namespace qecho {

// Sign of the photon-exchange term: minus is the bare interaction-picture
// coupling; plus is its image under conjugation by the 2pi kick.
enum class CouplingSign { minus, plus };

// Rectangular control drive on the 2<->3 transition, constant while on.
struct ControlField {
    double rabi = 0.0;                 // peak Rabi frequency Omega_0
    std::vector<double> phases;        // per-atom phase phi_j; empty means all 0
};

// Hermitian sector Hamiltonian in sparse form: real diagonal plus each
// off-diagonal element stored once with row < col (the (col, row) element
// is the implicit conjugate).
class HamiltonianMatrix {
public:
    struct OffDiagonal {
        std::size_t row;
        std::size_t col;
        std::complex<double> value;
    };

    HamiltonianMatrix(Eigen::VectorXd diagonal, std::vector<OffDiagonal> off_diagonals);

    std::size_t dimension() const { return static_cast<std::size_t>(diagonal_.size()); }
    const Eigen::VectorXd& diagonal() const { return diagonal_; }
    const std::vector<OffDiagonal>& off_diagonals() const { return off_diagonals_; }

    // y = H x with the Hermitian completion applied.
    Eigen::VectorXcd apply(const Eigen::VectorXcd& x) const;
    Eigen::MatrixXcd dense() const;

    // Gershgorin bound on the spectral radius.
    double spectral_radius_bound() const;

private:
    Eigen::VectorXd diagonal_;
    std::vector<OffDiagonal> off_diagonals_;
};

// Assembles the interaction-picture Hamiltonian of one excitation sector:
// diagonal detunings, photon exchange -+ g_j sqrt(n) between |n; S> and
// |n-1; S + j@2>, and, when a control field is given (three-level basis
// only), -1/2 Omega_0 e^{+-i phi_j} between levels 2 and 3 of each atom.
HamiltonianMatrix build_hamiltonian(const EnsembleSpec& ensemble, const BasisIndex& basis,
                                    CouplingSign sign,
                                    const std::optional<ControlField>& control = std::nullopt);

}  // namespace qecho

#endif
