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

// Independent ground truth for small systems: the full tensor-product space
// photon (0..photon_max) x {1,2[,3]}^N built directly from ladder and
// projection operators, with no shared code with the library's sector
// enumeration or Hamiltonian assembly.

#ifndef QECHO_TESTS_BRUTEFORCE_HPP
#define QECHO_TESTS_BRUTEFORCE_HPP

#include <complex>
#include <vector>

#include <Eigen/Dense>

#include "qecho/basis.hpp"
#include "qecho/ensemble.hpp"

namespace qecho::testsupport {

struct FullSpace {
    int n_atoms = 0;
    int levels = 2;       // atomic levels per atom (2 or 3)
    int photon_max = 0;   // Fock truncation

    std::size_t dimension() const {
        std::size_t d = static_cast<std::size_t>(photon_max) + 1;
        for (int j = 0; j < n_atoms; ++j) d *= static_cast<std::size_t>(levels);
        return d;
    }

    // index = photon * levels^N + sum_j digit_j levels^j, digit = level - 1
    std::size_t encode(int photon, const std::vector<int>& atom_levels) const {
        std::size_t atoms = 0;
        for (int j = n_atoms - 1; j >= 0; --j) {
            atoms = atoms * static_cast<std::size_t>(levels) +
                    static_cast<std::size_t>(atom_levels[static_cast<std::size_t>(j)] - 1);
        }
        std::size_t per_photon = 1;
        for (int j = 0; j < n_atoms; ++j) per_photon *= static_cast<std::size_t>(levels);
        return static_cast<std::size_t>(photon) * per_photon + atoms;
    }

    void decode(std::size_t index, int& photon, std::vector<int>& atom_levels) const {
        std::size_t per_photon = 1;
        for (int j = 0; j < n_atoms; ++j) per_photon *= static_cast<std::size_t>(levels);
        photon = static_cast<int>(index / per_photon);
        std::size_t atoms = index % per_photon;
        atom_levels.assign(static_cast<std::size_t>(n_atoms), 1);
        for (int j = 0; j < n_atoms; ++j) {
            atom_levels[static_cast<std::size_t>(j)] =
                static_cast<int>(atoms % static_cast<std::size_t>(levels)) + 1;
            atoms /= static_cast<std::size_t>(levels);
        }
    }

    int excitation_number(std::size_t index) const {
        int photon = 0;
        std::vector<int> lv;
        decode(index, photon, lv);
        int n = photon;
        for (int l : lv) {
            if (l >= 2) ++n;
        }
        return n;
    }
};

// Dense Hamiltonian on the full space assembled term by term:
// sum_j delta2_j P22^j + delta3_j P33^j
//   + sign (g_j a P21^j + conj(g_j) a^+ P12^j)
//   - rabi/2 (e^{-i phi_j} P32^j + e^{+i phi_j} P23^j).
inline Eigen::MatrixXcd full_hamiltonian(const FullSpace& space, const EnsembleSpec& ens,
                                         double coupling_sign_value, double rabi = 0.0,
                                         const std::vector<double>& phases = {}) {
    const auto dim = space.dimension();
    Eigen::MatrixXcd h = Eigen::MatrixXcd::Zero(static_cast<Eigen::Index>(dim),
                                                static_cast<Eigen::Index>(dim));
    std::vector<int> lv;
    for (std::size_t col = 0; col < dim; ++col) {
        int photon = 0;
        space.decode(col, photon, lv);
        for (int j = 0; j < space.n_atoms; ++j) {
            const auto ju = static_cast<std::size_t>(j);
            const int level = lv[ju];
            if (level == 2) {
                h(static_cast<Eigen::Index>(col), static_cast<Eigen::Index>(col)) +=
                    ens.detunings2[ju];
            }
            if (level == 3) {
                h(static_cast<Eigen::Index>(col), static_cast<Eigen::Index>(col)) +=
                    ens.detunings3[ju];
            }
            // g_j a P21: |1_j, n> -> sqrt(n) |2_j, n-1>
            if (level == 1 && photon > 0) {
                auto lifted = lv;
                lifted[ju] = 2;
                const std::size_t row = space.encode(photon - 1, lifted);
                h(static_cast<Eigen::Index>(row), static_cast<Eigen::Index>(col)) +=
                    coupling_sign_value * ens.couplings[ju] *
                    std::sqrt(static_cast<double>(photon));
            }
            // conj(g_j) a^+ P12: |2_j, n> -> sqrt(n+1) |1_j, n+1>
            if (level == 2 && photon < space.photon_max) {
                auto dropped = lv;
                dropped[ju] = 1;
                const std::size_t row = space.encode(photon + 1, dropped);
                h(static_cast<Eigen::Index>(row), static_cast<Eigen::Index>(col)) +=
                    coupling_sign_value * std::conj(ens.couplings[ju]) *
                    std::sqrt(static_cast<double>(photon + 1));
            }
            if (rabi != 0.0 && space.levels == 3) {
                const double phi = phases.empty() ? 0.0 : phases[ju];
                const std::complex<double> up = std::exp(std::complex<double>(0.0, -phi));
                if (level == 2) {  // P32
                    auto promoted = lv;
                    promoted[ju] = 3;
                    const std::size_t row = space.encode(photon, promoted);
                    h(static_cast<Eigen::Index>(row), static_cast<Eigen::Index>(col)) +=
                        -0.5 * rabi * up;
                }
                if (level == 3) {  // P23
                    auto demoted = lv;
                    demoted[ju] = 2;
                    const std::size_t row = space.encode(photon, demoted);
                    h(static_cast<Eigen::Index>(row), static_cast<Eigen::Index>(col)) +=
                        -0.5 * rabi * std::conj(up);
                }
            }
        }
    }
    return h;
}

// Full-space index of a sector BasisState.
inline std::size_t full_index_of(const FullSpace& space, const BasisState& s) {
    std::vector<int> lv(static_cast<std::size_t>(space.n_atoms), 1);
    for (const auto& [atom, level] : s.excited) {
        lv[static_cast<std::size_t>(atom)] = level;
    }
    return space.encode(s.photon_count, lv);
}

// Number of full-space states with the given total excitation number.
inline std::size_t count_sector_states(const FullSpace& space, int n_exc) {
    std::size_t count = 0;
    for (std::size_t i = 0; i < space.dimension(); ++i) {
        if (space.excitation_number(i) == n_exc) ++count;
    }
    return count;
}

}  // namespace qecho::testsupport

#endif
