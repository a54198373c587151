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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "qecho/hamiltonian.hpp"
#include "support/bruteforce.hpp"

using namespace qecho;

namespace {

EnsembleSpec single_atom(double g, double delta2, double delta3 = 0.0) {
    EnsembleSpec e;
    e.n_atoms = 1;
    e.couplings = {g};
    e.detunings2 = {delta2};
    e.detunings3 = {delta3};
    e.meta.g2_at_zero = 1.0;
    return e;
}

}  // namespace

TEST_CASE("one atom, one excitation: diagonal and exchange element") {
    const auto basis = BasisIndex::enumerate(1, 1, false);
    const auto e = single_atom(0.5, 2.0);

    const auto h_minus = build_hamiltonian(e, basis, CouplingSign::minus);
    CHECK(h_minus.diagonal()(0) == 0.0);
    CHECK(h_minus.diagonal()(1) == 2.0);
    REQUIRE(h_minus.off_diagonals().size() == 1);
    CHECK(h_minus.off_diagonals()[0].row == 0);
    CHECK(h_minus.off_diagonals()[0].col == 1);
    CHECK(h_minus.off_diagonals()[0].value == std::complex<double>(-0.5, 0.0));

    const auto h_plus = build_hamiltonian(e, basis, CouplingSign::plus);
    CHECK(h_plus.off_diagonals()[0].value == std::complex<double>(+0.5, 0.0));
}

TEST_CASE("bosonic ladder factor sqrt(n) in the two-photon sector") {
    const auto basis = BasisIndex::enumerate(1, 2, false);
    const auto e = single_atom(0.37, 0.0);
    const auto h = build_hamiltonian(e, basis, CouplingSign::minus);
    const auto dense = h.dense();
    const auto i2 = basis.index_of(BasisState{2, {}});
    const auto i1 = basis.index_of(BasisState{1, {{0, 2}}});
    CHECK(dense(static_cast<Eigen::Index>(i2), static_cast<Eigen::Index>(i1)).real() ==
          doctest::Approx(-0.37 * std::sqrt(2.0)).epsilon(1e-15));
}

TEST_CASE("every element matches the brute-force operator construction") {
    EnsembleSpec e;
    e.n_atoms = 2;
    e.couplings = {{0.3, 0.1}, {0.25, -0.05}};
    e.detunings2 = {-0.7, 1.1};
    e.detunings3 = {-0.4, 0.9};
    e.meta.g2_at_zero = 1.0;

    for (int n_exc : {1, 2, 3}) {
        for (bool three_level : {false, true}) {
            for (auto sign : {CouplingSign::minus, CouplingSign::plus}) {
                const auto basis = BasisIndex::enumerate(2, n_exc, three_level);
                std::optional<ControlField> control;
                double rabi = 0.0;
                std::vector<double> phases;
                if (three_level) {
                    rabi = 1.7;
                    phases = {0.2, -1.3};
                    control = ControlField{rabi, phases};
                }
                const auto h = build_hamiltonian(e, basis, sign, control);
                const auto dense = h.dense();

                testsupport::FullSpace space{2, three_level ? 3 : 2, n_exc};
                const auto full = testsupport::full_hamiltonian(
                    space, e, sign == CouplingSign::minus ? -1.0 : 1.0, rabi, phases);

                for (std::size_t r = 0; r < basis.dimension(); ++r) {
                    for (std::size_t c = 0; c < basis.dimension(); ++c) {
                        const auto fr = testsupport::full_index_of(space, basis.state_at(r));
                        const auto fc = testsupport::full_index_of(space, basis.state_at(c));
                        const auto expected = full(static_cast<Eigen::Index>(fr),
                                                   static_cast<Eigen::Index>(fc));
                        const auto got = dense(static_cast<Eigen::Index>(r),
                                               static_cast<Eigen::Index>(c));
                        CHECK(std::abs(got - expected) < 1e-14);
                    }
                }
            }
        }
    }
}

TEST_CASE("assembled matrices are exactly Hermitian") {
    const auto e = make_comb(6, 4.0, std::complex<double>(0.2, 0.1));
    for (int n_exc : {1, 2}) {
        const auto basis = BasisIndex::enumerate(6, n_exc, false);
        const auto dense = build_hamiltonian(e, basis, CouplingSign::minus).dense();
        CHECK((dense - dense.adjoint()).cwiseAbs().maxCoeff() == 0.0);
    }
}

TEST_CASE("apply agrees with the dense product") {
    const auto e = make_comb(5, 2.0, std::complex<double>(0.15, -0.2));
    const auto basis = BasisIndex::enumerate(5, 2, false);
    const auto h = build_hamiltonian(e, basis, CouplingSign::minus);
    Eigen::VectorXcd x(static_cast<Eigen::Index>(basis.dimension()));
    for (Eigen::Index i = 0; i < x.size(); ++i) {
        x(i) = std::complex<double>(std::sin(1.0 + static_cast<double>(i)),
                                    std::cos(2.0 * static_cast<double>(i)));
    }
    const Eigen::VectorXcd direct = h.dense() * x;
    CHECK((h.apply(x) - direct).norm() < 1e-12 * direct.norm());
    CHECK(h.spectral_radius_bound() >= h.dense().operatorNorm() - 1e-12);
}

TEST_CASE("mismatches are rejected") {
    const auto e = single_atom(0.5, 1.0);
    const auto wrong_basis = BasisIndex::enumerate(2, 1, false);
    CHECK_THROWS_AS(build_hamiltonian(e, wrong_basis, CouplingSign::minus),
                    std::invalid_argument);

    const auto two_level = BasisIndex::enumerate(1, 1, false);
    CHECK_THROWS_AS(build_hamiltonian(e, two_level, CouplingSign::minus,
                                      ControlField{1.0, {}}),
                    std::invalid_argument);

    const auto three_level = BasisIndex::enumerate(1, 1, true);
    CHECK_THROWS_AS(build_hamiltonian(e, three_level, CouplingSign::minus,
                                      ControlField{1.0, {0.0, 0.0}}),
                    std::invalid_argument);
}
