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

#include <algorithm>

#include "qecho/basis.hpp"
#include "support/bruteforce.hpp"

using namespace qecho;

TEST_CASE("single-excitation two-level sector has dimension N + 1") {
    const auto basis = BasisIndex::enumerate(3, 1, false);
    CHECK(basis.dimension() == 4);
    CHECK(basis.state_at(0) == BasisState{1, {}});
    CHECK(basis.state_at(1) == BasisState{0, {{0, 2}}});
    CHECK(basis.state_at(2) == BasisState{0, {{1, 2}}});
    CHECK(basis.state_at(3) == BasisState{0, {{2, 2}}});
}

TEST_CASE("two atoms, two excitations: the four occupation patterns") {
    const auto basis = BasisIndex::enumerate(2, 2, false);
    REQUIRE(basis.dimension() == 4);
    CHECK(basis.state_at(0) == BasisState{2, {}});
    CHECK(basis.state_at(1) == BasisState{1, {{0, 2}}});
    CHECK(basis.state_at(2) == BasisState{1, {{1, 2}}});
    CHECK(basis.state_at(3) == BasisState{0, {{0, 2}, {1, 2}}});
}

TEST_CASE("three-level single excitation: photon plus two levels per atom") {
    const auto basis = BasisIndex::enumerate(2, 1, true);
    REQUIRE(basis.dimension() == 5);
    CHECK(basis.state_at(0) == BasisState{1, {}});
    CHECK(basis.state_at(1) == BasisState{0, {{0, 2}}});
    CHECK(basis.state_at(2) == BasisState{0, {{0, 3}}});
    CHECK(basis.state_at(3) == BasisState{0, {{1, 2}}});
    CHECK(basis.state_at(4) == BasisState{0, {{1, 3}}});
}

TEST_CASE("enumeration order is canonical and lookup inverts it") {
    for (int n_atoms : {1, 2, 4, 6}) {
        for (int n_exc : {0, 1, 2, 3}) {
            for (bool three_level : {false, true}) {
                const auto basis = BasisIndex::enumerate(n_atoms, n_exc, three_level);
                CHECK(std::is_sorted(basis.states().begin(), basis.states().end(),
                                     canonical_less));
                for (std::size_t i = 0; i < basis.dimension(); ++i) {
                    CHECK(basis.state_at(i).excitation_number() == n_exc);
                    CHECK(basis.index_of(basis.state_at(i)) == i);
                }
            }
        }
    }
}

TEST_CASE("sector sizes match the brute-force count over the full space") {
    for (int n_atoms : {1, 2, 3}) {
        for (int n_exc : {0, 1, 2, 3}) {
            for (int levels : {2, 3}) {
                testsupport::FullSpace space{n_atoms, levels, n_exc};
                const auto basis = BasisIndex::enumerate(n_atoms, n_exc, levels == 3);
                CHECK(basis.dimension() == testsupport::count_sector_states(space, n_exc));
            }
        }
    }
}

TEST_CASE("two-level sector size equals the binomial sum") {
    for (int n_atoms : {2, 4, 6}) {
        for (int n_exc : {1, 2, 3}) {
            std::size_t expected = 0;
            for (int k = 0; k <= n_exc; ++k) {
                // C(n_atoms, k) by direct product
                std::size_t c = 1;
                for (int i = 1; i <= k; ++i) {
                    c = c * static_cast<std::size_t>(n_atoms - k + i) /
                        static_cast<std::size_t>(i);
                }
                expected += c;
            }
            CHECK(BasisIndex::enumerate(n_atoms, n_exc, false).dimension() == expected);
        }
    }
}

TEST_CASE("invalid arguments and the dimension cap are rejected") {
    CHECK_THROWS_AS(BasisIndex::enumerate(0, 1, false), std::invalid_argument);
    CHECK_THROWS_AS(BasisIndex::enumerate(3, -1, false), std::invalid_argument);
    CHECK_THROWS_AS(BasisIndex::enumerate(100, 4, false, 1000), BasisSizeError);
    // A huge request must fail cleanly instead of exhausting memory.
    CHECK_THROWS_AS(BasisIndex::enumerate(100000, 5, true), BasisSizeError);
}

TEST_CASE("lookup of a foreign state throws") {
    const auto basis = BasisIndex::enumerate(2, 1, false);
    CHECK_THROWS_AS(basis.index_of(BasisState{2, {}}), std::out_of_range);
    CHECK(!basis.find(BasisState{0, {{0, 3}}}).has_value());
}
