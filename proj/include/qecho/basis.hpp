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

#ifndef QECHO_BASIS_HPP
#define QECHO_BASIS_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

namespace qecho {

// One basis vector of an excitation-number sector: a photon Fock level plus
// the list of atoms promoted out of the ground level. Atom entries are
// (atom index, level) with level 2 (cavity-coupled) or 3 (control target),
// sorted by atom index, each atom at most once.
struct BasisState {
    int photon_count = 0;
    std::vector<std::pair<int, int>> excited;

    int excitation_number() const {
        return photon_count + static_cast<int>(excited.size());
    }
    bool operator==(const BasisState&) const = default;
};

// Canonical sector order: photon count descending, then the excited-atom
// list lexicographically. The all-photon state is always index 0.
bool canonical_less(const BasisState& a, const BasisState& b);

inline constexpr std::size_t kDefaultDimensionCap = 2'000'000;

struct BasisSizeError : std::length_error {
    using std::length_error::length_error;
};

// Enumeration of every basis state of one excitation-number sector,
// in canonical order, with O(log dim) reverse lookup.
class BasisIndex {
public:
    static BasisIndex enumerate(int n_atoms, int n_exc, bool three_level,
                                std::size_t dimension_cap = kDefaultDimensionCap);

    int n_atoms() const { return n_atoms_; }
    int n_exc() const { return n_exc_; }
    bool three_level() const { return three_level_; }
    std::size_t dimension() const { return states_.size(); }

    const BasisState& state_at(std::size_t i) const { return states_.at(i); }
    const std::vector<BasisState>& states() const { return states_; }

    // Position of `s` in this sector; throws std::out_of_range if absent.
    std::size_t index_of(const BasisState& s) const;
    std::optional<std::size_t> find(const BasisState& s) const;

    // Same sector shape (atom count, excitation number, level structure).
    bool compatible_with(const BasisIndex& other) const {
        return n_atoms_ == other.n_atoms_ && n_exc_ == other.n_exc_ &&
               three_level_ == other.three_level_;
    }

private:
    BasisIndex() = default;
    int n_atoms_ = 0;
    int n_exc_ = 0;
    bool three_level_ = false;
    std::vector<BasisState> states_;
};

// Closed-form sector dimension, saturating at SIZE_MAX on overflow.
std::size_t sector_dimension(int n_atoms, int n_exc, bool three_level);

}  // namespace qecho

#endif
