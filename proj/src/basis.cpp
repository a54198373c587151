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

#include "qecho/basis.hpp"

#include <algorithm>
#include <limits>
#include <string>

namespace qecho {

bool canonical_less(const BasisState& a, const BasisState& b) {
    if (a.photon_count != b.photon_count) {
        return a.photon_count > b.photon_count;
    }
    return a.excited < b.excited;
}

namespace {

// Binomial coefficient, saturating at SIZE_MAX.
std::size_t binomial_sat(int n, int k) {
    if (k < 0 || k > n) return 0;
    k = std::min(k, n - k);
    std::size_t result = 1;
    for (int i = 1; i <= k; ++i) {
        const std::size_t num = static_cast<std::size_t>(n - k + i);
        if (result > std::numeric_limits<std::size_t>::max() / num) {
            return std::numeric_limits<std::size_t>::max();
        }
        result = result * num / static_cast<std::size_t>(i);
    }
    return result;
}

std::size_t mul_sat(std::size_t a, std::size_t b) {
    if (b != 0 && a > std::numeric_limits<std::size_t>::max() / b) {
        return std::numeric_limits<std::size_t>::max();
    }
    return a * b;
}

std::size_t add_sat(std::size_t a, std::size_t b) {
    if (a > std::numeric_limits<std::size_t>::max() - b) {
        return std::numeric_limits<std::size_t>::max();
    }
    return a + b;
}

// Emits, in lexicographic order, every way to promote `remaining` more atoms
// (indices >= next_atom) to level 2 or, in three-level mode, level 3.
void emit_excitations(int n_atoms, int next_atom, int remaining, bool three_level,
                      BasisState& scratch, std::vector<BasisState>& out) {
    if (remaining == 0) {
        out.push_back(scratch);
        return;
    }
    for (int atom = next_atom; atom <= n_atoms - remaining; ++atom) {
        for (int level = 2; level <= (three_level ? 3 : 2); ++level) {
            scratch.excited.emplace_back(atom, level);
            emit_excitations(n_atoms, atom + 1, remaining - 1, three_level, scratch, out);
            scratch.excited.pop_back();
        }
    }
}

}  // namespace

std::size_t sector_dimension(int n_atoms, int n_exc, bool three_level) {
    std::size_t total = 0;
    for (int excited = 0; excited <= n_exc; ++excited) {
        std::size_t term = binomial_sat(n_atoms, excited);
        if (three_level) {
            for (int i = 0; i < excited; ++i) term = mul_sat(term, 2);
        }
        total = add_sat(total, term);
    }
    return total;
}

BasisIndex BasisIndex::enumerate(int n_atoms, int n_exc, bool three_level,
                                 std::size_t dimension_cap) {
    if (n_atoms < 1) {
        throw std::invalid_argument("BasisIndex: n_atoms must be >= 1, got " +
                                    std::to_string(n_atoms));
    }
    if (n_exc < 0) {
        throw std::invalid_argument("BasisIndex: n_exc must be >= 0, got " +
                                    std::to_string(n_exc));
    }
    const std::size_t dim = sector_dimension(n_atoms, n_exc, three_level);
    if (dim > dimension_cap) {
        throw BasisSizeError("BasisIndex: sector (N=" + std::to_string(n_atoms) +
                             ", n_exc=" + std::to_string(n_exc) +
                             (three_level ? ", three-level" : ", two-level") +
                             ") has dimension " + std::to_string(dim) +
                             " exceeding the cap of " + std::to_string(dimension_cap));
    }

    BasisIndex index;
    index.n_atoms_ = n_atoms;
    index.n_exc_ = n_exc;
    index.three_level_ = three_level;
    index.states_.reserve(dim);

    BasisState scratch;
    for (int photons = n_exc; photons >= 0; --photons) {
        const int excited = n_exc - photons;
        if (excited > n_atoms) continue;
        scratch.photon_count = photons;
        emit_excitations(n_atoms, 0, excited, three_level, scratch, index.states_);
    }
    return index;
}

std::size_t BasisIndex::index_of(const BasisState& s) const {
    const auto pos = find(s);
    if (!pos) {
        throw std::out_of_range("BasisIndex: state not in this sector");
    }
    return *pos;
}

std::optional<std::size_t> BasisIndex::find(const BasisState& s) const {
    const auto it = std::lower_bound(states_.begin(), states_.end(), s, canonical_less);
    if (it == states_.end() || !(*it == s)) return std::nullopt;
    return static_cast<std::size_t>(it - states_.begin());
}

}  // namespace qecho
