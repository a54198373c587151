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

#ifndef QECHO_PROPAGATOR_HPP
#define QECHO_PROPAGATOR_HPP

#include <memory>
#include <stdexcept>

#include <Eigen/Dense>

#include "qecho/hamiltonian.hpp"
#include "qecho/state.hpp"

namespace qecho {

struct StepperError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class StepMethod {
    auto_select,  // expm_eig up to kExpmDimensionLimit, rk4 above
    expm_eig,     // dense eigendecomposition, exact up to linear-algebra error
    rk4           // classical fixed-step Runge-Kutta with automatic dt reduction
};

inline constexpr std::size_t kExpmDimensionLimit = 2000;

struct StepperConfig {
    StepMethod method = StepMethod::auto_select;
    double dt = 1e-3;         // rk4 initial step, shrunk to honor dt * ||H|| <= 0.1
    double tolerance = 1e-9;  // norm-drift bound per unit time
};

StepMethod resolve_method(const StepperConfig& config, std::size_t dimension);

// exp(-i H t) applier for one constant-Hamiltonian interval. The expm_eig
// backend caches the eigendecomposition, so repeated advances are two dense
// matrix-vector products each.
class IntervalPropagator {
public:
    IntervalPropagator(const HamiltonianMatrix& hamiltonian, const StepperConfig& config);
    ~IntervalPropagator();
    IntervalPropagator(IntervalPropagator&&) noexcept;
    IntervalPropagator& operator=(IntervalPropagator&&) noexcept;

    Eigen::VectorXcd advance(const Eigen::VectorXcd& amplitudes, double duration) const;

private:
    struct Impl;
    std::unique_ptr<Impl> impl_;
};

// Returns exp(-i H duration) |state>. Throws StepperError if the norm-drift
// tolerance cannot be met, std::invalid_argument on dimension mismatch or
// negative duration.
QuantumState propagate(const QuantumState& state, const HamiltonianMatrix& hamiltonian,
                       double duration, const StepperConfig& config = {});

// <state| H |state> (real for Hermitian H).
double energy_expectation(const QuantumState& state, const HamiltonianMatrix& hamiltonian);

}  // namespace qecho

#endif
