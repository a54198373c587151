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

#include "qecho/propagator.hpp"

#include <cmath>
#include <complex>
#include <optional>

namespace qecho {

namespace {

using Complex = std::complex<double>;

// Norm drift allowed for a stretch of evolution; floored near machine
// precision so that zero-duration and tiny steps remain checkable.
double drift_bound(double tolerance, double duration, double scale) {
    return std::max(tolerance * duration, 1e-12) * std::max(scale, 1e-300);
}

Eigen::VectorXcd rk4_step(const HamiltonianMatrix& h, const Eigen::VectorXcd& y, double dt) {
    const Complex mi(0.0, -1.0);
    const Eigen::VectorXcd k1 = mi * h.apply(y);
    const Eigen::VectorXcd k2 = mi * h.apply(y + (0.5 * dt) * k1);
    const Eigen::VectorXcd k3 = mi * h.apply(y + (0.5 * dt) * k2);
    const Eigen::VectorXcd k4 = mi * h.apply(y + dt * k3);
    return y + (dt / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
}

// Integrates over `duration` with fixed substeps, halving dt until the norm
// drift fits the bound. Never silent: throws StepperError when dt underflows.
Eigen::VectorXcd rk4_integrate(const HamiltonianMatrix& h, const Eigen::VectorXcd& start,
                               double duration, double dt0, double tolerance) {
    const double norm_in = start.norm();
    const double bound = drift_bound(tolerance, duration, norm_in);
    double dt = dt0;
    for (int attempt = 0; attempt < 48; ++attempt) {
        const auto steps = static_cast<long>(std::ceil(duration / dt - 1e-12));
        const double step = duration / static_cast<double>(std::max(steps, 1L));
        Eigen::VectorXcd y = start;
        for (long k = 0; k < std::max(steps, 1L); ++k) {
            y = rk4_step(h, y, step);
        }
        if (std::abs(y.norm() - norm_in) <= bound) {
            return y;
        }
        dt *= 0.5;
    }
    throw StepperError("rk4 stepper could not meet the norm-drift tolerance of " +
                       std::to_string(tolerance) + " per unit time over duration " +
                       std::to_string(duration));
}

}  // namespace

StepMethod resolve_method(const StepperConfig& config, std::size_t dimension) {
    if (config.method != StepMethod::auto_select) return config.method;
    return dimension <= kExpmDimensionLimit ? StepMethod::expm_eig : StepMethod::rk4;
}

struct IntervalPropagator::Impl {
    StepMethod method = StepMethod::expm_eig;
    StepperConfig config;

    // expm_eig backend
    Eigen::MatrixXcd eigenvectors;
    Eigen::VectorXd eigenvalues;

    // rk4 backend (owns its matrix so the propagator can outlive the source)
    std::optional<HamiltonianMatrix> hamiltonian;
    double dt_start = 0.0;
};

IntervalPropagator::IntervalPropagator(const HamiltonianMatrix& hamiltonian,
                                       const StepperConfig& config)
    : impl_(std::make_unique<Impl>()) {
    impl_->config = config;
    impl_->method = resolve_method(config, hamiltonian.dimension());
    if (impl_->method == StepMethod::expm_eig) {
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(hamiltonian.dense());
        if (solver.info() != Eigen::Success) {
            throw StepperError("eigendecomposition failed");
        }
        impl_->eigenvectors = solver.eigenvectors();
        impl_->eigenvalues = solver.eigenvalues();
    } else {
        if (!(config.dt > 0.0)) {
            throw std::invalid_argument("rk4 stepper needs dt > 0");
        }
        impl_->hamiltonian = hamiltonian;
        const double radius = hamiltonian.spectral_radius_bound();
        impl_->dt_start = (radius > 0.0) ? std::min(config.dt, 0.1 / radius) : config.dt;
    }
}

IntervalPropagator::~IntervalPropagator() = default;
IntervalPropagator::IntervalPropagator(IntervalPropagator&&) noexcept = default;
IntervalPropagator& IntervalPropagator::operator=(IntervalPropagator&&) noexcept = default;

Eigen::VectorXcd IntervalPropagator::advance(const Eigen::VectorXcd& amplitudes,
                                             double duration) const {
    if (duration < 0.0) {
        throw std::invalid_argument("IntervalPropagator::advance: negative duration");
    }
    if (duration == 0.0) return amplitudes;
    if (impl_->method == StepMethod::expm_eig) {
        Eigen::VectorXcd modal = impl_->eigenvectors.adjoint() * amplitudes;
        for (Eigen::Index i = 0; i < modal.size(); ++i) {
            modal(i) *= std::exp(Complex(0.0, -impl_->eigenvalues(i) * duration));
        }
        return impl_->eigenvectors * modal;
    }
    return rk4_integrate(*impl_->hamiltonian, amplitudes, duration, impl_->dt_start,
                         impl_->config.tolerance);
}

QuantumState propagate(const QuantumState& state, const HamiltonianMatrix& hamiltonian,
                       double duration, const StepperConfig& config) {
    if (hamiltonian.dimension() != state.dimension()) {
        throw std::invalid_argument("propagate: Hamiltonian/state dimension mismatch");
    }
    if (duration < 0.0) {
        throw std::invalid_argument("propagate: duration must be >= 0");
    }
    if (duration == 0.0) return state;

    const IntervalPropagator prop(hamiltonian, config);
    Eigen::VectorXcd out = prop.advance(state.amplitudes(), duration);

    const double drift = std::abs(out.norm() - state.norm());
    if (drift > drift_bound(config.tolerance, duration, state.norm())) {
        throw StepperError("propagate: norm drift " + std::to_string(drift) +
                           " exceeds tolerance over duration " + std::to_string(duration));
    }
    return state.with_amplitudes(std::move(out));
}

double energy_expectation(const QuantumState& state, const HamiltonianMatrix& hamiltonian) {
    if (hamiltonian.dimension() != state.dimension()) {
        throw std::invalid_argument("energy_expectation: dimension mismatch");
    }
    return state.amplitudes().dot(hamiltonian.apply(state.amplitudes())).real();
}

}  // namespace qecho
