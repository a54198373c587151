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

#ifndef QECHO_TIMELINE_HPP
#define QECHO_TIMELINE_HPP

#include <complex>
#include <functional>
#include <span>
#include <vector>

#include "qecho/ensemble.hpp"
#include "qecho/propagator.hpp"
#include "qecho/protocol.hpp"
#include "qecho/state.hpp"

namespace qecho {

// Sampled observables on a uniform-per-interval time grid. Event times are
// always grid points, so no sample ever averages across an event.
struct TimeSeries {
    std::vector<double> t;
    std::vector<std::complex<double>> cph;  // full-photon amplitude (sector 1 for multi-photon runs)
    std::vector<double> p_atoms;
    std::vector<double> norm;
    int photon_levels = 0;                  // columns p_0..p_{photon_levels-1}; 0 = none
    std::vector<std::vector<double>> p_n;   // per-row photon-number marginals

    std::size_t rows() const { return t.size(); }
    // Index of the sample closest to `time`; throws if the series is empty.
    std::size_t row_nearest(double time) const;
};

using SampleObserver = std::function<void(double t, const QuantumState& state)>;

// Core loop: piecewise-constant evolution between events, instantaneous
// events applied exactly at their times, finite pulses as driven intervals.
// The observer fires at t = 0 and at every grid point after it.
// Returns the final state and the final (possibly inverted) ensemble.
std::pair<QuantumState, EnsembleSpec> run_schedule(const QuantumState& initial,
                                                   const EnsembleSpec& ensemble,
                                                   const ProtocolSchedule& schedule,
                                                   double sample_dt,
                                                   const StepperConfig& config,
                                                   const SampleObserver& observe);

struct TimelineResult {
    TimeSeries series;
    QuantumState final_state;
    EnsembleSpec final_ensemble;
};

// Single-sector run recording (t, c_ph, P_atoms, norm) at every sample.
TimelineResult run_timeline(const QuantumState& initial, const EnsembleSpec& ensemble,
                            const ProtocolSchedule& schedule, double sample_dt,
                            const StepperConfig& config = {});

struct SectorEvolveResult {
    TimeSeries series;                                  // includes p_n columns
    std::vector<std::complex<double>> recovered_field;  // C'_n at end: all-photon amplitude per sector
    std::vector<double> residual_atomic;                // probability left in atomic states, per sector
    SectorState final_state;
};

// Evolves an arbitrary field state sum_n C_n |n> through the schedule, one
// excitation sector at a time (the Hamiltonian is block diagonal in the
// total excitation number). Requires mean photon number < n_atoms.
SectorEvolveResult sector_evolve(std::span<const std::complex<double>> field_amplitudes,
                                 const EnsembleSpec& ensemble, const ProtocolSchedule& schedule,
                                 double sample_dt, const StepperConfig& config = {},
                                 std::size_t dimension_cap = kDefaultDimensionCap);

}  // namespace qecho

#endif
