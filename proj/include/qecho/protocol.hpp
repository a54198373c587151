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

#ifndef QECHO_PROTOCOL_HPP
#define QECHO_PROTOCOL_HPP

#include <span>
#include <string>
#include <vector>

#include "qecho/ensemble.hpp"
#include "qecho/propagator.hpp"
#include "qecho/state.hpp"

namespace qecho {

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class EventKind {
    frequency_inversion,  // J0 / INVERT: flip the memory-transition detunings
    impulsive_2pi,        // KICK: sign flip on every excited-atom amplitude
    j2pi_composite,       // J2PI: kick first, inversion second, one timestamp
    finite_pulse          // PULSE: rectangular control drive of given area
};

struct ProtocolEvent {
    double time = 0.0;
    EventKind kind = EventKind::frequency_inversion;
    // finite_pulse only:
    double pulse_area = 0.0;      // theta = Omega_0 * duration
    double pulse_duration = 0.0;  // delta t
    std::vector<double> pulse_phases;
};

enum class TimeUnit { absolute_units, tau_d_units };

// Time-ordered control sequence ending at end_time. Times are either
// absolute or multiples of tau_D; resolve tau_D units before running.
struct ProtocolSchedule {
    std::vector<ProtocolEvent> events;
    double end_time = 0.0;
    TimeUnit unit = TimeUnit::absolute_units;

    ProtocolSchedule resolved(double tau_d) const;
};

// Parses the line-oriented schedule format:
//   # comment
//   unit tauD | unit absolute          (optional, default absolute)
//   J0 at <t> | J2PI at <t> | INVERT at <t> | KICK at <t>
//   PULSE theta=<x> dt=<x> at <t>
//   end at <t>
// Validates strict time ordering, a single final "end", and pulse extents.
// Throws ParseError with the offending line number.
ProtocolSchedule parse_protocol(const std::string& text);

// Consistency checks shared by the parser and programmatic construction.
void validate_schedule(const ProtocolSchedule& schedule);

// The impulsive 2pi kick: multiplies each basis amplitude by
// (-1)^(number of excited atoms); photon-only states are untouched.
QuantumState apply_impulsive_2pi(const QuantumState& state);

// Propagates through a rectangular control pulse of Rabi frequency `rabi`
// and length `duration` under the full sector Hamiltonian (coupling,
// detunings and drive). Requires a three-level basis.
QuantumState apply_finite_pulse(const QuantumState& state, const EnsembleSpec& ensemble,
                                double rabi, double duration,
                                std::span<const double> phases = {},
                                const StepperConfig& config = {});

}  // namespace qecho

#endif
