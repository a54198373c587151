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

#include "qecho/protocol.hpp"

#include <charconv>
#include <cmath>
#include <sstream>

#include "qecho/hamiltonian.hpp"

namespace qecho {

namespace {

[[noreturn]] void fail(int line_no, const std::string& message) {
    throw ParseError("schedule line " + std::to_string(line_no) + ": " + message);
}

std::vector<std::string> tokenize(const std::string& line) {
    std::istringstream stream(line);
    std::vector<std::string> tokens;
    std::string token;
    while (stream >> token) tokens.push_back(token);
    return tokens;
}

double parse_double(const std::string& text, int line_no, const std::string& what) {
    double value = 0.0;
    const auto* begin = text.data();
    const auto* end = begin + text.size();
    const auto [ptr, ec] = std::from_chars(begin, end, value);
    if (ec != std::errc() || ptr != end || !std::isfinite(value)) {
        fail(line_no, "expected a finite number for " + what + ", got '" + text + "'");
    }
    return value;
}

// "key=value" with a required key.
double parse_keyed(const std::string& token, const std::string& key, int line_no) {
    const auto eq = token.find('=');
    if (eq == std::string::npos || token.substr(0, eq) != key) {
        fail(line_no, "expected '" + key + "=<value>', got '" + token + "'");
    }
    return parse_double(token.substr(eq + 1), line_no, key);
}

double event_extent(const ProtocolEvent& e) {
    return e.kind == EventKind::finite_pulse ? e.time + e.pulse_duration : e.time;
}

}  // namespace

ProtocolSchedule ProtocolSchedule::resolved(double tau_d) const {
    if (unit == TimeUnit::absolute_units) return *this;
    if (!(tau_d > 0.0)) {
        throw std::invalid_argument("ProtocolSchedule::resolved: tau_D must be positive");
    }
    ProtocolSchedule out = *this;
    out.unit = TimeUnit::absolute_units;
    out.end_time = end_time * tau_d;
    for (auto& e : out.events) {
        e.time *= tau_d;
        // Pulse lengths are physical durations; they are not rescaled.
    }
    validate_schedule(out);
    return out;
}

void validate_schedule(const ProtocolSchedule& schedule) {
    double prev_time = -1.0;
    double prev_extent = -1.0;
    for (const auto& e : schedule.events) {
        if (e.time < 0.0) {
            throw std::invalid_argument("schedule event at negative time");
        }
        // Strictly increasing timestamps; an event may start exactly where a
        // pulse ends, but not inside it.
        if (e.time <= prev_time || e.time < prev_extent) {
            throw std::invalid_argument("schedule events must be strictly increasing; event at t=" +
                                        std::to_string(e.time) + " overlaps the previous one");
        }
        if (e.kind == EventKind::finite_pulse) {
            if (!(e.pulse_area > 0.0) || !(e.pulse_duration > 0.0)) {
                throw std::invalid_argument("finite pulse needs theta > 0 and dt > 0");
            }
        }
        prev_time = e.time;
        prev_extent = event_extent(e);
    }
    if (schedule.end_time <= prev_time || schedule.end_time < prev_extent) {
        throw std::invalid_argument("schedule end time must lie after the last event");
    }
}

ProtocolSchedule parse_protocol(const std::string& text) {
    ProtocolSchedule schedule;
    bool unit_allowed = true;
    bool saw_end = false;
    double previous_time = -1.0;
    double previous_extent = -1.0;

    std::istringstream stream(text);
    std::string raw_line;
    int line_no = 0;
    while (std::getline(stream, raw_line)) {
        ++line_no;
        const auto hash = raw_line.find('#');
        const std::string line = (hash == std::string::npos) ? raw_line : raw_line.substr(0, hash);
        const auto tokens = tokenize(line);
        if (tokens.empty()) continue;

        if (saw_end) {
            fail(line_no, "event after 'end'");
        }

        if (tokens[0] == "unit") {
            if (!unit_allowed) {
                fail(line_no, "'unit' must be the first directive");
            }
            if (tokens.size() != 2) {
                fail(line_no, "usage: unit tauD | unit absolute");
            }
            if (tokens[1] == "tauD") {
                schedule.unit = TimeUnit::tau_d_units;
            } else if (tokens[1] == "absolute") {
                schedule.unit = TimeUnit::absolute_units;
            } else {
                fail(line_no, "unknown unit '" + tokens[1] + "'");
            }
            unit_allowed = false;
            continue;
        }
        unit_allowed = false;

        ProtocolEvent event;
        std::size_t at_pos = 1;
        if (tokens[0] == "J0" || tokens[0] == "INVERT") {
            event.kind = EventKind::frequency_inversion;
        } else if (tokens[0] == "KICK") {
            event.kind = EventKind::impulsive_2pi;
        } else if (tokens[0] == "J2PI") {
            event.kind = EventKind::j2pi_composite;
        } else if (tokens[0] == "PULSE") {
            event.kind = EventKind::finite_pulse;
            if (tokens.size() < 3) {
                fail(line_no, "usage: PULSE theta=<float> dt=<float> at <float>");
            }
            event.pulse_area = parse_keyed(tokens[1], "theta", line_no);
            event.pulse_duration = parse_keyed(tokens[2], "dt", line_no);
            if (!(event.pulse_area > 0.0)) fail(line_no, "pulse theta must be > 0");
            if (!(event.pulse_duration > 0.0)) fail(line_no, "pulse dt must be > 0");
            at_pos = 3;
        } else if (tokens[0] == "end") {
            if (tokens.size() != 3 || tokens[1] != "at") {
                fail(line_no, "usage: end at <float>");
            }
            schedule.end_time = parse_double(tokens[2], line_no, "end time");
            if (schedule.end_time <= previous_time || schedule.end_time < previous_extent) {
                fail(line_no, "end time must lie after the last event");
            }
            saw_end = true;
            continue;
        } else {
            fail(line_no, "unknown event name '" + tokens[0] + "'");
        }

        if (tokens.size() != at_pos + 2 || tokens[at_pos] != "at") {
            fail(line_no, "expected '... at <float>'");
        }
        event.time = parse_double(tokens[at_pos + 1], line_no, "event time");
        if (event.time < 0.0) {
            fail(line_no, "event time must be >= 0");
        }
        if (event.time <= previous_time || event.time < previous_extent) {
            fail(line_no, "event times must be strictly increasing (and must not overlap a pulse)");
        }
        previous_time = event.time;
        previous_extent = event_extent(event);
        schedule.events.push_back(std::move(event));
    }

    if (!saw_end) {
        throw ParseError("schedule is missing the final 'end at <float>' line");
    }
    return schedule;
}

QuantumState apply_impulsive_2pi(const QuantumState& state) {
    const auto& basis = state.basis();
    Eigen::VectorXcd amps = state.amplitudes();
    for (std::size_t i = 0; i < basis.dimension(); ++i) {
        if (basis.state_at(i).excited.size() % 2 != 0) {
            amps(static_cast<Eigen::Index>(i)) = -amps(static_cast<Eigen::Index>(i));
        }
    }
    return state.with_amplitudes(std::move(amps));
}

QuantumState apply_finite_pulse(const QuantumState& state, const EnsembleSpec& ensemble,
                                double rabi, double duration, std::span<const double> phases,
                                const StepperConfig& config) {
    if (!state.basis().three_level()) {
        throw std::invalid_argument("apply_finite_pulse: state must live in a three-level basis");
    }
    if (!(rabi > 0.0) || !(duration > 0.0)) {
        throw std::invalid_argument("apply_finite_pulse: rabi and duration must be positive");
    }
    ControlField control;
    control.rabi = rabi;
    control.phases.assign(phases.begin(), phases.end());
    const auto h = build_hamiltonian(ensemble, state.basis(), CouplingSign::minus, control);
    return propagate(state, h, duration, config);
}

}  // namespace qecho
