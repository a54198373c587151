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

#include "qecho/timeline.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <optional>

#include "qecho/hamiltonian.hpp"

namespace qecho {

std::size_t TimeSeries::row_nearest(double time) const {
    if (t.empty()) {
        throw std::out_of_range("TimeSeries::row_nearest: empty series");
    }
    const auto it = std::lower_bound(t.begin(), t.end(), time);
    if (it == t.begin()) return 0;
    if (it == t.end()) return t.size() - 1;
    const auto hi = static_cast<std::size_t>(it - t.begin());
    return (time - t[hi - 1] <= t[hi] - time) ? hi - 1 : hi;
}

namespace {

// Evolves one constant-Hamiltonian stretch [t_start, t_start + length],
// sampling every grid point after t_start. The grid step divides the
// stretch exactly, so the final sample lands on the boundary.
void evolve_segment(Eigen::VectorXcd& amps, const QuantumState& proto,
                    const IntervalPropagator& prop, double t_start, double length,
                    double sample_dt, const StepperConfig& config,
                    const SampleObserver& observe) {
    if (length <= 0.0) return;
    const auto steps = std::max<long>(1, std::lround(length / sample_dt));
    const double step = length / static_cast<double>(steps);

    const double norm_in = amps.norm();
    for (long k = 1; k <= steps; ++k) {
        amps = prop.advance(amps, step);
        const double t = (k == steps) ? t_start + length
                                      : t_start + static_cast<double>(k) * step;
        if (observe) observe(t, proto.with_amplitudes(amps));
    }
    const double drift = std::abs(amps.norm() - norm_in);
    if (drift > std::max(config.tolerance * length, 1e-12) * std::max(norm_in, 1e-300)) {
        throw StepperError("run_schedule: norm drift " + std::to_string(drift) +
                           " over segment of length " + std::to_string(length));
    }
}

}  // namespace

std::pair<QuantumState, EnsembleSpec> run_schedule(const QuantumState& initial,
                                                   const EnsembleSpec& ensemble,
                                                   const ProtocolSchedule& schedule,
                                                   double sample_dt,
                                                   const StepperConfig& config,
                                                   const SampleObserver& observe) {
    if (schedule.unit != TimeUnit::absolute_units) {
        throw std::invalid_argument("run_schedule: resolve tauD-unit schedules first");
    }
    validate_schedule(schedule);
    if (!(sample_dt > 0.0)) {
        throw std::invalid_argument("run_schedule: sample_dt must be positive");
    }
    for (const auto& e : schedule.events) {
        if (e.kind == EventKind::finite_pulse && !initial.basis().three_level()) {
            throw std::invalid_argument(
                "run_schedule: schedule contains a finite pulse but the basis is two-level");
        }
    }

    EnsembleSpec ens = ensemble;
    Eigen::VectorXcd amps = initial.amplitudes();
    double now = 0.0;
    if (observe) observe(0.0, initial);

    // Drive-free segments only ever see the original or the inverted
    // detunings, so at most two propagators (eigendecompositions) are built
    // per run no matter how many events the schedule carries.
    bool inverted = false;
    std::array<std::optional<IntervalPropagator>, 2> prop_cache;
    auto free_propagator = [&]() -> const IntervalPropagator& {
        auto& slot = prop_cache[inverted ? 1 : 0];
        if (!slot) {
            slot.emplace(build_hamiltonian(ens, initial.basis(), CouplingSign::minus), config);
        }
        return *slot;
    };

    for (const auto& event : schedule.events) {
        evolve_segment(amps, initial, free_propagator(), now, event.time - now, sample_dt,
                       config, observe);
        now = event.time;
        switch (event.kind) {
            case EventKind::frequency_inversion:
                ens = invert_detunings(ens);
                inverted = !inverted;
                break;
            case EventKind::impulsive_2pi:
                amps = apply_impulsive_2pi(initial.with_amplitudes(amps)).amplitudes();
                break;
            case EventKind::j2pi_composite:
                amps = apply_impulsive_2pi(initial.with_amplitudes(amps)).amplitudes();
                ens = invert_detunings(ens);
                inverted = !inverted;
                break;
            case EventKind::finite_pulse: {
                ControlField control;
                control.rabi = event.pulse_area / event.pulse_duration;
                control.phases = event.pulse_phases;
                const IntervalPropagator pulse_prop(
                    build_hamiltonian(ens, initial.basis(), CouplingSign::minus, control),
                    config);
                evolve_segment(amps, initial, pulse_prop, now, event.pulse_duration, sample_dt,
                               config, observe);
                now += event.pulse_duration;
                break;
            }
        }
    }

    evolve_segment(amps, initial, free_propagator(), now, schedule.end_time - now, sample_dt,
                   config, observe);
    return {initial.with_amplitudes(std::move(amps)), std::move(ens)};
}

TimelineResult run_timeline(const QuantumState& initial, const EnsembleSpec& ensemble,
                            const ProtocolSchedule& schedule, double sample_dt,
                            const StepperConfig& config) {
    TimeSeries series;
    const auto observer = [&series](double t, const QuantumState& state) {
        series.t.push_back(t);
        series.cph.push_back(full_photon_amplitude(state));
        series.p_atoms.push_back(atomic_excitation_probability(state));
        series.norm.push_back(state.norm());
    };
    auto [final_state, final_ensemble] =
        run_schedule(initial, ensemble, schedule, sample_dt, config, observer);
    return {std::move(series), std::move(final_state), std::move(final_ensemble)};
}

SectorEvolveResult sector_evolve(std::span<const std::complex<double>> field_amplitudes,
                                 const EnsembleSpec& ensemble, const ProtocolSchedule& schedule,
                                 double sample_dt, const StepperConfig& config,
                                 std::size_t dimension_cap) {
    if (field_amplitudes.empty()) {
        throw std::invalid_argument("sector_evolve: empty field state");
    }
    double total = 0.0;
    double mean_n = 0.0;
    for (std::size_t n = 0; n < field_amplitudes.size(); ++n) {
        const double p = std::norm(field_amplitudes[n]);
        total += p;
        mean_n += p * static_cast<double>(n);
    }
    if (total <= 0.0) {
        throw std::invalid_argument("sector_evolve: field state has zero norm");
    }
    mean_n /= total;
    if (mean_n >= static_cast<double>(ensemble.n_atoms)) {
        throw std::invalid_argument(
            "sector_evolve: mean photon number must stay below the atom count");
    }

    const bool needs_three_level =
        std::any_of(schedule.events.begin(), schedule.events.end(),
                    [](const ProtocolEvent& e) { return e.kind == EventKind::finite_pulse; });

    SectorEvolveResult result;
    const int n_max = static_cast<int>(field_amplitudes.size()) - 1;
    result.series.photon_levels = n_max + 1;

    bool first_sector = true;
    std::size_t row_cursor = 0;
    for (int n = 0; n <= n_max; ++n) {
        auto basis = std::make_shared<const BasisIndex>(
            BasisIndex::enumerate(ensemble.n_atoms, n, needs_three_level, dimension_cap));
        Eigen::VectorXcd amps =
            Eigen::VectorXcd::Zero(static_cast<Eigen::Index>(basis->dimension()));
        amps(0) = field_amplitudes[static_cast<std::size_t>(n)];
        QuantumState initial(basis, std::move(amps));

        row_cursor = 0;
        const auto observer = [&](double t, const QuantumState& state) {
            if (first_sector) {
                result.series.t.push_back(t);
                result.series.cph.emplace_back(0.0, 0.0);
                result.series.p_atoms.push_back(0.0);
                result.series.norm.push_back(0.0);
                result.series.p_n.emplace_back(static_cast<std::size_t>(n_max) + 1, 0.0);
            }
            auto& row_pn = result.series.p_n.at(row_cursor);
            const auto& bi = state.basis();
            double atomic = 0.0;
            for (std::size_t i = 0; i < bi.dimension(); ++i) {
                const double p = std::norm(state.amplitudes()(static_cast<Eigen::Index>(i)));
                row_pn[static_cast<std::size_t>(bi.state_at(i).photon_count)] += p;
                if (!bi.state_at(i).excited.empty()) atomic += p;
            }
            if (n == 1) {
                result.series.cph.at(row_cursor) = full_photon_amplitude(state);
            }
            result.series.p_atoms.at(row_cursor) += atomic;
            // Accumulated as squared norm; converted to a norm afterwards.
            result.series.norm.at(row_cursor) += state.amplitudes().squaredNorm();
            ++row_cursor;
        };

        auto [final_state, final_ensemble] =
            run_schedule(initial, ensemble, schedule, sample_dt, config, observer);
        (void)final_ensemble;

        result.recovered_field.push_back(full_photon_amplitude(final_state));
        result.residual_atomic.push_back(atomic_excitation_probability(final_state));
        result.final_state.sectors.push_back(std::move(final_state));
        first_sector = false;
    }

    for (auto& v : result.series.norm) v = std::sqrt(v);
    return result;
}

}  // namespace qecho
