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

#ifndef QECHO_ORACLE_HPP
#define QECHO_ORACLE_HPP

#include <complex>
#include <span>
#include <vector>

#include "qecho/ensemble.hpp"

// Closed-form solutions of the single-photon storage dynamics in the
// Markov (dense-spectrum) limit. These are the analytic ground truth the
// simulation is validated against, and the backend of the `oracle` CLI mode.

namespace qecho::oracle {

// Photon amplitude under free collective absorption: e^{-gamma t}.
double cph_free_decay(double t, double gamma);

// Amplitude of atom j during free absorption:
// i g e^{-i delta t} (e^{(i delta - gamma) t} - 1) / (i delta - gamma),
// continued analytically through i delta - gamma = 0.
std::complex<double> cj_free_decay(double t, double delta, std::complex<double> g,
                                   double gamma);

// Photon amplitude after a detuning inversion at tau (valid for t >= tau):
// 2 e^{-gamma t} - e^{-gamma |t - 2 tau|}.
double cph_j0(double t, double tau, double gamma);

// The critical delay ln 2 / (2 gamma): inverting there makes the input and
// echo fields interfere destructively and the photon is fully absorbed.
double tau_d(double gamma);

// Photon amplitude for inversion at tau_D: free decay up to tau_D, then
// 2 e^{-gamma t} - e^{gamma t}/2 on (tau_D, 2 tau_D), then identically 0.
double cph_fast_absorption(double t, double gamma);

// Total atomic excitation for inversion at tau_D, t >= tau_D:
// 3 - [4 e^{-2 gamma t} + e^{2 gamma t}/4] on (tau_D, 2 tau_D), then 1.
double p_atoms_fast_absorption(double t, double gamma);

// Atomic excitation left at the echo time 2 tau of a plain inversion:
// 4 e^{-2 gamma tau} (1 - e^{-2 gamma tau}).
double p_atoms_j0_echo(double tau, double gamma);

// Field-state map of the inversion-only protocol at full absorption:
// each Fock amplitude picks up a pi phase per photon, C_n -> (-1)^n C_n.
std::vector<std::complex<double>> multiphoton_echo_map(
    std::span<const std::complex<double>> field_amplitudes);

// Exact finite-sum memory kernel sum_j |g_j|^2 e^{i delta_j s}. For the comb
// this is a Dirichlet kernel with period 2 pi N / W; its magnitude inside
// 1/width << s << T_rec measures the finite-N error of the Markov limit.
std::complex<double> dephasing_kernel(const EnsembleSpec& ensemble, double s);

}  // namespace qecho::oracle

#endif
