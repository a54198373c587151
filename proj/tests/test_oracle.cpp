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

#include <cmath>
#include <numbers>

#include "qecho/oracle.hpp"

using namespace qecho;
using namespace qecho::oracle;

TEST_CASE("free decay values") {
    CHECK(cph_free_decay(0.0, 1.7) == 1.0);
    const double gamma = 0.8;
    CHECK(cph_free_decay(std::log(2.0) / gamma, gamma) == doctest::Approx(0.5).epsilon(1e-12));
    CHECK_THROWS_AS(cph_free_decay(-0.1, 1.0), std::invalid_argument);
}

TEST_CASE("atomic amplitude during free decay") {
    CHECK(std::abs(cj_free_decay(0.0, 1.0, 0.3, 0.5)) == 0.0);

    // resonant atom, long time: i g / gamma
    const auto limit = cj_free_decay(200.0, 0.0, 0.3, 0.5);
    CHECK(std::abs(limit - std::complex<double>(0.0, 0.6)) < 1e-10);

    // degenerate pole: i g t
    const auto degenerate = cj_free_decay(2.0, 0.0, 0.3, 0.0);
    CHECK(std::abs(degenerate - std::complex<double>(0.0, 0.6)) < 1e-9);

    // consistency with the generic branch just off the pole
    const auto near = cj_free_decay(2.0, 1e-9, 0.3, 1e-9);
    CHECK(std::abs(near - degenerate) < 1e-8);
}

TEST_CASE("norm conservation across the dense-comb atomic amplitudes") {
    // sum_j |c_j(t)|^2 + e^{-2 gamma t} = 1 within 2% for the reference comb
    const auto e = make_comb(400, 100.0, std::sqrt(100.0 / (400.0 * std::numbers::pi)));
    const double gamma = decay_rate(e);
    REQUIRE(gamma == doctest::Approx(1.0));
    for (double t : {0.5, 1.0, 2.0, 3.0}) {
        double p_atoms = 0.0;
        for (int j = 0; j < e.n_atoms; ++j) {
            const auto k = static_cast<std::size_t>(j);
            p_atoms += std::norm(cj_free_decay(t, e.detunings2[k], e.couplings[k], gamma));
        }
        CHECK(p_atoms + std::exp(-2.0 * gamma * t) == doctest::Approx(1.0).epsilon(0.02));
    }
}

TEST_CASE("inversion echo amplitude") {
    const double gamma = 1.0;
    const double tau = 3.0;
    // continuous with free decay at the switch
    CHECK(cph_j0(tau, tau, gamma) ==
          doctest::Approx(cph_free_decay(tau, gamma)).epsilon(1e-12));
    // echo value at t = 2 tau
    CHECK(cph_j0(2.0 * tau, tau, gamma) ==
          doctest::Approx(2.0 * std::exp(-6.0) - 1.0).epsilon(1e-12));
    CHECK(cph_j0(2.0 * tau, tau, gamma) == doctest::Approx(-0.995042).epsilon(1e-4));
    // gamma tau >> 1: complete echo with a pi phase
    CHECK(cph_j0(40.0, 20.0, gamma) == doctest::Approx(-1.0).epsilon(1e-10));
    CHECK_THROWS_AS(cph_j0(1.0, 3.0, gamma), std::invalid_argument);
}

TEST_CASE("no-inversion limit of the echo formula") {
    const double gamma = 0.7;
    for (double t : {0.5, 1.0, 4.0}) {
        // tau far beyond any observation time: |t - 2tau| = 2tau - t is huge
        CHECK(cph_j0(t + 1e6, 1e6, gamma) ==
              doctest::Approx(2.0 * cph_free_decay(t + 1e6, gamma)).epsilon(1e-9));
    }
}

TEST_CASE("critical delay tau_D") {
    CHECK(tau_d(1.0) == doctest::Approx(0.346574).epsilon(1e-6));
    CHECK(tau_d(2.0) == doctest::Approx(0.173287).epsilon(1e-6));
    CHECK(tau_d(0.5 * std::log(2.0)) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK_THROWS_AS(tau_d(0.0), std::invalid_argument);
}

TEST_CASE("fast absorption piecewise curve") {
    const double gamma = 1.0;
    const double td = tau_d(gamma);

    // continuity at tau_D and at 2 tau_D
    CHECK(cph_fast_absorption(td * (1.0 - 1e-13), gamma) ==
          doctest::Approx(cph_fast_absorption(td * (1.0 + 1e-13), gamma)).epsilon(1e-12));
    CHECK(cph_fast_absorption(2.0 * td * (1.0 - 1e-13), gamma) ==
          doctest::Approx(0.0).epsilon(1e-12));
    CHECK(cph_fast_absorption(2.0 * td, gamma) == 0.0);
    CHECK(cph_fast_absorption(3.0 * td, gamma) == 0.0);

    // interior value: 2^{1/4} - 2^{-1/4} at t = 1.5 tau_D
    CHECK(cph_fast_absorption(1.5 * td, gamma) ==
          doctest::Approx(std::pow(2.0, 0.25) - std::pow(2.0, -0.25)).epsilon(1e-12));
    CHECK(cph_fast_absorption(1.5 * td, gamma) == doctest::Approx(0.348311).epsilon(1e-5));
}

TEST_CASE("fast absorption atomic population") {
    const double gamma = 1.3;
    const double td = tau_d(gamma);

    CHECK(p_atoms_fast_absorption(1.5 * td, gamma) ==
          doctest::Approx(3.0 - (4.0 * std::pow(2.0, -1.5) + 0.25 * std::pow(2.0, 1.5)))
              .epsilon(1e-12));
    CHECK(p_atoms_fast_absorption(2.0 * td, gamma) == 1.0);
    CHECK(p_atoms_fast_absorption(5.0 * td, gamma) == 1.0);

    // continuity with free decay at the switch: 1 - |c_ph(tau_D)|^2 = 1/2
    CHECK(p_atoms_fast_absorption(td * (1.0 + 1e-13), gamma) ==
          doctest::Approx(0.5).epsilon(1e-10));
    CHECK(1.0 - std::pow(cph_free_decay(td, gamma), 2) == doctest::Approx(0.5).epsilon(1e-12));

    CHECK_THROWS_AS(p_atoms_fast_absorption(0.1 * td, gamma), std::invalid_argument);
}

TEST_CASE("fast absorption conserves probability exactly") {
    const double gamma = 0.9;
    const double td = tau_d(gamma);
    for (double f = 1.01; f < 2.0; f += 0.07) {
        const double t = f * td;
        const double total = std::pow(cph_fast_absorption(t, gamma), 2) +
                             p_atoms_fast_absorption(t, gamma);
        CHECK(std::abs(total - 1.0) <= 1e-12);
    }
}

TEST_CASE("echo-time atomic population of the inversion protocol") {
    const double gamma = 1.0;
    // at tau = tau_D the photon is fully transferred
    CHECK(p_atoms_j0_echo(tau_d(gamma), gamma) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(p_atoms_j0_echo(20.0, gamma) == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(p_atoms_j0_echo(0.0, gamma) == 0.0);
    // consistency with the echo amplitude: P_atoms(2tau) = 1 - c_ph(2tau)^2
    for (double tau : {0.2, 0.5, 1.0, 2.0}) {
        CHECK(p_atoms_j0_echo(tau, gamma) ==
              doctest::Approx(1.0 - std::pow(cph_j0(2.0 * tau, tau, gamma), 2))
                  .epsilon(1e-12));
    }
}

TEST_CASE("pi-per-photon field map") {
    using cvec = std::vector<std::complex<double>>;
    CHECK(multiphoton_echo_map(cvec{1.0, 0.0, 0.0}) == cvec{1.0, 0.0, 0.0});
    CHECK(multiphoton_echo_map(cvec{0.0, 1.0, 0.0}) == cvec{0.0, -1.0, 0.0});

    const cvec in{{0.4, 0.1}, {0.5, -0.2}, {0.0, 0.7}};
    const auto once = multiphoton_echo_map(in);
    CHECK(once[0] == in[0]);
    CHECK(once[1] == -in[1]);
    CHECK(once[2] == in[2]);
    CHECK(multiphoton_echo_map(once) == in);
}

TEST_CASE("dephasing kernel of the comb") {
    const auto e = make_comb(400, 100.0, 0.5);
    const double total = 400.0 * 0.25;

    // s = 0: sum of squared couplings
    CHECK(dephasing_kernel(e, 0.0).real() == doctest::Approx(total).epsilon(1e-12));
    CHECK(dephasing_kernel(e, 0.0).imag() == doctest::Approx(0.0));

    // The midpoint comb has half-odd-integer tooth positions, so the complex
    // kernel is anti-periodic at T_rec = 2 pi N / W and periodic at 2 T_rec;
    // the revival of |K| happens every T_rec.
    const double t_rec = recurrence_time(e);
    CHECK(t_rec == doctest::Approx(8.0 * std::numbers::pi));
    for (double s : {0.3, 1.1}) {
        CHECK(std::abs(dephasing_kernel(e, s + t_rec) + dephasing_kernel(e, s)) <
              1e-9 * total);
        CHECK(std::abs(dephasing_kernel(e, s + 2.0 * t_rec) - dephasing_kernel(e, s)) <
              1e-9 * total);
        CHECK(std::abs(std::abs(dephasing_kernel(e, s + t_rec)) -
                       std::abs(dephasing_kernel(e, s))) < 1e-9 * total);
    }

    // small inside the Markov window 1/width << s << T_rec
    for (double s : {0.5, 2.0, 8.0}) {
        CHECK(std::abs(dephasing_kernel(e, s)) < 0.05 * total);
    }
}
