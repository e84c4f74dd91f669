// Copyright 2026 The noonlab Authors
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

#pragma once

#include "noonlab/fock.hpp"

#include <vector>

namespace noonlab {

// N-photon absorption rate <e^dagger^N e^N> / N! with e = a + b (no 1/sqrt(2)).

/// Rate for a pure state, via |e^N s|^2 / N!.
double absorption_rate_pure(const TwoModeState &s, int photons);

/// Tr(rho e^dagger^N e^N) / N!.
double absorption_rate_mixed(const TwoModeDensity &rho, int photons);

struct FringeSweep {
  int photons = 0;
  std::vector<double> phases;
  std::vector<double> rates;
};

/// Absorption rate of exp(i phi n_b) s on a uniform grid phi_j = 2 pi j / n
/// over [0, 2 pi). Throws for n_points < 2.
FringeSweep fringe_sweep(const TwoModeState &s, int photons, int n_points);

/// |DFT| of the sweep for frequencies 0..n/2.
std::vector<double> fringe_spectrum(const FringeSweep &sweep);

/// Nonzero frequency with the largest spectral magnitude (lowest wins
/// ties); 0 for a flat sweep.
int dominant_frequency(const FringeSweep &sweep);

}  // namespace noonlab
