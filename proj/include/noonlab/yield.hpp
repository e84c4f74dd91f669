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

#include <optional>
#include <vector>

namespace noonlab {

/// Success weight T (1-T)^{k-1} of block k.
double qk_squared(double transmittance, int k);

/// 1/k, the maximizer of qk_squared over T. Throws for k < 1.
double optimal_transmittance(int k);

/// Optimal-schedule yield N^{-N} times the factor normalization.
double yield_generic(double normalization, int photons);

/// NOON yield with one photon per block: (N-1)! (2N)^{1-N}.
double yield_noon_single(int photons);

/// NOON yield with two photons per block: 2^N times the single-photon yield,
/// i.e. 2 (N-1)! N^{1-N}. Throws for odd N.
double yield_noon_double(int photons);

/// The same expression with the factorial dropped, 2 (N-1) N^{1-N}. Kept
/// only so yield tables can show that it disagrees with simulation.
double yield_noon_double_without_factorial(int photons);

/// Large-N approximation 2 sqrt(2 pi N) (2e)^{-N} of yield_noon_single.
double yield_stirling(int photons);

/// n! in double precision: exact products up to 16, lgamma beyond.
double factorial(int n);

struct YieldRow {
  int photons = 0;
  double single = 0.0;                       // closed form
  double stirling = 0.0;
  std::optional<double> double_closed;       // even N only
  std::optional<double> double_without_factorial;
  std::optional<double> ratio_double_over_single;
  std::optional<double> single_simulated;    // filled when simulated
  std::optional<double> double_simulated;
};

/// Closed-form rows for N = 1..max_photons; when simulate_up_to > 0 the
/// NOON schemes are also simulated for N <= simulate_up_to.
std::vector<YieldRow> yield_table(int max_photons, int simulate_up_to = 0);

/// Which reading of the two-photon yield formula the simulated column
/// supports: true if the factorial form agrees with every simulated even row
/// to relative tolerance `rel_tol` and the factorial-free form does not.
bool simulation_confirms_factorial_reading(const std::vector<YieldRow> &rows, double rel_tol = 1e-9);

}  // namespace noonlab
