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

#include "noonlab/factorize.hpp"
#include "noonlab/fock.hpp"

#include <map>
#include <span>
#include <utility>
#include <vector>

namespace noonlab {

/// Parameters of one conditional photon-adding block: the ancilla splitter
/// angle theta, the ancilla phase phi, and the transmittance T = sin^2(kappa)
/// of the two identical splitters coupling the ancillas into a and b.
struct BlockParams {
  double theta = 0.0;
  double phi = 0.0;
  double transmittance = 1.0;

  /// Throws std::invalid_argument unless 0 <= theta <= pi/2 and 0 < T <= 1.
  void validate() const;
  double kappa() const;
};

/// Conditional output of one block. `state` is unnormalized and
/// `probability` equals its squared norm.
struct BlockOutcome {
  TwoModeState state;
  double probability;
};

struct SchemeResult {
  TwoModeState final_state{0};       // normalized; zero if impossible
  std::vector<double> block_probs;   // conditional success probability of each block
  double total_yield = 0.0;          // product of block_probs
  bool impossible = false;           // some block had zero success probability
};

/// Ancilla pair state cos(theta)|1,0> - e^{i phi} sin(theta)|0,1> over (c, d),
/// produced from |1,0> by a splitter of angle theta and a phase shifter on d.
/// The returned two-mode container stores c in slot a and d in slot b.
TwoModeState ancilla_single(double theta, double phi);

/// (|2,0> - e^{2 i phi}|0,2>)/sqrt(2) over (c, d), produced from |1,1> by a
/// balanced splitter (two-photon bunching) and a phase shifter on d.
TwoModeState ancilla_double(double phi);

/// One single-photon block: s (x) ancilla, both coupling splitters, then
/// conditioning on empty ancilla detectors.
BlockOutcome run_block_single(const TwoModeState &s, const BlockParams &p);

/// One two-photon block with ancilla_double(phi) and transmittance T.
BlockOutcome run_block_double(const TwoModeState &s, double phi, double transmittance);

/// Probability of every ancilla detection pattern (n_c, n_d) for one
/// single-photon block acting on s.
std::map<std::pair<int, int>, double> block_outcome_distribution(const TwoModeState &s, const BlockParams &p);

/// Closed-form amplitude factor of a single-photon block whose input holds
/// k-1 photons: cos(kappa)^{k-1} sin(kappa).
double block_amplitude_single(int k, double kappa);

/// Closed-form amplitude factor of a two-photon block whose input holds
/// 2(k-1) photons: cos(kappa)^{2(k-1)} sin(kappa)^2 / 2.
double block_amplitude_double(int k, double kappa);

/// T_k = 1/k for k = 1..blocks.
std::vector<double> optimal_schedule(int blocks);

/// Chains one single-photon block per factor starting from vacuum.
SchemeResult run_scheme(std::span<const FactorAngles> factors, std::span<const double> transmittances);

/// Chains N/2 two-photon blocks starting from vacuum. Throws
/// std::invalid_argument for odd N or mismatched list lengths.
SchemeResult run_scheme_double(int photons, std::span<const double> phases, std::span<const double> transmittances);

/// Phases (2k+1) pi / N, k = 1..N/2, whose two-photon blocks build NOON(N).
std::vector<double> noon_pair_phases(int photons);

/// The same chain as run_scheme without conditioning: the ancillas are
/// traced out after every block. Returns the final reduced density of a, b.
TwoModeDensity run_scheme_unconditional(std::span<const FactorAngles> factors, std::span<const double> transmittances);

}  // namespace noonlab
