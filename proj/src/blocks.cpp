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

#include "noonlab/blocks.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace noonlab {

namespace {

// Conditional probabilities at or below this are reported as impossible.
constexpr double kImpossibleProbability = 1e-300;

void validate_transmittance(double t) {
  if (!(t > 0.0 && t <= 1.0)) throw std::invalid_argument("transmittance must lie in (0, 1], got " + std::to_string(t));
}

double kappa_of(double transmittance) { return std::asin(std::sqrt(transmittance)); }

BlockOutcome run_block(const TwoModeState &s, const TwoModeState &ancilla, double kappa) {
  const int in_photons = std::max(s.max_populated_total(), 0);
  const int added = ancilla.max_populated_total();
  FourModeState joint = embed(s, ancilla, in_photons + added);
  joint = beam_splitter_pair_exact(joint, kappa);
  auto [state, p] = project_vacuum_cd(joint);
  const int out_cutoff = std::max(s.cutoff(), in_photons + added);
  if (state.cutoff() != out_cutoff) state = with_cutoff(state, out_cutoff);
  return {std::move(state), p};
}

TwoModeState zero_state(int cutoff) { return TwoModeState(cutoff); }

}  // namespace

void BlockParams::validate() const {
  if (!(theta >= 0.0 && theta <= std::numbers::pi / 2)) throw std::invalid_argument("theta must lie in [0, pi/2]");
  validate_transmittance(transmittance);
}

double BlockParams::kappa() const { return kappa_of(transmittance); }

TwoModeState ancilla_single(double theta, double phi) {
  TwoModeState s = beam_splitter(fock_ket(1, 1, 0), Mode::a, Mode::b, theta);
  return apply_phase_shift(s, Mode::b, phi);
}

TwoModeState ancilla_double(double phi) {
  TwoModeState s = beam_splitter(fock_ket(2, 1, 1), Mode::a, Mode::b, std::numbers::pi / 4);
  return apply_phase_shift(s, Mode::b, phi);
}

BlockOutcome run_block_single(const TwoModeState &s, const BlockParams &p) {
  p.validate();
  return run_block(s, ancilla_single(p.theta, p.phi), p.kappa());
}

BlockOutcome run_block_double(const TwoModeState &s, double phi, double transmittance) {
  validate_transmittance(transmittance);
  return run_block(s, ancilla_double(phi), kappa_of(transmittance));
}

std::map<std::pair<int, int>, double> block_outcome_distribution(const TwoModeState &s, const BlockParams &p) {
  p.validate();
  const TwoModeState anc = ancilla_single(p.theta, p.phi);
  FourModeState joint = embed(s, anc, std::max(s.max_populated_total(), 0) + 1);
  joint = beam_splitter_pair_exact(joint, p.kappa());
  std::map<std::pair<int, int>, double> dist;
  for (int nc = 0; nc <= joint.cutoff(); ++nc) {
    for (int nd = 0; nc + nd <= joint.cutoff(); ++nd) dist[{nc, nd}] = project_cd(joint, nc, nd).norm2();
  }
  return dist;
}

double block_amplitude_single(int k, double kappa) { return std::pow(std::cos(kappa), k - 1) * std::sin(kappa); }

double block_amplitude_double(int k, double kappa) {
  const double s = std::sin(kappa);
  return 0.5 * std::pow(std::cos(kappa), 2 * (k - 1)) * s * s;
}

std::vector<double> optimal_schedule(int blocks) {
  std::vector<double> t;
  for (int k = 1; k <= blocks; ++k) t.push_back(1.0 / k);
  return t;
}

SchemeResult run_scheme(std::span<const FactorAngles> factors, std::span<const double> transmittances) {
  if (factors.empty()) throw std::invalid_argument("scheme needs at least one block");
  if (factors.size() != transmittances.size()) {
    throw std::invalid_argument("got " + std::to_string(factors.size()) + " factors but " +
                                std::to_string(transmittances.size()) + " transmittances");
  }
  const int photons = static_cast<int>(factors.size());
  SchemeResult result{zero_state(photons), {}, 1.0, false};
  TwoModeState state = vacuum(0);
  for (std::size_t k = 0; k < factors.size(); ++k) {
    if (result.impossible) {
      result.block_probs.push_back(0.0);
      continue;
    }
    auto outcome = run_block_single(state, {factors[k].theta, factors[k].phi, transmittances[k]});
    result.block_probs.push_back(outcome.probability);
    if (outcome.probability <= kImpossibleProbability) {
      result.impossible = true;
      continue;
    }
    state = std::move(outcome.state);
    state *= 1.0 / std::sqrt(outcome.probability);
    result.total_yield *= outcome.probability;
  }
  if (result.impossible) {
    result.total_yield = 0.0;
  } else {
    result.final_state = with_cutoff(state, photons);
  }
  return result;
}

SchemeResult run_scheme_double(int photons, std::span<const double> phases, std::span<const double> transmittances) {
  if (photons < 2 || photons % 2 != 0) {
    throw std::invalid_argument("two-photon scheme needs an even photon number, got " + std::to_string(photons));
  }
  const auto steps = static_cast<std::size_t>(photons / 2);
  if (phases.size() != steps || transmittances.size() != steps) {
    throw std::invalid_argument("two-photon scheme needs " + std::to_string(steps) + " phases and transmittances");
  }
  SchemeResult result{zero_state(photons), {}, 1.0, false};
  TwoModeState state = vacuum(0);
  for (std::size_t k = 0; k < steps; ++k) {
    if (result.impossible) {
      result.block_probs.push_back(0.0);
      continue;
    }
    auto outcome = run_block_double(state, phases[k], transmittances[k]);
    result.block_probs.push_back(outcome.probability);
    if (outcome.probability <= kImpossibleProbability) {
      result.impossible = true;
      continue;
    }
    state = std::move(outcome.state);
    state *= 1.0 / std::sqrt(outcome.probability);
    result.total_yield *= outcome.probability;
  }
  if (result.impossible) {
    result.total_yield = 0.0;
  } else {
    result.final_state = with_cutoff(state, photons);
  }
  return result;
}

std::vector<double> noon_pair_phases(int photons) {
  if (photons < 2 || photons % 2 != 0) throw std::invalid_argument("NOON pair phases need an even photon number");
  std::vector<double> phases;
  for (int k = 1; k <= photons / 2; ++k) phases.push_back(wrap_phase((2.0 * k + 1.0) * std::numbers::pi / photons));
  return phases;
}

TwoModeDensity run_scheme_unconditional(std::span<const FactorAngles> factors, std::span<const double> transmittances) {
  if (factors.empty()) throw std::invalid_argument("scheme needs at least one block");
  if (factors.size() != transmittances.size()) throw std::invalid_argument("factor and transmittance counts differ");

  TwoModeDensity rho = TwoModeDensity::pure(vacuum(0));
  for (std::size_t k = 0; k < factors.size(); ++k) {
    const BlockParams p{factors[k].theta, factors[k].phi, transmittances[k]};
    p.validate();
    const TwoModeState anc = ancilla_single(p.theta, p.phi);
    const int cin = rho.cutoff();
    const int cout = cin + 1;
    const auto &in_kets = rho.basis().kets();
    const auto dim_in = static_cast<Eigen::Index>(in_kets.size());
    const auto dim_out = static_cast<Eigen::Index>(FockBasis<2>::get(cout)->size());

    // One Kraus operator per ancilla detection pattern, built column by
    // column from the block's action on each input ket.
    std::map<std::pair<int, int>, Eigen::MatrixXcd> kraus;
    for (Eigen::Index col = 0; col < dim_in; ++col) {
      const auto &ket = in_kets[static_cast<std::size_t>(col)];
      FourModeState joint = embed(fock_ket(cin, ket[0], ket[1]), anc, cout);
      joint = beam_splitter_pair_exact(joint, p.kappa());
      for (int nc = 0; nc <= cout; ++nc) {
        for (int nd = 0; nc + nd <= cout; ++nd) {
          auto [it, inserted] = kraus.try_emplace({nc, nd}, Eigen::MatrixXcd::Zero(dim_out, dim_in));
          it->second.col(col) = project_cd(joint, nc, nd).amplitudes();
        }
      }
    }
    TwoModeDensity next(cout);
    for (const auto &[outcome, op] : kraus) next.matrix() += op * rho.matrix() * op.adjoint();
    rho = std::move(next);
  }
  return rho;
}

}  // namespace noonlab
