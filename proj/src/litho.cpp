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

#include "noonlab/litho.hpp"

#include "noonlab/yield.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace noonlab {

namespace {

void require_photons(int photons) {
  if (photons < 1) throw std::invalid_argument("absorption order must be at least 1, got " + std::to_string(photons));
}

TwoModeState apply_field(const TwoModeState &s) {
  return apply_annihilation(s, Mode::a) + apply_annihilation(s, Mode::b);
}

TwoModeState apply_field_power(TwoModeState s, int photons) {
  for (int i = 0; i < photons; ++i) s = apply_field(s);
  return s;
}

}  // namespace

double absorption_rate_pure(const TwoModeState &s, int photons) {
  require_photons(photons);
  if (photons > s.cutoff()) return 0.0;
  return apply_field_power(s, photons).norm2() / factorial(photons);
}

double absorption_rate_mixed(const TwoModeDensity &rho, int photons) {
  require_photons(photons);
  if (photons > rho.cutoff()) return 0.0;
  // Matrix of e^N on the basis, column by column; Tr(rho E^dag E) = Tr(E rho E^dag).
  const auto &kets = rho.basis().kets();
  const auto dim = static_cast<Eigen::Index>(kets.size());
  Eigen::MatrixXcd field(dim, dim);
  for (Eigen::Index col = 0; col < dim; ++col) {
    const auto &k = kets[static_cast<std::size_t>(col)];
    field.col(col) = apply_field_power(fock_ket(rho.cutoff(), k[0], k[1]), photons).amplitudes();
  }
  return (field * rho.matrix() * field.adjoint()).trace().real() / factorial(photons);
}

FringeSweep fringe_sweep(const TwoModeState &s, int photons, int n_points) {
  require_photons(photons);
  if (n_points < 2) throw std::invalid_argument("fringe sweep needs at least two points");
  FringeSweep sweep;
  sweep.photons = photons;
  for (int j = 0; j < n_points; ++j) {
    const double phi = 2.0 * std::numbers::pi * j / n_points;
    sweep.phases.push_back(phi);
    sweep.rates.push_back(absorption_rate_pure(apply_phase_shift(s, Mode::b, phi), photons));
  }
  return sweep;
}

std::vector<double> fringe_spectrum(const FringeSweep &sweep) {
  const std::size_t n = sweep.rates.size();
  std::vector<double> mags;
  for (std::size_t f = 0; f <= n / 2; ++f) {
    Complex acc = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
      acc += sweep.rates[j] * std::polar(1.0, -2.0 * std::numbers::pi * static_cast<double>(f * j) / static_cast<double>(n));
    }
    mags.push_back(std::abs(acc));
  }
  return mags;
}

int dominant_frequency(const FringeSweep &sweep) {
  const auto mags = fringe_spectrum(sweep);
  double best = 0.0;
  int best_f = 0;
  for (std::size_t f = 1; f < mags.size(); ++f) {
    // Relative margin keeps rounding noise from beating an exact tie.
    if (mags[f] > best * (1.0 + 1e-9) + 1e-12) {
      best = mags[f];
      best_f = static_cast<int>(f);
    }
  }
  return best_f;
}

}  // namespace noonlab
