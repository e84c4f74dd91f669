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

#include "noonlab/yield.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace noonlab {

namespace {

void require_photons(int photons) {
  if (photons < 1) throw std::invalid_argument("photon number must be at least 1, got " + std::to_string(photons));
}

void require_even(int photons) {
  require_photons(photons);
  if (photons % 2 != 0) throw std::invalid_argument("two-photon steps need an even photon number");
}

double log_factorial(int n) {
  if (n <= 16) return std::log(factorial(n));
  return std::lgamma(static_cast<double>(n) + 1.0);
}

}  // namespace

double factorial(int n) {
  if (n < 0) throw std::invalid_argument("factorial of a negative number");
  if (n <= 16) {
    unsigned long long f = 1;
    for (int i = 2; i <= n; ++i) f *= static_cast<unsigned long long>(i);
    return static_cast<double>(f);
  }
  return std::exp(std::lgamma(static_cast<double>(n) + 1.0));
}

double qk_squared(double transmittance, int k) {
  if (k < 1) throw std::invalid_argument("block index must be at least 1");
  if (!(transmittance >= 0.0 && transmittance <= 1.0)) throw std::invalid_argument("transmittance must lie in [0, 1]");
  return transmittance * std::pow(1.0 - transmittance, k - 1);
}

double optimal_transmittance(int k) {
  if (k < 1) throw std::invalid_argument("block index must be at least 1, got " + std::to_string(k));
  return 1.0 / k;
}

double yield_generic(double normalization, int photons) {
  require_photons(photons);
  if (!(normalization > 0.0)) throw std::invalid_argument("normalization must be positive");
  return normalization * std::pow(static_cast<double>(photons), -photons);
}

double yield_noon_single(int photons) {
  require_photons(photons);
  const double n = photons;
  if (photons <= 16) return factorial(photons - 1) * std::pow(2.0 * n, 1.0 - n);
  return std::exp(log_factorial(photons - 1) + (1.0 - n) * std::log(2.0 * n));
}

double yield_noon_double(int photons) {
  require_even(photons);
  return std::ldexp(yield_noon_single(photons), photons);
}

double yield_noon_double_without_factorial(int photons) {
  require_even(photons);
  const double n = photons;
  return 2.0 * (n - 1.0) * std::pow(n, 1.0 - n);
}

double yield_stirling(int photons) {
  require_photons(photons);
  const double n = photons;
  return 2.0 * std::sqrt(2.0 * std::numbers::pi * n) * std::pow(2.0 * std::numbers::e, -n);
}

}  // namespace noonlab
