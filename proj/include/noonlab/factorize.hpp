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

#include <span>
#include <vector>

namespace noonlab {

/// Target N-photon path-entangled state sum_k c_k |k, N-k>.
///
/// Coefficients are normalized on construction; an all-zero vector or a
/// length other than N+1 is rejected with std::invalid_argument.
class TargetSpec {
 public:
  TargetSpec(int photons, std::vector<Complex> coeffs);

  int photons() const { return photons_; }
  const std::vector<Complex> &coeffs() const { return coeffs_; }

  /// The target as a two-mode state; cutoff defaults to N.
  TwoModeState to_state(int cutoff = -1) const;

 private:
  int photons_;
  std::vector<Complex> coeffs_;
};

/// (|N,0> + |0,N>)/sqrt(2).
TargetSpec noon_target(int photons);

/// One linear factor cos(theta) a^dagger - e^{i phi} sin(theta) b^dagger,
/// theta in [0, pi/2], phi in [-pi, pi).
struct FactorAngles {
  double theta;
  double phi;
};

/// Target written as (global_phase / sqrt(normalization)) * prod_k factor_k |0,0>.
struct FactorSet {
  std::vector<FactorAngles> factors;
  double normalization = 1.0;
  Complex global_phase = 1.0;
};

/// Wraps an angle into [-pi, pi).
double wrap_phase(double phi);

/// Monomial weights d_k = c_k / sqrt(k! (N-k)!) of the target written as a
/// polynomial in the creation operators.
std::vector<Complex> monomial_coeffs(const TargetSpec &t);

/// Roots of sum_k coeffs[k] z^k with a nonzero leading coefficient: exact
/// zeros are split off, the rest come from the eigenvalues of the balanced
/// companion matrix followed by one Newton step per root.
std::vector<Complex> polynomial_roots(std::span<const Complex> coeffs);

/// Factor angles from the roots z = e^{i phi} tan(theta) of sum_k d_k z^k.
/// A polynomial of degree m < N contributes N-m roots at infinity, encoded
/// as theta = pi/2, phi = 0.
std::vector<FactorAngles> find_factor_angles(std::span<const Complex> d);

/// prod_k factor_k |0,0> built in the Fock basis (unnormalized).
TwoModeState factor_product(std::span<const FactorAngles> factors, int cutoff = -1);

/// Squared norm of factor_product.
double normalization(std::span<const FactorAngles> factors);

/// Full factorization: angles, normalization and the phase aligning the
/// product with the target.
FactorSet factorize(const TargetSpec &t);

/// Normalized state represented by a factor set.
TwoModeState reconstruct(const FactorSet &f);

/// NOON factors: theta = pi/4, phi_k = (2k+1) pi / N for k = 1..N (wrapped).
std::vector<FactorAngles> noon_factor_angles(int photons);

/// For targets that are polynomials in a^dagger^2 and b^dagger^2 whose
/// factors all have the form (a^dagger^2 - e^{2 i phi} b^dagger^2): the N/2
/// phases phi. Throws std::invalid_argument otherwise (odd N, odd-k
/// population, or a factor not realizable with a balanced splitter).
std::vector<double> pair_factor_phases(const TargetSpec &t, double tol = 1e-6);

}  // namespace noonlab
