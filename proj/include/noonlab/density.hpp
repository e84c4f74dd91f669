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

namespace noonlab {

/// Density matrix over the two-mode basis of a given cutoff. Rows and
/// columns follow FockBasis<2> ordering.
class TwoModeDensity {
 public:
  explicit TwoModeDensity(int cutoff);
  TwoModeDensity(int cutoff, Eigen::MatrixXcd matrix);

  /// |s><s| (not renormalized).
  static TwoModeDensity pure(const TwoModeState &s);

  int cutoff() const { return basis_->cutoff(); }
  std::size_t dim() const { return basis_->size(); }
  const FockBasis<2> &basis() const { return *basis_; }

  const Eigen::MatrixXcd &matrix() const { return rho_; }
  Eigen::MatrixXcd &matrix() { return rho_; }

  Complex entry(int na, int nb, int ma, int mb) const;

  double trace() const { return rho_.trace().real(); }
  bool is_hermitian(double tol = 1e-12) const;
  double min_eigenvalue() const;

  /// The block with both row and column kets at the given total photon
  /// number, embedded back into a full-size density (all else zero).
  TwoModeDensity sector(int total) const;

  /// Largest total photon number n with a nonzero entry in any row or column
  /// of that sector (|entry| > tol); -1 if the matrix vanishes.
  int max_populated_total(double tol = 0.0) const;

 private:
  std::shared_ptr<const FockBasis<2>> basis_;
  Eigen::MatrixXcd rho_;
};

}  // namespace noonlab
