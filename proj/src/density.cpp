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

#include "noonlab/density.hpp"

#include <Eigen/Eigenvalues>

namespace noonlab {

TwoModeDensity::TwoModeDensity(int cutoff)
    : basis_(FockBasis<2>::get(cutoff)),
      rho_(Eigen::MatrixXcd::Zero(static_cast<Eigen::Index>(basis_->size()),
                                  static_cast<Eigen::Index>(basis_->size()))) {}

TwoModeDensity::TwoModeDensity(int cutoff, Eigen::MatrixXcd matrix)
    : basis_(FockBasis<2>::get(cutoff)), rho_(std::move(matrix)) {
  const auto n = static_cast<Eigen::Index>(basis_->size());
  if (rho_.rows() != n || rho_.cols() != n) throw std::invalid_argument("density matrix does not match basis size");
}

TwoModeDensity TwoModeDensity::pure(const TwoModeState &s) {
  return TwoModeDensity(s.cutoff(), s.amplitudes() * s.amplitudes().adjoint());
}

Complex TwoModeDensity::entry(int na, int nb, int ma, int mb) const {
  auto i = basis_->index({na, nb});
  auto j = basis_->index({ma, mb});
  if (!i || !j) return {};
  return rho_(static_cast<Eigen::Index>(*i), static_cast<Eigen::Index>(*j));
}

bool TwoModeDensity::is_hermitian(double tol) const { return (rho_ - rho_.adjoint()).cwiseAbs().maxCoeff() <= tol; }

double TwoModeDensity::min_eigenvalue() const {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(rho_, Eigen::EigenvaluesOnly);
  return solver.eigenvalues().minCoeff();
}

TwoModeDensity TwoModeDensity::sector(int total) const {
  TwoModeDensity out(cutoff());
  const auto [first, count] = basis_->sector(total);
  const auto f = static_cast<Eigen::Index>(first);
  const auto n = static_cast<Eigen::Index>(count);
  out.rho_.block(f, f, n, n) = rho_.block(f, f, n, n);
  return out;
}

int TwoModeDensity::max_populated_total(double tol) const {
  for (int t = cutoff(); t >= 0; --t) {
    const auto [first, count] = basis_->sector(t);
    const auto f = static_cast<Eigen::Index>(first);
    const auto n = static_cast<Eigen::Index>(count);
    if (rho_.middleRows(f, n).cwiseAbs().maxCoeff() > tol) return t;
    if (rho_.middleCols(f, n).cwiseAbs().maxCoeff() > tol) return t;
  }
  return -1;
}

}  // namespace noonlab
