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

#include <Eigen/Dense>

#include <array>
#include <complex>
#include <cstddef>
#include <memory>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

namespace noonlab {

using Complex = std::complex<double>;

/// Mode labels. Two-mode states use a and b; four-mode states add the
/// ancilla modes c and d.
enum class Mode : int { a = 0, b = 1, c = 2, d = 3 };

/// Raised when a ladder operation would populate a ket above the cutoff.
class CutoffOverflow : public std::overflow_error {
 public:
  using std::overflow_error::overflow_error;
};

/// Dense basis over the photon-number simplex n_0 + ... + n_{M-1} <= cutoff.
///
/// Kets are ordered by total photon number, and within one total in
/// descending lexicographic order, so the two-mode ordering reads
/// |0,0>, |1,0>, |0,1>, |2,0>, |1,1>, |0,2>, ...
/// Bases are immutable and shared between states via `FockBasis::get`.
template <int M>
class FockBasis {
 public:
  using Ket = std::array<int, M>;

  explicit FockBasis(int cutoff);

  /// Shared instance for a given cutoff; thread safe.
  static std::shared_ptr<const FockBasis> get(int cutoff);

  int cutoff() const { return cutoff_; }
  std::size_t size() const { return kets_.size(); }
  const Ket &ket(std::size_t i) const { return kets_[i]; }
  const std::vector<Ket> &kets() const { return kets_; }

  /// Position of `k` in the basis, or nothing if it lies outside the simplex.
  std::optional<std::size_t> index(const Ket &k) const;

  /// First index and count of kets with the given total photon number.
  std::pair<std::size_t, std::size_t> sector(int total) const;

  static int total(const Ket &k) {
    int t = 0;
    for (int n : k) t += n;
    return t;
  }

 private:
  int cutoff_;
  std::vector<Ket> kets_;
  std::vector<int> lookup_;  // (cutoff+1)^M grid -> basis index or -1
};

/// Complex amplitude table over a FockBasis. States may be unnormalized:
/// conditional outputs carry their success probability in the norm.
template <int M>
class FockState {
 public:
  using Ket = typename FockBasis<M>::Ket;

  /// Zero state with the given cutoff.
  explicit FockState(int cutoff);

  int cutoff() const { return basis_->cutoff(); }
  std::size_t dim() const { return basis_->size(); }
  const FockBasis<M> &basis() const { return *basis_; }

  /// Amplitude of `k`; kets outside the simplex have amplitude zero.
  Complex amp(const Ket &k) const;
  /// Mutable amplitude; throws CutoffOverflow outside the simplex.
  Complex &at(const Ket &k);

  const Eigen::VectorXcd &amplitudes() const { return amps_; }
  Eigen::VectorXcd &amplitudes() { return amps_; }

  double norm2() const { return amps_.squaredNorm(); }
  bool is_zero() const { return amps_.isZero(0.0); }

  /// Largest total photon number carrying a nonzero amplitude, -1 for the
  /// zero state.
  int max_populated_total() const;

  FockState &operator*=(Complex s) {
    amps_ *= s;
    return *this;
  }
  FockState &operator+=(const FockState &o);
  friend FockState operator*(Complex s, FockState x) { return x *= s; }
  friend FockState operator+(FockState x, const FockState &y) { return x += y; }

 private:
  std::shared_ptr<const FockBasis<M>> basis_;
  Eigen::VectorXcd amps_;
};

using TwoModeState = FockState<2>;
using FourModeState = FockState<4>;

/// |0,0> with the given cutoff.
TwoModeState vacuum(int cutoff);

/// |n_a, n_b> with the given cutoff.
TwoModeState fock_ket(int cutoff, int n_a, int n_b);

/// Copy of `s` re-expressed with a different cutoff. Throws CutoffOverflow
/// when shrinking would discard a populated ket.
template <int M>
FockState<M> with_cutoff(const FockState<M> &s, int cutoff);

// ---------------------------------------------------------------------------
// Ladder algebra.

/// m^dagger s. Throws CutoffOverflow if a populated ket already sits at the
/// cutoff.
template <int M>
FockState<M> apply_creation(const FockState<M> &s, Mode mode);

/// m s.
template <int M>
FockState<M> apply_annihilation(const FockState<M> &s, Mode mode);

/// exp(i phi n_m) s.
template <int M>
FockState<M> apply_phase_shift(const FockState<M> &s, Mode mode, double phi);

/// (cos(theta) a^dagger - e^{i phi} sin(theta) b^dagger) s.
TwoModeState apply_linear_factor(const TwoModeState &s, double theta, double phi);

/// <x|y>, conjugating x. Throws std::invalid_argument on cutoff mismatch.
template <int M>
Complex inner_product(const FockState<M> &x, const FockState<M> &y);

/// |<x|y>|^2 / (|x|^2 |y|^2); insensitive to global phase and norm. Cutoffs
/// may differ.
double fidelity(const TwoModeState &x, const TwoModeState &y);

/// k if every populated ket has n_a + n_b = k, otherwise nothing. Amplitudes
/// with |amp|^2 <= rel_tol * norm2 count as unpopulated. Throws
/// std::invalid_argument on the zero state.
std::optional<int> photon_number_eigenvalue(const TwoModeState &s, double rel_tol = 1e-24);

// ---------------------------------------------------------------------------
// Beam splitters.

/// exp(kappa (m_i^dagger m_j - m_i m_j^dagger)) on the chosen pair of modes.
/// Under this convention a photon in m_i maps to cos(kappa)|1_i> - sin(kappa)|1_j>.
///
/// Evaluated through the normally ordered (disentangled) factorization
/// exp(-K m_i m_j^dagger) cos(kappa)^{n_i - n_j} exp(K m_i^dagger m_j) with
/// K = tan(kappa), after peeling off exact quarter turns so that
/// |kappa| <= pi/4. Every Taylor series terminates on a finite-photon state.
template <int M>
FockState<M> beam_splitter(const FockState<M> &s, Mode i, Mode j, double kappa);

/// The pair of identical beam splitters mixing a with c and b with d at the
/// same angle kappa, via the disentangled form.
FourModeState beam_splitter_pair_exact(const FourModeState &s, double kappa);

/// Independent route for the same operator: dense matrix exponential of the
/// generator on every fixed-photon-number sector.
FourModeState beam_splitter_pair_oracle(const FourModeState &s, double kappa);

// ---------------------------------------------------------------------------
// Joint ab/cd states and measurements on the ancilla modes.

/// Tensor product |ab> (x) |cd>. The four-mode cutoff is the sum of the
/// populated maxima unless a larger cutoff is requested.
FourModeState embed(const TwoModeState &ab, const TwoModeState &cd, int cutoff = -1);

/// Unnormalized ab state conditioned on (n_c, n_d) photons in the ancillas.
TwoModeState project_cd(const FourModeState &s, int n_c, int n_d);

struct Projection {
  TwoModeState state;
  double probability;
};

/// Conditioning on no photons in c and d; probability is the norm^2 of the
/// kept part.
Projection project_vacuum_cd(const FourModeState &s);

class TwoModeDensity;

/// Partial trace over modes c and d.
TwoModeDensity trace_out_cd(const FourModeState &s);

}  // namespace noonlab

#include "noonlab/density.hpp"
