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

#include "noonlab/fock.hpp"

#include <unsupported/Eigen/MatrixFunctions>

#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <string>

namespace noonlab {

namespace {

// Appends every composition of `remaining` into parts [pos, M) in descending
// lexicographic order.
template <int M>
void enumerate_compositions(std::array<int, M> &ket, int pos, int remaining,
                            std::vector<std::array<int, M>> &out) {
  if (pos == M - 1) {
    ket[pos] = remaining;
    out.push_back(ket);
    return;
  }
  for (int n = remaining; n >= 0; --n) {
    ket[pos] = n;
    enumerate_compositions<M>(ket, pos + 1, remaining - n, out);
  }
}

template <int M>
std::size_t grid_offset(const std::array<int, M> &k, int cutoff) {
  std::size_t off = 0;
  for (int m = 0; m < M; ++m) off = off * static_cast<std::size_t>(cutoff + 1) + static_cast<std::size_t>(k[m]);
  return off;
}

constexpr int idx(Mode m) { return static_cast<int>(m); }

template <int M>
int checked_idx(Mode m) {
  const int i = idx(m);
  if (i < 0 || i >= M) throw std::invalid_argument("mode not present in a " + std::to_string(M) + "-mode state");
  return i;
}

}  // namespace

// ---------------------------------------------------------------------------
// FockBasis

template <int M>
FockBasis<M>::FockBasis(int cutoff) : cutoff_(cutoff) {
  if (cutoff < 0) throw std::invalid_argument("cutoff must be non-negative");
  Ket scratch{};
  for (int t = 0; t <= cutoff; ++t) enumerate_compositions<M>(scratch, 0, t, kets_);
  std::size_t grid = 1;
  for (int m = 0; m < M; ++m) grid *= static_cast<std::size_t>(cutoff + 1);
  lookup_.assign(grid, -1);
  for (std::size_t i = 0; i < kets_.size(); ++i) lookup_[grid_offset<M>(kets_[i], cutoff)] = static_cast<int>(i);
}

template <int M>
std::shared_ptr<const FockBasis<M>> FockBasis<M>::get(int cutoff) {
  static std::mutex mu;
  static std::map<int, std::shared_ptr<const FockBasis<M>>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(cutoff);
  if (it != cache.end()) return it->second;
  auto basis = std::make_shared<const FockBasis<M>>(cutoff);
  cache.emplace(cutoff, basis);
  return basis;
}

template <int M>
std::optional<std::size_t> FockBasis<M>::index(const Ket &k) const {
  int t = 0;
  for (int n : k) {
    if (n < 0) return std::nullopt;
    t += n;
  }
  if (t > cutoff_) return std::nullopt;
  return static_cast<std::size_t>(lookup_[grid_offset<M>(k, cutoff_)]);
}

template <int M>
std::pair<std::size_t, std::size_t> FockBasis<M>::sector(int total) const {
  if (total < 0 || total > cutoff_) return {size(), 0};
  // Number of compositions of t into M parts is C(t+M-1, M-1).
  auto count = [](int t) {
    std::size_t c = 1;
    for (int i = 1; i < M; ++i) c = c * static_cast<std::size_t>(t + i) / static_cast<std::size_t>(i);
    return c;
  };
  std::size_t first = 0;
  for (int t = 0; t < total; ++t) first += count(t);
  return {first, count(total)};
}

// ---------------------------------------------------------------------------
// FockState

template <int M>
FockState<M>::FockState(int cutoff)
    : basis_(FockBasis<M>::get(cutoff)), amps_(Eigen::VectorXcd::Zero(static_cast<Eigen::Index>(basis_->size()))) {}

template <int M>
Complex FockState<M>::amp(const Ket &k) const {
  auto i = basis_->index(k);
  return i ? amps_[static_cast<Eigen::Index>(*i)] : Complex{};
}

template <int M>
Complex &FockState<M>::at(const Ket &k) {
  auto i = basis_->index(k);
  if (!i) throw CutoffOverflow("ket lies outside the cutoff " + std::to_string(cutoff()));
  return amps_[static_cast<Eigen::Index>(*i)];
}

template <int M>
int FockState<M>::max_populated_total() const {
  for (Eigen::Index i = amps_.size() - 1; i >= 0; --i) {
    if (amps_[i] != Complex{}) return FockBasis<M>::total(basis_->ket(static_cast<std::size_t>(i)));
  }
  return -1;
}

template <int M>
FockState<M> &FockState<M>::operator+=(const FockState &o) {
  if (o.cutoff() != cutoff()) throw std::invalid_argument("cutoff mismatch in state addition");
  amps_ += o.amps_;
  return *this;
}

TwoModeState vacuum(int cutoff) { return fock_ket(cutoff, 0, 0); }

TwoModeState fock_ket(int cutoff, int n_a, int n_b) {
  TwoModeState s(cutoff);
  s.at({n_a, n_b}) = 1.0;
  return s;
}

template <int M>
FockState<M> with_cutoff(const FockState<M> &s, int cutoff) {
  if (s.max_populated_total() > cutoff) throw CutoffOverflow("populated ket exceeds the requested cutoff");
  FockState<M> out(cutoff);
  const auto &kets = s.basis().kets();
  for (std::size_t i = 0; i < kets.size(); ++i) {
    if (FockBasis<M>::total(kets[i]) <= cutoff) out.at(kets[i]) = s.amplitudes()[static_cast<Eigen::Index>(i)];
  }
  return out;
}

// ---------------------------------------------------------------------------
// Ladder algebra

template <int M>
FockState<M> apply_creation(const FockState<M> &s, Mode mode) {
  const int m = checked_idx<M>(mode);
  FockState<M> out(s.cutoff());
  const auto &kets = s.basis().kets();
  for (std::size_t i = 0; i < kets.size(); ++i) {
    const Complex a = s.amplitudes()[static_cast<Eigen::Index>(i)];
    if (a == Complex{}) continue;
    auto k = kets[i];
    if (FockBasis<M>::total(k) == s.cutoff()) {
      throw CutoffOverflow("creation operator would exceed cutoff " + std::to_string(s.cutoff()));
    }
    k[m] += 1;
    out.at(k) += a * std::sqrt(static_cast<double>(k[m]));
  }
  return out;
}

template <int M>
FockState<M> apply_annihilation(const FockState<M> &s, Mode mode) {
  const int m = checked_idx<M>(mode);
  FockState<M> out(s.cutoff());
  const auto &kets = s.basis().kets();
  for (std::size_t i = 0; i < kets.size(); ++i) {
    auto k = kets[i];
    if (k[m] == 0) continue;
    const Complex a = s.amplitudes()[static_cast<Eigen::Index>(i)];
    const double w = std::sqrt(static_cast<double>(k[m]));
    k[m] -= 1;
    out.at(k) += a * w;
  }
  return out;
}

template <int M>
FockState<M> apply_phase_shift(const FockState<M> &s, Mode mode, double phi) {
  const int m = checked_idx<M>(mode);
  FockState<M> out = s;
  const auto &kets = s.basis().kets();
  for (std::size_t i = 0; i < kets.size(); ++i) {
    out.amplitudes()[static_cast<Eigen::Index>(i)] *= std::polar(1.0, phi * kets[i][m]);
  }
  return out;
}

TwoModeState apply_linear_factor(const TwoModeState &s, double theta, double phi) {
  TwoModeState out = Complex(std::cos(theta)) * apply_creation(s, Mode::a);
  out += -std::polar(std::sin(theta), phi) * apply_creation(s, Mode::b);
  return out;
}

template <int M>
Complex inner_product(const FockState<M> &x, const FockState<M> &y) {
  if (x.cutoff() != y.cutoff()) throw std::invalid_argument("cutoff mismatch in inner product");
  return x.amplitudes().dot(y.amplitudes());  // Eigen conjugates the left operand
}

double fidelity(const TwoModeState &x, const TwoModeState &y) {
  const int c = std::max(x.cutoff(), y.cutoff());
  const TwoModeState xx = x.cutoff() == c ? x : with_cutoff(x, c);
  const TwoModeState yy = y.cutoff() == c ? y : with_cutoff(y, c);
  const double nx = xx.norm2();
  const double ny = yy.norm2();
  if (nx == 0.0 || ny == 0.0) return 0.0;
  return std::norm(inner_product(xx, yy)) / (nx * ny);
}

std::optional<int> photon_number_eigenvalue(const TwoModeState &s, double rel_tol) {
  const double n2 = s.norm2();
  if (n2 == 0.0) throw std::invalid_argument("photon number eigenvalue of the zero state");
  std::optional<int> total;
  const auto &kets = s.basis().kets();
  for (std::size_t i = 0; i < kets.size(); ++i) {
    if (std::norm(s.amplitudes()[static_cast<Eigen::Index>(i)]) <= rel_tol * n2) continue;
    const int t = FockBasis<2>::total(kets[i]);
    if (total && *total != t) return std::nullopt;
    total = t;
  }
  return total;
}

// ---------------------------------------------------------------------------
// Beam splitters

namespace {

// m_to^dagger m_from; conserves total photon number so never overflows.
template <int M>
FockState<M> hop(const FockState<M> &s, int to, int from) {
  FockState<M> out(s.cutoff());
  const auto &kets = s.basis().kets();
  for (std::size_t i = 0; i < kets.size(); ++i) {
    auto k = kets[i];
    if (k[from] == 0) continue;
    const Complex a = s.amplitudes()[static_cast<Eigen::Index>(i)];
    if (a == Complex{}) continue;
    const double w = std::sqrt(static_cast<double>(k[from]) * static_cast<double>(k[to] + 1));
    k[from] -= 1;
    k[to] += 1;
    out.at(k) += a * w;
  }
  return out;
}

// exp(x m_to^dagger m_from) by its Taylor series. The n-th term moves n
// photons out of `from`, so the series ends after at most `cutoff` terms.
template <int M>
FockState<M> transfer_exp(const FockState<M> &s, int to, int from, double x) {
  if (x == 0.0) return s;
  FockState<M> result = s;
  FockState<M> term = s;
  for (int n = 1; n <= s.cutoff(); ++n) {
    term = hop(term, to, from);
    term *= x / n;
    if (term.is_zero()) break;
    result += term;
  }
  return result;
}

// Diagonal operator base^{sum_plus n - sum_minus n}.
template <int M>
void scale_by_power(FockState<M> &s, const std::vector<int> &plus, const std::vector<int> &minus, double base) {
  const auto &kets = s.basis().kets();
  for (std::size_t i = 0; i < kets.size(); ++i) {
    int e = 0;
    for (int m : plus) e += kets[i][m];
    for (int m : minus) e -= kets[i][m];
    s.amplitudes()[static_cast<Eigen::Index>(i)] *= std::pow(base, e);
  }
}

// U(pi/2) on (i, j): |n_i, n_j> -> (-1)^{n_i} |n_j, n_i>.
template <int M>
FockState<M> quarter_turn(const FockState<M> &s, int i, int j) {
  FockState<M> out(s.cutoff());
  const auto &kets = s.basis().kets();
  for (std::size_t p = 0; p < kets.size(); ++p) {
    auto k = kets[p];
    const double sign = (k[i] % 2 == 0) ? 1.0 : -1.0;
    std::swap(k[i], k[j]);
    out.at(k) = sign * s.amplitudes()[static_cast<Eigen::Index>(p)];
  }
  return out;
}

struct ReducedAngle {
  double residual;  // in [-pi/4, pi/4]
  int quarter_turns;  // in [0, 4)
};

ReducedAngle reduce_angle(double kappa) {
  const double quarter = std::numbers::pi / 2;
  const double m = std::nearbyint(kappa / quarter);
  int turns = static_cast<int>(std::fmod(m, 4.0));
  if (turns < 0) turns += 4;
  return {kappa - m * quarter, turns};
}

}  // namespace

template <int M>
FockState<M> beam_splitter(const FockState<M> &s, Mode i, Mode j, double kappa) {
  const int mi = checked_idx<M>(i);
  const int mj = checked_idx<M>(j);
  if (mi == mj) throw std::invalid_argument("beam splitter needs two distinct modes");
  const auto [residual, turns] = reduce_angle(kappa);
  FockState<M> out = s;
  for (int t = 0; t < turns; ++t) out = quarter_turn(out, mi, mj);
  if (residual == 0.0) return out;
  const double K = std::tan(residual);
  out = transfer_exp(out, mi, mj, K);
  scale_by_power(out, {mi}, {mj}, std::cos(residual));
  return transfer_exp(out, mj, mi, -K);
}

FourModeState beam_splitter_pair_exact(const FourModeState &s, double kappa) {
  constexpr int a = 0, b = 1, c = 2, d = 3;
  const auto [residual, turns] = reduce_angle(kappa);
  FourModeState out = s;
  for (int t = 0; t < turns; ++t) out = quarter_turn(quarter_turn(out, a, c), b, d);
  if (residual == 0.0) return out;
  // U = e^{-K a c^dag} e^{-K b d^dag} cos^{n_ab - n_cd} e^{K a^dag c} e^{K b^dag d}, applied right to left.
  const double K = std::tan(residual);
  out = transfer_exp(out, b, d, K);
  out = transfer_exp(out, a, c, K);
  scale_by_power(out, {a, b}, {c, d}, std::cos(residual));
  out = transfer_exp(out, d, b, -K);
  return transfer_exp(out, c, a, -K);
}

FourModeState beam_splitter_pair_oracle(const FourModeState &s, double kappa) {
  FourModeState out(s.cutoff());
  const auto &basis = s.basis();
  for (int total = 0; total <= s.cutoff(); ++total) {
    const auto [first, count] = basis.sector(total);
    const auto n = static_cast<Eigen::Index>(count);
    // Generator kappa (a^dag c - a c^dag + b^dag d - b d^dag) restricted to the sector.
    Eigen::MatrixXd gen = Eigen::MatrixXd::Zero(n, n);
    auto add_hop = [&](int to, int from, double coef) {
      for (Eigen::Index col = 0; col < n; ++col) {
        auto k = basis.ket(first + static_cast<std::size_t>(col));
        if (k[from] == 0) continue;
        const double w = std::sqrt(static_cast<double>(k[from]) * static_cast<double>(k[to] + 1));
        k[from] -= 1;
        k[to] += 1;
        const auto row = static_cast<Eigen::Index>(*basis.index(k) - first);
        gen(row, col) += coef * w;
      }
    };
    add_hop(0, 2, kappa);
    add_hop(2, 0, -kappa);
    add_hop(1, 3, kappa);
    add_hop(3, 1, -kappa);
    const Eigen::MatrixXd u = gen.exp();
    const auto f = static_cast<Eigen::Index>(first);
    out.amplitudes().segment(f, n) = u.cast<Complex>() * s.amplitudes().segment(f, n);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Ancilla measurements

FourModeState embed(const TwoModeState &ab, const TwoModeState &cd, int cutoff) {
  const int needed = std::max(ab.max_populated_total(), 0) + std::max(cd.max_populated_total(), 0);
  const int c = std::max(cutoff, needed);
  FourModeState out(c);
  const auto &kab = ab.basis().kets();
  const auto &kcd = cd.basis().kets();
  for (std::size_t i = 0; i < kab.size(); ++i) {
    const Complex x = ab.amplitudes()[static_cast<Eigen::Index>(i)];
    if (x == Complex{}) continue;
    for (std::size_t j = 0; j < kcd.size(); ++j) {
      const Complex y = cd.amplitudes()[static_cast<Eigen::Index>(j)];
      if (y == Complex{}) continue;
      out.at({kab[i][0], kab[i][1], kcd[j][0], kcd[j][1]}) = x * y;
    }
  }
  return out;
}

TwoModeState project_cd(const FourModeState &s, int n_c, int n_d) {
  TwoModeState out(s.cutoff());
  const auto &kets = s.basis().kets();
  for (std::size_t i = 0; i < kets.size(); ++i) {
    const auto &k = kets[i];
    if (k[2] == n_c && k[3] == n_d) out.at({k[0], k[1]}) = s.amplitudes()[static_cast<Eigen::Index>(i)];
  }
  return out;
}

Projection project_vacuum_cd(const FourModeState &s) {
  TwoModeState kept = project_cd(s, 0, 0);
  const double p = kept.norm2();
  return {std::move(kept), p};
}

TwoModeDensity trace_out_cd(const FourModeState &s) {
  TwoModeDensity rho(s.cutoff());
  for (int nc = 0; nc <= s.cutoff(); ++nc) {
    for (int nd = 0; nc + nd <= s.cutoff(); ++nd) {
      const TwoModeState branch = project_cd(s, nc, nd);
      if (branch.is_zero()) continue;
      rho.matrix() += branch.amplitudes() * branch.amplitudes().adjoint();
    }
  }
  return rho;
}

// ---------------------------------------------------------------------------

template class FockBasis<2>;
template class FockBasis<4>;
template class FockState<2>;
template class FockState<4>;

#define NOONLAB_INSTANTIATE(M)                                                          \
  template FockState<M> with_cutoff(const FockState<M> &, int);                         \
  template FockState<M> apply_creation(const FockState<M> &, Mode);                     \
  template FockState<M> apply_annihilation(const FockState<M> &, Mode);                 \
  template FockState<M> apply_phase_shift(const FockState<M> &, Mode, double);          \
  template Complex inner_product(const FockState<M> &, const FockState<M> &);           \
  template FockState<M> beam_splitter(const FockState<M> &, Mode, Mode, double);

NOONLAB_INSTANTIATE(2)
NOONLAB_INSTANTIATE(4)

#undef NOONLAB_INSTANTIATE

}  // namespace noonlab
