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

#include "noonlab/factorize.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

namespace noonlab {

namespace {

// Coefficients below this fraction of the largest one are treated as zero
// when deciding polynomial degree and zero roots.
constexpr double kZeroCoeffRel = 1e-13;

double log_factorial(int n) { return std::lgamma(static_cast<double>(n) + 1.0); }

Complex horner(std::span<const Complex> c, Complex z) {
  Complex acc = 0.0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * z + *it;
  return acc;
}

Complex horner_derivative(std::span<const Complex> c, Complex z) {
  Complex acc = 0.0;
  for (std::size_t k = c.size() - 1; k >= 1; --k) acc = acc * z + static_cast<double>(k) * c[k];
  return acc;
}

double l1(Complex z) { return std::abs(z.real()) + std::abs(z.imag()); }

// Parlett-Reinsch balancing with radix-2 scaling; preserves eigenvalues.
void balance(Eigen::MatrixXcd &a) {
  const Eigen::Index n = a.rows();
  constexpr double radix = 2.0;
  bool done = false;
  while (!done) {
    done = true;
    for (Eigen::Index i = 0; i < n; ++i) {
      double r = 0.0;
      double c = 0.0;
      for (Eigen::Index j = 0; j < n; ++j) {
        if (j == i) continue;
        c += l1(a(j, i));
        r += l1(a(i, j));
      }
      if (c == 0.0 || r == 0.0) continue;
      double g = r / radix;
      double f = 1.0;
      const double s = c + r;
      while (c < g) {
        f *= radix;
        c *= radix * radix;
      }
      g = r * radix;
      while (c > g) {
        f /= radix;
        c /= radix * radix;
      }
      if ((c + r) / f < 0.95 * s) {
        done = false;
        a.row(i) /= f;
        a.col(i) *= f;
      }
    }
  }
}

}  // namespace

TargetSpec::TargetSpec(int photons, std::vector<Complex> coeffs) : photons_(photons), coeffs_(std::move(coeffs)) {
  if (photons_ < 1) throw std::invalid_argument("photon number must be at least 1");
  if (coeffs_.size() != static_cast<std::size_t>(photons_) + 1) {
    throw std::invalid_argument("expected " + std::to_string(photons_ + 1) + " coefficients, got " +
                                std::to_string(coeffs_.size()));
  }
  double n2 = 0.0;
  for (const auto &c : coeffs_) n2 += std::norm(c);
  if (!(n2 > 0.0) || !std::isfinite(n2)) throw std::invalid_argument("target coefficients are all zero");
  const double inv = 1.0 / std::sqrt(n2);
  for (auto &c : coeffs_) c *= inv;
}

TwoModeState TargetSpec::to_state(int cutoff) const {
  TwoModeState s(cutoff < 0 ? photons_ : cutoff);
  for (int k = 0; k <= photons_; ++k) s.at({k, photons_ - k}) = coeffs_[static_cast<std::size_t>(k)];
  return s;
}

TargetSpec noon_target(int photons) {
  std::vector<Complex> c(static_cast<std::size_t>(photons) + 1, 0.0);
  c.front() = 1.0;
  c.back() = 1.0;
  return TargetSpec(photons, std::move(c));
}

double wrap_phase(double phi) {
  constexpr double two_pi = 2 * std::numbers::pi;
  double w = std::fmod(phi + std::numbers::pi, two_pi);
  if (w < 0) w += two_pi;
  w -= std::numbers::pi;
  return w >= std::numbers::pi ? w - two_pi : w;
}

std::vector<Complex> monomial_coeffs(const TargetSpec &t) {
  const int n = t.photons();
  std::vector<Complex> d(static_cast<std::size_t>(n) + 1);
  for (int k = 0; k <= n; ++k) {
    const double scale = std::exp(-0.5 * (log_factorial(k) + log_factorial(n - k)));
    d[static_cast<std::size_t>(k)] = t.coeffs()[static_cast<std::size_t>(k)] * scale;
  }
  return d;
}

std::vector<Complex> polynomial_roots(std::span<const Complex> coeffs) {
  double biggest = 0.0;
  for (const auto &c : coeffs) biggest = std::max(biggest, std::abs(c));
  if (biggest == 0.0) throw std::invalid_argument("polynomial is identically zero");
  const double cut = kZeroCoeffRel * biggest;

  std::size_t hi = coeffs.size() - 1;
  while (std::abs(coeffs[hi]) <= cut) --hi;
  std::size_t lo = 0;
  while (std::abs(coeffs[lo]) <= cut) ++lo;

  std::vector<Complex> roots(lo, Complex{});
  const std::span<const Complex> reduced = coeffs.subspan(lo, hi - lo + 1);
  const auto degree = static_cast<Eigen::Index>(reduced.size() - 1);
  if (degree == 0) return roots;

  // Companion matrix of the monic polynomial: ones on the subdiagonal, last
  // column holds -a_0 .. -a_{n-1}.
  Eigen::MatrixXcd companion = Eigen::MatrixXcd::Zero(degree, degree);
  for (Eigen::Index i = 1; i < degree; ++i) companion(i, i - 1) = 1.0;
  const Complex lead = reduced.back();
  for (Eigen::Index i = 0; i < degree; ++i) companion(i, degree - 1) = -reduced[static_cast<std::size_t>(i)] / lead;
  balance(companion);

  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(companion, false);
  if (solver.info() != Eigen::Success) throw std::runtime_error("companion eigenvalue solver did not converge");

  for (Eigen::Index i = 0; i < degree; ++i) {
    Complex z = solver.eigenvalues()[i];
    const Complex p = horner(reduced, z);
    const Complex dp = horner_derivative(reduced, z);
    if (dp != Complex{}) {
      const Complex polished = z - p / dp;
      if (std::abs(horner(reduced, polished)) < std::abs(p)) z = polished;
    }
    roots.push_back(z);
  }
  return roots;
}

std::vector<FactorAngles> find_factor_angles(std::span<const Complex> d) {
  if (d.empty()) throw std::invalid_argument("empty coefficient vector");
  const auto roots = polynomial_roots(d);
  const std::size_t photons = d.size() - 1;
  std::vector<FactorAngles> out;
  out.reserve(photons);
  for (const auto &z : roots) {
    const double theta = std::clamp(std::atan(std::abs(z)), 0.0, std::numbers::pi / 2);
    const double phi = (z == Complex{}) ? 0.0 : wrap_phase(std::arg(z));
    out.push_back({theta, phi});
  }
  while (out.size() < photons) out.push_back({std::numbers::pi / 2, 0.0});
  return out;
}

TwoModeState factor_product(std::span<const FactorAngles> factors, int cutoff) {
  TwoModeState s = vacuum(cutoff < 0 ? static_cast<int>(factors.size()) : cutoff);
  for (const auto &f : factors) s = apply_linear_factor(s, f.theta, f.phi);
  return s;
}

double normalization(std::span<const FactorAngles> factors) {
  if (factors.empty()) throw std::invalid_argument("empty factor list");
  return factor_product(factors).norm2();
}

FactorSet factorize(const TargetSpec &t) {
  FactorSet f;
  const auto d = monomial_coeffs(t);
  f.factors = find_factor_angles(d);
  const TwoModeState raw = factor_product(f.factors);
  f.normalization = raw.norm2();
  const Complex overlap = inner_product(raw, t.to_state());
  f.global_phase = std::abs(overlap) > 0.0 ? overlap / std::abs(overlap) : Complex(1.0);
  return f;
}

TwoModeState reconstruct(const FactorSet &f) {
  TwoModeState raw = factor_product(f.factors);
  raw *= f.global_phase / std::sqrt(f.normalization);
  return raw;
}

std::vector<FactorAngles> noon_factor_angles(int photons) {
  if (photons < 1) throw std::invalid_argument("photon number must be at least 1");
  std::vector<FactorAngles> out;
  for (int k = 1; k <= photons; ++k) {
    out.push_back({std::numbers::pi / 4, wrap_phase((2.0 * k + 1.0) * std::numbers::pi / photons)});
  }
  return out;
}

std::vector<double> pair_factor_phases(const TargetSpec &t, double tol) {
  const int n = t.photons();
  if (n % 2 != 0) throw std::invalid_argument("two-photon steps need an even photon number");
  for (int k = 1; k <= n; k += 2) {
    if (std::abs(t.coeffs()[static_cast<std::size_t>(k)]) > tol) {
      throw std::invalid_argument("target populates |" + std::to_string(k) + "," + std::to_string(n - k) +
                                  ">, which two-photon steps cannot reach");
    }
  }
  const auto d = monomial_coeffs(t);
  std::vector<Complex> even;
  for (int k = 0; k <= n; k += 2) even.push_back(d[static_cast<std::size_t>(k)]);
  const auto roots = polynomial_roots(even);
  if (roots.size() != even.size() - 1) {
    throw std::invalid_argument("target has a pure-mode factor that a balanced two-photon step cannot realize");
  }
  std::vector<double> phases;
  for (const auto &u : roots) {
    if (std::abs(std::abs(u) - 1.0) > tol) {
      throw std::invalid_argument("target has an unbalanced two-photon factor; only |root| = 1 is realizable");
    }
    phases.push_back(wrap_phase(std::arg(u) / 2.0));
  }
  return phases;
}

}  // namespace noonlab
