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

#include "gtest/gtest.h"

#include "oracles.hpp"

#include <numbers>
#include <unsupported/Eigen/MatrixFunctions>

using namespace noonlab;
using noonlab::testing::DenseSpace;

namespace {

constexpr double kPi = std::numbers::pi;

FourModeState four_ket(int cutoff, int a, int b, int c, int d) {
  FourModeState s(cutoff);
  s.at({a, b, c, d}) = 1.0;
  return s;
}

std::vector<double> photon_distribution(const FourModeState &s) {
  std::vector<double> dist(static_cast<std::size_t>(s.cutoff()) + 1, 0.0);
  const auto &kets = s.basis().kets();
  for (std::size_t i = 0; i < kets.size(); ++i) {
    dist[static_cast<std::size_t>(FockBasis<4>::total(kets[i]))] += std::norm(s.amplitudes()[static_cast<Eigen::Index>(i)]);
  }
  return dist;
}

}  // namespace

TEST(fock_basis, ordering_and_sectors) {
  const auto &b = *FockBasis<2>::get(2);
  ASSERT_EQ(b.size(), 6u);
  EXPECT_EQ(b.ket(0), (std::array<int, 2>{0, 0}));
  EXPECT_EQ(b.ket(1), (std::array<int, 2>{1, 0}));
  EXPECT_EQ(b.ket(2), (std::array<int, 2>{0, 1}));
  EXPECT_EQ(b.ket(5), (std::array<int, 2>{0, 2}));
  EXPECT_EQ(b.sector(2), (std::pair<std::size_t, std::size_t>{3, 3}));
  EXPECT_FALSE(b.index({2, 1}).has_value());
  EXPECT_FALSE(b.index({-1, 0}).has_value());

  // C(8+4, 4) kets with at most 8 photons in four modes.
  EXPECT_EQ(FockBasis<4>::get(8)->size(), 495u);
  for (std::size_t i = 0; i < FockBasis<4>::get(5)->size(); ++i) {
    EXPECT_EQ(*FockBasis<4>::get(5)->index(FockBasis<4>::get(5)->ket(i)), i);
  }
}

TEST(fock, vacuum) {
  const auto v = vacuum(4);
  EXPECT_EQ(v.amp({0, 0}), Complex(1.0));
  EXPECT_EQ(v.amplitudes().cwiseAbs().sum(), 1.0);
  EXPECT_EQ(vacuum(10).norm2(), 1.0);
  EXPECT_EQ(photon_number_eigenvalue(vacuum(3)), 0);
}

TEST(fock, creation_ladder) {
  const auto one = apply_creation(vacuum(4), Mode::a);
  EXPECT_EQ(one.amp({1, 0}), Complex(1.0));
  const auto two = apply_creation(one, Mode::a);
  EXPECT_NEAR(std::abs(two.amp({2, 0}) - std::sqrt(2.0)), 0.0, 1e-15);

  // sqrt(1) sqrt(2) for each mode: 2 |2,2>.
  auto s = apply_creation(apply_creation(vacuum(4), Mode::a), Mode::a);
  s = apply_creation(apply_creation(s, Mode::b), Mode::b);
  EXPECT_NEAR(std::abs(s.amp({2, 2}) - 2.0), 0.0, 1e-14);
  EXPECT_NEAR(s.norm2(), 4.0, 1e-14);
}

TEST(fock, creation_overflow) {
  EXPECT_THROW(apply_creation(fock_ket(2, 1, 1), Mode::a), CutoffOverflow);
  EXPECT_THROW(apply_creation(vacuum(0), Mode::b), CutoffOverflow);
  EXPECT_NO_THROW(apply_creation(fock_ket(2, 1, 0), Mode::b));
  EXPECT_THROW(apply_creation(vacuum(2), Mode::c), std::invalid_argument);
}

TEST(fock, ladder_matches_dense_matrices) {
  std::mt19937_64 rng(11);
  const DenseSpace space{2, 6};
  for (int trial = 0; trial < 5; ++trial) {
    const auto x = with_cutoff(noonlab::testing::random_state<2>(rng, 5), 6);
    for (Mode m : {Mode::a, Mode::b}) {
      const int mi = static_cast<int>(m);
      const Eigen::VectorXcd want_up = space.creation(mi) * space.from_state(x);
      EXPECT_LT(noonlab::testing::max_abs_diff(space.from_state(apply_creation(x, m)), want_up), 1e-13);
      const Eigen::VectorXcd want_down = space.annihilation(mi) * space.from_state(x);
      EXPECT_LT(noonlab::testing::max_abs_diff(space.from_state(apply_annihilation(x, m)), want_down), 1e-13);
    }
  }
}

TEST(fock, ladder_adjoint_property) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 20; ++trial) {
    const auto x = with_cutoff(noonlab::testing::random_state<2>(rng, 5), 6);
    const auto y = noonlab::testing::random_state<2>(rng, 6);
    for (Mode m : {Mode::a, Mode::b}) {
      const Complex lhs = inner_product(apply_creation(x, m), y);
      const Complex rhs = inner_product(x, apply_annihilation(y, m));
      EXPECT_LT(std::abs(lhs - rhs), 1e-12);
    }
  }
}

TEST(fock, linear_factor) {
  for (double phi : {0.0, 0.3, -2.0}) {
    const auto s = apply_linear_factor(vacuum(1), 0.0, phi);
    EXPECT_NEAR(std::abs(s.amp({1, 0}) - 1.0), 0.0, 1e-15);
    EXPECT_EQ(s.amp({0, 1}), Complex(0.0));
  }
  const auto down = apply_linear_factor(vacuum(1), kPi / 2, 0.0);
  EXPECT_NEAR(std::abs(down.amp({0, 1}) + 1.0), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(down.amp({1, 0})), 0.0, 1e-15);

  const auto mid = apply_linear_factor(vacuum(1), kPi / 4, 0.0);
  EXPECT_NEAR(std::abs(mid.amp({1, 0}) - 1.0 / std::sqrt(2.0)), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(mid.amp({0, 1}) + 1.0 / std::sqrt(2.0)), 0.0, 1e-15);
  EXPECT_NEAR(inner_product(mid, mid).real(), 1.0, 1e-15);
}

TEST(fock, inner_product) {
  EXPECT_EQ(inner_product(vacuum(2), vacuum(2)), Complex(1.0));
  EXPECT_EQ(inner_product(fock_ket(2, 1, 0), fock_ket(2, 0, 1)), Complex(0.0));
  EXPECT_THROW(inner_product(vacuum(2), vacuum(3)), std::invalid_argument);

  TwoModeState x(1);
  x.at({1, 0}) = Complex(0.0, 1.0);
  // Conjugation on the left operand.
  EXPECT_EQ(inner_product(x, fock_ket(1, 1, 0)), Complex(0.0, -1.0));
}

TEST(fock, photon_number_eigenvalue) {
  TwoModeState noon(2);
  noon.at({2, 0}) = 1.0 / std::sqrt(2.0);
  noon.at({0, 2}) = 1.0 / std::sqrt(2.0);
  EXPECT_EQ(photon_number_eigenvalue(noon), 2);

  TwoModeState mixed(2);
  mixed.at({1, 0}) = 1.0;
  mixed.at({2, 0}) = 1.0;
  EXPECT_FALSE(photon_number_eigenvalue(mixed).has_value());

  EXPECT_THROW(photon_number_eigenvalue(TwoModeState(3)), std::invalid_argument);
}

TEST(fock, fidelity_ignores_phase_and_cutoff) {
  auto x = fock_ket(2, 1, 1);
  auto y = fock_ket(4, 1, 1);
  y *= Complex(0.0, 3.0);
  EXPECT_NEAR(fidelity(x, y), 1.0, 1e-15);
  EXPECT_NEAR(fidelity(x, fock_ket(3, 2, 0)), 0.0, 1e-15);
}

TEST(beam_splitter_pair, zero_angle_is_identity) {
  std::mt19937_64 rng(3);
  const auto s = noonlab::testing::random_state<4>(rng, 5);
  EXPECT_EQ(noonlab::testing::max_abs_diff(beam_splitter_pair_exact(s, 0.0).amplitudes(), s.amplitudes()), 0.0);
  EXPECT_LT(noonlab::testing::max_abs_diff(beam_splitter_pair_oracle(s, 0.0).amplitudes(), s.amplitudes()), 1e-15);
}

TEST(beam_splitter_pair, single_photon_block) {
  for (double kappa : {0.2, 0.9, 1.4, 2.5, -0.6}) {
    const auto out = beam_splitter_pair_exact(four_ket(1, 1, 0, 0, 0), kappa);
    EXPECT_NEAR(std::abs(out.amp({1, 0, 0, 0}) - std::cos(kappa)), 0.0, 1e-15);
    EXPECT_NEAR(std::abs(out.amp({0, 0, 1, 0}) + std::sin(kappa)), 0.0, 1e-15);
    const auto back = beam_splitter_pair_exact(four_ket(1, 0, 0, 1, 0), kappa);
    EXPECT_NEAR(std::abs(back.amp({1, 0, 0, 0}) - std::sin(kappa)), 0.0, 1e-15);
    EXPECT_NEAR(std::abs(back.amp({0, 0, 1, 0}) - std::cos(kappa)), 0.0, 1e-15);
    const auto bd = beam_splitter_pair_exact(four_ket(1, 0, 1, 0, 0), kappa);
    EXPECT_NEAR(std::abs(bd.amp({0, 1, 0, 0}) - std::cos(kappa)), 0.0, 1e-15);
    EXPECT_NEAR(std::abs(bd.amp({0, 0, 0, 1}) + std::sin(kappa)), 0.0, 1e-15);
  }
}

TEST(beam_splitter_pair, quarter_turn_swaps_a_and_c) {
  std::mt19937_64 rng(5);
  const auto s = noonlab::testing::random_state<4>(rng, 4);
  const auto exact = beam_splitter_pair_exact(s, kPi / 2);
  const auto oracle = beam_splitter_pair_oracle(s, kPi / 2);
  EXPECT_LT(noonlab::testing::max_abs_diff(exact.amplitudes(), oracle.amplitudes()), 1e-12);
  const auto &kets = s.basis().kets();
  for (const auto &k : kets) {
    EXPECT_NEAR(std::abs(exact.amp({k[2], k[3], k[0], k[1]})), std::abs(s.amp(k)), 1e-12);
  }
}

TEST(beam_splitter_pair, exact_matches_oracle) {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 20; ++trial) {
    const auto s = noonlab::testing::random_state<4>(rng, 8);
    for (double kappa : {0.1, 0.7, 1.3, -0.4, 1.5707, 2.2, 3.0, 7.0}) {
      const double dev = noonlab::testing::max_abs_diff(beam_splitter_pair_exact(s, kappa).amplitudes(),
                                                       beam_splitter_pair_oracle(s, kappa).amplitudes());
      EXPECT_LT(dev, 1e-9) << "kappa=" << kappa;
    }
  }
}

TEST(beam_splitter_pair, oracle_matches_dense_tensor_exponential) {
  // Third route: full Kronecker-product generator with each mode cut at 3;
  // states with at most 3 photons never reach the truncation edge.
  const DenseSpace space{4, 3};
  const double kappa = 0.83;
  const Eigen::MatrixXcd gen = kappa * (space.creation(0) * space.annihilation(2) - space.annihilation(0) * space.creation(2) +
                                        space.creation(1) * space.annihilation(3) - space.annihilation(1) * space.creation(3));
  const Eigen::MatrixXcd u = gen.exp();
  std::mt19937_64 rng(9);
  const auto s = noonlab::testing::random_state<4>(rng, 3);
  const Eigen::VectorXcd want = u * space.from_state(s);
  EXPECT_LT(noonlab::testing::max_abs_diff(space.from_state(beam_splitter_pair_exact(s, kappa)), want), 1e-12);
}

TEST(beam_splitter_pair, unitarity_and_photon_number_conservation) {
  std::mt19937_64 rng(77);
  for (int trial = 0; trial < 10; ++trial) {
    auto s = noonlab::testing::random_state<4>(rng, 7);
    s *= 1.7;
    const auto before = photon_distribution(s);
    for (double kappa : {0.1, 0.7, 1.3, 1.5707963}) {
      const auto out = beam_splitter_pair_exact(s, kappa);
      EXPECT_NEAR(std::sqrt(out.norm2()), std::sqrt(s.norm2()), 1e-12);
      const auto after = photon_distribution(out);
      for (std::size_t t = 0; t < before.size(); ++t) EXPECT_NEAR(after[t], before[t], 1e-12);
    }
  }
}

TEST(beam_splitter, two_mode_matches_creation_transform) {
  for (double kappa : {0.3, 1.1, 2.0}) {
    for (int ni = 0; ni <= 3; ++ni) {
      for (int nj = 0; nj + ni <= 3; ++nj) {
        const auto out = beam_splitter(fock_ket(3, ni, nj), Mode::a, Mode::b, kappa);
        for (const auto &[ket, amp] : noonlab::testing::rotated_pair_ket(ni, nj, kappa)) {
          EXPECT_NEAR(std::abs(out.amp({ket.first, ket.second}) - amp), 0.0, 1e-12);
        }
      }
    }
  }
}

TEST(projection, vacuum_cd) {
  auto [s1, p1] = project_vacuum_cd(four_ket(1, 1, 0, 0, 0));
  EXPECT_EQ(s1.amp({1, 0}), Complex(1.0));
  EXPECT_EQ(p1, 1.0);

  auto [s2, p2] = project_vacuum_cd(four_ket(1, 0, 0, 1, 0));
  EXPECT_TRUE(s2.is_zero());
  EXPECT_EQ(p2, 0.0);

  const Complex alpha(0.6, 0.0), beta(0.0, 0.8);
  FourModeState mix(1);
  mix.at({1, 0, 0, 0}) = alpha;
  mix.at({0, 0, 1, 0}) = beta;
  auto [s3, p3] = project_vacuum_cd(mix);
  EXPECT_EQ(s3.amp({1, 0}), alpha);
  EXPECT_NEAR(p3, std::norm(alpha), 1e-15);
}

TEST(projection, outcome_completeness) {
  std::mt19937_64 rng(123);
  for (int trial = 0; trial < 5; ++trial) {
    const auto s = beam_splitter_pair_exact(noonlab::testing::random_state<4>(rng, 6), 0.7);
    double total = 0.0;
    for (int nc = 0; nc <= s.cutoff(); ++nc) {
      for (int nd = 0; nc + nd <= s.cutoff(); ++nd) total += project_cd(s, nc, nd).norm2();
    }
    EXPECT_NEAR(total, s.norm2(), 1e-12);
  }
}

TEST(partial_trace, examples) {
  const auto rho1 = trace_out_cd(four_ket(1, 1, 0, 0, 0));
  EXPECT_EQ(rho1.entry(1, 0, 1, 0), Complex(1.0));
  EXPECT_NEAR(rho1.trace(), 1.0, 1e-15);

  FourModeState s(1);
  s.at({1, 0, 0, 0}) = 1.0 / std::sqrt(2.0);
  s.at({0, 0, 1, 0}) = 1.0 / std::sqrt(2.0);
  const auto rho = trace_out_cd(s);
  EXPECT_NEAR(rho.entry(1, 0, 1, 0).real(), 0.5, 1e-15);
  EXPECT_NEAR(rho.entry(0, 0, 0, 0).real(), 0.5, 1e-15);
  EXPECT_NEAR(std::abs(rho.entry(1, 0, 0, 0)), 0.0, 1e-15);
}

TEST(partial_trace, trace_hermiticity_positivity) {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 5; ++trial) {
    auto s = noonlab::testing::random_state<4>(rng, 5);
    s *= 0.8;
    const auto rho = trace_out_cd(s);
    EXPECT_NEAR(rho.trace(), s.norm2(), 1e-12);
    EXPECT_TRUE(rho.is_hermitian(1e-12));
    EXPECT_GT(rho.min_eigenvalue(), -1e-9);
  }
}

TEST(embed, tensor_product) {
  const auto joint = embed(fock_ket(2, 1, 1), fock_ket(1, 0, 1));
  EXPECT_EQ(joint.cutoff(), 3);
  EXPECT_EQ(joint.amp({1, 1, 0, 1}), Complex(1.0));
  EXPECT_EQ(joint.norm2(), 1.0);
}
