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
#include "noonlab/cli.hpp"
#include "noonlab/litho.hpp"
#include "noonlab/yield.hpp"

#if __has_include(<CLI11.hpp>)
#include <CLI11.hpp>
#else
#include <CLI/CLI.hpp>
#endif

#include <array>
#include <cstdio>
#include <fstream>
#include <numbers>
#include <ostream>
#include <random>
#include <sstream>

namespace noonlab::cli {

namespace {

constexpr double kFidelityTol = 1e-9;
constexpr double kYieldRelTol = 1e-9;
constexpr double kOracleTol = 1e-9;
constexpr int kMaxFringePhotons = 8;
constexpr int kMaxSimulatedTableRow = 8;

std::string fmt17(double v) {
  std::array<char, 32> buf{};
  std::snprintf(buf.data(), buf.size(), "%.17g", v);
  return buf.data();
}

std::string fmt_opt(const std::optional<double> &v) { return v ? fmt17(*v) : std::string(); }

nlohmann::ordered_json target_json(const TargetSpec &t) {
  nlohmann::ordered_json c = nlohmann::ordered_json::array();
  for (const auto &z : t.coeffs()) c.push_back(complex_json(z));
  return c;
}

nlohmann::ordered_json factors_json(const std::vector<FactorAngles> &factors) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const auto &f : factors) arr.push_back({{"theta", f.theta}, {"phi", f.phi}});
  return arr;
}

// |prod_k (a^dag^2 - e^{2 i phi_k} b^dag^2) |0,0>|^2
double pair_normalization(const std::vector<double> &phases) {
  TwoModeState s = vacuum(2 * static_cast<int>(phases.size()));
  for (double phi : phases) {
    const TwoModeState aa = apply_creation(apply_creation(s, Mode::a), Mode::a);
    const TwoModeState bb = apply_creation(apply_creation(s, Mode::b), Mode::b);
    s = aa + (-std::polar(1.0, 2.0 * phi)) * bb;
  }
  return s.norm2();
}

bool relative_close(double a, double b, double rel) { return std::abs(a - b) <= rel * std::max(std::abs(a), std::abs(b)); }

}  // namespace

nlohmann::ordered_json complex_json(Complex z) { return nlohmann::ordered_json::array({z.real(), z.imag()}); }

nlohmann::ordered_json state_json(const TwoModeState &s, double drop_below) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  const auto &kets = s.basis().kets();
  for (std::size_t i = 0; i < kets.size(); ++i) {
    const Complex a = s.amplitudes()[static_cast<Eigen::Index>(i)];
    if (std::abs(a) <= drop_below || a == Complex{}) continue;
    arr.push_back({{"n_a", kets[i][0]}, {"n_b", kets[i][1]}, {"amp", complex_json(a)}});
  }
  return arr;
}

nlohmann::ordered_json factorize_report(const TargetSpec &t, int cutoff) {
  const int n = t.photons();
  if (cutoff >= 0 && cutoff < n) throw std::invalid_argument("cutoff must be at least N");
  const FactorSet f = factorize(t);
  const TwoModeState rec = reconstruct(f);
  const double fid = fidelity(rec, t.to_state());
  int at_infinity = 0;
  for (const auto &a : f.factors) at_infinity += (a.theta == std::numbers::pi / 2 && a.phi == 0.0) ? 1 : 0;
  nlohmann::ordered_json j;
  j["command"] = "factorize";
  j["N"] = n;
  j["target"] = target_json(t);
  j["factors"] = factors_json(f.factors);
  j["roots_at_infinity"] = at_infinity;
  j["normalization"] = f.normalization;
  j["global_phase"] = complex_json(f.global_phase);
  j["reconstructed_state"] = state_json(cutoff > n ? with_cutoff(rec, cutoff) : rec);
  j["roundtrip_fidelity"] = fid;
  j["passed"] = fid >= 1.0 - kFidelityTol;
  return j;
}

nlohmann::ordered_json simulate_report(const TargetSpec &t, const SimulateOptions &opts) {
  const int n = t.photons();
  if (opts.cutoff >= 0 && opts.cutoff < n) throw std::invalid_argument("cutoff must be at least N");
  nlohmann::ordered_json j;
  j["command"] = "simulate";
  j["N"] = n;
  j["target"] = target_json(t);

  SchemeResult r;
  std::vector<double> schedule;
  double closed = 0.0;
  if (!opts.two_photon_steps) {
    const FactorSet f = factorize(t);
    schedule = parse_schedule(opts.schedule, n);
    r = run_scheme(f.factors, schedule);
    closed = f.normalization;
    for (int k = 1; k <= n; ++k) closed *= qk_squared(schedule[static_cast<std::size_t>(k - 1)], k);
    j["mode"] = "single-photon";
    j["factors"] = factors_json(f.factors);
    j["normalization"] = f.normalization;
  } else {
    const auto phases = pair_factor_phases(t);
    schedule = parse_schedule(opts.schedule, n / 2);
    r = run_scheme_double(n, phases, schedule);
    closed = pair_normalization(phases);
    for (int k = 1; k <= n / 2; ++k) {
      const double q = qk_squared(schedule[static_cast<std::size_t>(k - 1)], k);
      closed *= 0.25 * q * q;
    }
    j["mode"] = "two-photon";
    j["pair_phases"] = phases;
    j["normalization"] = pair_normalization(phases);
  }

  nlohmann::ordered_json blocks = nlohmann::ordered_json::array();
  double product = 1.0;
  for (std::size_t k = 0; k < r.block_probs.size(); ++k) {
    blocks.push_back({{"k", k + 1}, {"transmittance", schedule[k]}, {"probability", r.block_probs[k]}});
    product *= r.block_probs[k];
  }
  j["blocks"] = blocks;
  j["total_yield"] = r.total_yield;
  j["closed_form_yield"] = closed;
  j["impossible"] = r.impossible;

  const TwoModeState final_state =
      (opts.cutoff > n) ? with_cutoff(r.final_state, opts.cutoff) : r.final_state;
  j["final_state"] = state_json(final_state);
  const double fid = r.impossible ? 0.0 : fidelity(r.final_state, t.to_state());
  j["fidelity"] = fid;

  const bool yield_ok = relative_close(r.total_yield, closed, kYieldRelTol) || (r.impossible && closed == 0.0);
  const bool product_ok = r.impossible || relative_close(product, r.total_yield, kYieldRelTol);
  const bool fid_ok = r.impossible || fid >= 1.0 - kFidelityTol;
  j["checks"] = {{"yield_matches_closed_form", yield_ok}, {"block_product_matches_yield", product_ok},
                 {"fidelity_within_tolerance", fid_ok}};
  j["passed"] = yield_ok && product_ok && fid_ok;
  return j;
}

std::string yield_table_csv(int max_photons, bool *simulation_consistent) {
  if (max_photons < 1 || max_photons > 24) throw std::invalid_argument("N_max must lie in [1, 24]");
  const auto rows = yield_table(max_photons, std::min(max_photons, kMaxSimulatedTableRow));
  bool consistent = true;
  for (const auto &r : rows) {
    if (r.single_simulated) consistent = consistent && relative_close(*r.single_simulated, r.single, kYieldRelTol);
    if (r.double_simulated) consistent = consistent && relative_close(*r.double_simulated, *r.double_closed, kYieldRelTol);
  }
  if (simulation_consistent) *simulation_consistent = consistent;

  const bool factorial = simulation_confirms_factorial_reading(rows, kYieldRelTol);
  std::ostringstream os;
  os << "# noonlab NOON yield table, optimal transmittances T_k = 1/k\n";
  os << "# single_closed = (N-1)! * (2N)^(1-N)\n";
  os << "# double_closed = 2^N * single_closed = 2 * (N-1)! * N^(1-N)\n";
  os << "# double_without_factorial = 2 * (N-1) * N^(1-N)\n";
  os << "# stirling = 2 * sqrt(2 pi N) * (2e)^(-N)\n";
  os << "# simulated columns: brute-force Fock-space scheme simulation for N <= "
     << std::min(max_photons, kMaxSimulatedTableRow) << "\n";
  os << "# two-photon yield formula confirmed by simulation: "
     << (factorial ? "double_closed = 2 * (N-1)! * N^(1-N)" : "none (simulated rows inconclusive)") << "\n";
  os << "N,single_closed,single_simulated,double_closed,double_without_factorial,double_simulated,stirling,"
        "ratio_double_over_single\n";
  for (const auto &r : rows) {
    os << r.photons << ',' << fmt17(r.single) << ',' << fmt_opt(r.single_simulated) << ',' << fmt_opt(r.double_closed)
       << ',' << fmt_opt(r.double_without_factorial) << ',' << fmt_opt(r.double_simulated) << ',' << fmt17(r.stirling)
       << ',' << fmt_opt(r.ratio_double_over_single) << '\n';
  }
  return os.str();
}

FringeData fringe_csv(int photons, int points) {
  if (photons < 1 || photons > kMaxFringePhotons) {
    throw std::invalid_argument("fringe N must lie in [1, " + std::to_string(kMaxFringePhotons) + "]");
  }
  if (points < 2 * photons + 1) {
    throw std::invalid_argument("fringe needs at least 2N+1 = " + std::to_string(2 * photons + 1) +
                                " points to resolve frequency N");
  }
  const FringeSweep sweep = fringe_sweep(noon_target(photons).to_state(), photons, points);
  FringeData data;
  data.dominant_frequency = dominant_frequency(sweep);
  std::ostringstream os;
  os << "# noonlab N-photon absorption fringe for NOON(" << photons << "), phase shift on mode b\n";
  os << "# photons=" << photons << "\n";
  os << "# points=" << points << "\n";
  os << "# dominant_frequency=" << data.dominant_frequency << "\n";
  os << "phase,rate\n";
  for (std::size_t i = 0; i < sweep.phases.size(); ++i) os << fmt17(sweep.phases[i]) << ',' << fmt17(sweep.rates[i]) << '\n';
  data.csv = os.str();
  return data;
}

OracleReport oracle_check(const OracleOptions &opts) {
  if (opts.trials < 1) throw std::invalid_argument("trials must be at least 1");
  if (opts.max_photons < 1 || opts.max_photons > 12) throw std::invalid_argument("oracle photon cutoff must lie in [1, 12]");
  std::mt19937_64 rng(opts.seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const std::array<double, 3> kappas{0.1, 0.7, 1.3};
  const double sign = opts.perturb ? -1.0 : 1.0;

  auto random_amps = [&](auto &state) {
    for (Eigen::Index i = 0; i < state.amplitudes().size(); ++i) state.amplitudes()[i] = Complex(gauss(rng), gauss(rng));
    state *= 1.0 / std::sqrt(state.norm2());
  };

  // Beam-splitter pair: disentangled form against the dense exponential.
  double bs_max = 0.0;
  nlohmann::ordered_json bs_worst = nullptr;
  for (int trial = 0; trial < opts.trials; ++trial) {
    FourModeState s(opts.max_photons);
    random_amps(s);
    for (double kappa : kappas) {
      const FourModeState exact = beam_splitter_pair_exact(s, sign * kappa);
      const FourModeState oracle = beam_splitter_pair_oracle(s, kappa);
      Eigen::Index where = 0;
      const double dev = (exact.amplitudes() - oracle.amplitudes()).cwiseAbs().maxCoeff(&where);
      if (dev > bs_max || bs_worst.is_null()) {
        bs_max = std::max(bs_max, dev);
        const auto &k = s.basis().ket(static_cast<std::size_t>(where));
        bs_worst = {{"trial", trial}, {"kappa", kappa}, {"ket", {k[0], k[1], k[2], k[3]}}, {"deviation", dev}};
      }
    }
  }

  // Single-photon block against q_k times the linear factor.
  double block_max = 0.0;
  nlohmann::ordered_json block_worst = nullptr;
  for (int trial = 0; trial < opts.trials; ++trial) {
    const int k = 1 + trial % 6;
    TwoModeState in(k - 1);
    for (int na = 0; na <= k - 1; ++na) in.at({na, k - 1 - na}) = Complex(gauss(rng), gauss(rng));
    in *= 1.0 / std::sqrt(in.norm2());
    const BlockParams p{unit(rng) * std::numbers::pi / 2, (2 * unit(rng) - 1) * std::numbers::pi, 0.05 + 0.95 * unit(rng)};
    const double kappa = sign * p.kappa();
    const TwoModeState got = run_block_single(in, p).state;
    TwoModeState want = apply_linear_factor(with_cutoff(in, k), p.theta, p.phi);
    want *= block_amplitude_single(k, kappa);
    Eigen::Index where = 0;
    const double dev = (got.amplitudes() - want.amplitudes()).cwiseAbs().maxCoeff(&where);
    if (dev > block_max || block_worst.is_null()) {
      block_max = std::max(block_max, dev);
      const auto &ket = got.basis().ket(static_cast<std::size_t>(where));
      block_worst = {{"trial", trial}, {"k", k}, {"theta", p.theta}, {"phi", p.phi}, {"transmittance", p.transmittance},
                     {"ket", {ket[0], ket[1]}}, {"deviation", dev}};
    }
  }

  const bool bs_ok = bs_max <= kOracleTol;
  const bool block_ok = block_max <= kOracleTol;
  OracleReport out;
  out.passed = bs_ok && block_ok;
  out.report = {
      {"command", "oracle-check"},
      {"seed", opts.seed},
      {"trials", opts.trials},
      {"max_photons", opts.max_photons},
      {"perturbed", opts.perturb},
      {"tolerance", kOracleTol},
      {"beam_splitter_pair", {{"kappas", kappas}, {"max_deviation", bs_max}, {"worst", bs_worst}, {"passed", bs_ok}}},
      {"single_photon_block", {{"max_deviation", block_max}, {"worst", block_worst}, {"passed", block_ok}}},
      {"passed", out.passed},
  };
  return out;
}

// ---------------------------------------------------------------------------

namespace {

int emit(const std::string &text, const std::string &path, std::ostream &out, std::ostream &err) {
  if (path.empty()) {
    out << text;
    return kOk;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) {
    err << "error: cannot write '" << path << "'\n";
    return kValidationError;
  }
  f << text;
  return kOk;
}

TargetSpec load_spec(const std::string &path, std::ostream &err) {
  const TargetFile tf = load_target(path);
  if (tf.needed_renormalization()) {
    err << "warning: target coefficients had norm^2 " << fmt17(tf.input_norm2) << "; renormalized\n";
  }
  return tf.spec();
}

}  // namespace

int run(int argc, const char *const *argv, std::ostream &out, std::ostream &err) {
  CLI::App app{"noonlab: conditional N-photon path-entangled state generation"};
  app.require_subcommand(1);

  std::string target_path;
  std::string out_path;
  std::string schedule = "optimal";
  int cutoff = -1;
  bool two_photon = false;
  int n_max = 0;
  int photons = 0;
  int points = 0;
  std::uint64_t seed = 1;
  int trials = 100;
  bool perturb = false;

  auto *fac = app.add_subcommand("factorize", "Factor a target state into linear creation-operator factors");
  fac->add_option("target", target_path, "Target JSON file")->required();
  fac->add_option("--cutoff", cutoff, "Photon cutoff for the reported state (>= N)");
  fac->add_option("--out", out_path, "Write the report here instead of stdout");

  auto *sim = app.add_subcommand("simulate", "Simulate the conditional block scheme for a target");
  sim->add_option("target", target_path, "Target JSON file")->required();
  sim->add_flag("--double", two_photon, "Add two photons per block (even N, balanced pair factors)");
  sim->add_option("--schedule", schedule, "'optimal' or a comma list of transmittances");
  sim->add_option("--cutoff", cutoff, "Photon cutoff for the reported state (>= N)");
  sim->add_option("--out", out_path, "Write the report here instead of stdout");

  auto *tab = app.add_subcommand("yield-table", "Closed-form and simulated NOON yields");
  tab->add_option("N_max", n_max, "Largest photon number (1..24)")->required();
  tab->add_option("--out", out_path, "Write the table here instead of stdout");

  auto *fr = app.add_subcommand("fringe", "N-photon absorption fringe of NOON(N) under a phase sweep");
  fr->add_option("N", photons, "Photon number (1..8)")->required();
  fr->add_option("points", points, "Sweep points (>= 2N+1)")->required();
  fr->add_option("--out", out_path, "Write the sweep here instead of stdout");

  auto *orc = app.add_subcommand("oracle-check", "Compare exact routes against brute-force oracles");
  orc->add_option("--seed", seed, "Random seed");
  orc->add_option("--trials", trials, "Number of random instances per check");
  orc->add_option("--cutoff", cutoff, "Photon cutoff of the random four-mode states (default 8)");
  orc->add_flag("--perturb", perturb, "Negative control: flip the beam-splitter convention on the exact route");
  orc->add_option("--out", out_path, "Write the report here instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kValidationError;
  }

  try {
    if (*fac) {
      const auto report = factorize_report(load_spec(target_path, err), cutoff);
      const int rc = emit(report.dump(2) + "\n", out_path, out, err);
      if (rc != kOk) return rc;
      return report["passed"].get<bool>() ? kOk : kToleranceFailure;
    }
    if (*sim) {
      const auto report = simulate_report(load_spec(target_path, err), {two_photon, schedule, cutoff});
      const int rc = emit(report.dump(2) + "\n", out_path, out, err);
      if (rc != kOk) return rc;
      return report["passed"].get<bool>() ? kOk : kToleranceFailure;
    }
    if (*tab) {
      bool consistent = false;
      const std::string csv = yield_table_csv(n_max, &consistent);
      const int rc = emit(csv, out_path, out, err);
      if (rc != kOk) return rc;
      if (!consistent) err << "error: simulated yields disagree with the closed forms\n";
      return consistent ? kOk : kToleranceFailure;
    }
    if (*fr) {
      const FringeData data = fringe_csv(photons, points);
      const int rc = emit(data.csv, out_path, out, err);
      if (rc != kOk) return rc;
      if (data.dominant_frequency != photons) {
        err << "error: dominant fringe frequency " << data.dominant_frequency << " != N = " << photons << "\n";
        return kToleranceFailure;
      }
      return kOk;
    }
    if (*orc) {
      const OracleReport rep = oracle_check({seed, trials, cutoff < 0 ? 8 : cutoff, perturb});
      const int rc = emit(rep.report.dump(2) + "\n", out_path, out, err);
      if (rc != kOk) return rc;
      return rep.passed ? kOk : kToleranceFailure;
    }
  } catch (const ParseError &e) {
    err << "error: " << e.what() << "\n";
    return kValidationError;
  } catch (const std::invalid_argument &e) {
    err << "error: " << e.what() << "\n";
    return kValidationError;
  } catch (const std::exception &e) {
    err << "error: " << e.what() << "\n";
    return kToleranceFailure;
  }
  return kValidationError;
}

}  // namespace noonlab::cli
