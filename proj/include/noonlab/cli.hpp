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

#include "noonlab/factorize.hpp"

#include <nlohmann/json.hpp>

#include <cmath>
#include <complex>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace noonlab::cli {

enum ExitCode : int {
  kOk = 0,
  kValidationError = 1,
  kToleranceFailure = 2,
};

/// Malformed input; the message names the offending field.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Target file: {"N": 4, "coeffs": [[re, im], ...]} with N+1 pairs.
struct TargetFile {
  int photons = 0;
  std::vector<Complex> coeffs;
  double input_norm2 = 1.0;  // before renormalization

  bool needed_renormalization(double tol = 1e-6) const { return std::abs(input_norm2 - 1.0) > tol; }
  TargetSpec spec() const { return TargetSpec(photons, coeffs); }
};

TargetFile parse_target(std::string_view text);
TargetFile load_target(const std::string &path);

/// "optimal" or a comma list of transmittances; entries may be fractions
/// such as "1/3". Throws ParseError.
std::vector<double> parse_schedule(std::string_view text, int blocks);

nlohmann::ordered_json complex_json(Complex z);
nlohmann::ordered_json state_json(const TwoModeState &s, double drop_below = 0.0);

struct SimulateOptions {
  bool two_photon_steps = false;
  std::string schedule = "optimal";
  int cutoff = -1;
};

/// Factor angles, normalization and round-trip fidelity.
nlohmann::ordered_json factorize_report(const TargetSpec &t, int cutoff = -1);

/// Full scheme run. Throws std::invalid_argument for invalid option
/// combinations (e.g. two-photon steps on an odd target).
nlohmann::ordered_json simulate_report(const TargetSpec &t, const SimulateOptions &opts);

/// CSV yield table with header comments; `confirmed` receives whether the
/// simulated two-photon yields match the factorial formula.
std::string yield_table_csv(int max_photons, bool *simulation_consistent = nullptr);

struct FringeData {
  std::string csv;
  int dominant_frequency = 0;
};
FringeData fringe_csv(int photons, int points);

struct OracleOptions {
  std::uint64_t seed = 1;
  int trials = 100;
  int max_photons = 8;
  bool perturb = false;  // negative control: flips the exact route's convention
};
struct OracleReport {
  nlohmann::ordered_json report;
  bool passed = false;
};
OracleReport oracle_check(const OracleOptions &opts);

/// Full command-line entry point; returns the process exit code.
int run(int argc, const char *const *argv, std::ostream &out, std::ostream &err);

}  // namespace noonlab::cli
