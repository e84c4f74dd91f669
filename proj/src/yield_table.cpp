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
#include "noonlab/factorize.hpp"
#include "noonlab/yield.hpp"

#include <cmath>

namespace noonlab {

std::vector<YieldRow> yield_table(int max_photons, int simulate_up_to) {
  if (max_photons < 1) throw std::invalid_argument("yield table needs at least one row");
  std::vector<YieldRow> rows;
  for (int n = 1; n <= max_photons; ++n) {
    YieldRow row;
    row.photons = n;
    row.single = yield_noon_single(n);
    row.stirling = yield_stirling(n);
    if (n % 2 == 0) {
      row.double_closed = yield_noon_double(n);
      row.double_without_factorial = yield_noon_double_without_factorial(n);
      row.ratio_double_over_single = *row.double_closed / row.single;
    }
    if (n <= simulate_up_to) {
      const auto schedule = optimal_schedule(n);
      row.single_simulated = run_scheme(noon_factor_angles(n), schedule).total_yield;
      if (n % 2 == 0) {
        row.double_simulated =
            run_scheme_double(n, noon_pair_phases(n), optimal_schedule(n / 2)).total_yield;
      }
    }
    rows.push_back(row);
  }
  return rows;
}

bool simulation_confirms_factorial_reading(const std::vector<YieldRow> &rows, double rel_tol) {
  bool any = false;
  bool factorial_ok = true;
  bool plain_ok = true;
  for (const auto &r : rows) {
    if (!r.double_simulated) continue;
    any = true;
    const double sim = *r.double_simulated;
    factorial_ok = factorial_ok && std::abs(*r.double_closed - sim) <= rel_tol * sim;
    plain_ok = plain_ok && std::abs(*r.double_without_factorial - sim) <= rel_tol * sim;
  }
  return any && factorial_ok && !plain_ok;
}

}  // namespace noonlab
