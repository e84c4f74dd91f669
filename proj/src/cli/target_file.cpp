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

#include "noonlab/cli.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

namespace noonlab::cli {

namespace {

constexpr int kMaxPhotons = 24;

double parse_number(std::string_view tok, const std::string &field) {
  const auto trim = [](std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
    return s;
  };
  tok = trim(tok);
  double v = 0.0;
  const char *end = tok.data() + tok.size();
  auto [ptr, ec] = std::from_chars(tok.data(), end, v);
  if (ec != std::errc() || ptr != end || tok.empty()) throw ParseError(field + ": '" + std::string(tok) + "' is not a number");
  return v;
}

}  // namespace

TargetFile parse_target(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error &e) {
    throw ParseError(std::string("target file is not valid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw ParseError("target file: expected a JSON object with fields N and coeffs");
  if (!doc.contains("N")) throw ParseError("field 'N' is missing");
  if (!doc["N"].is_number_integer()) throw ParseError("field 'N' must be an integer");
  const auto n = doc["N"].get<long long>();
  if (n < 1 || n > kMaxPhotons) throw ParseError("field 'N' must lie in [1, " + std::to_string(kMaxPhotons) + "]");
  if (!doc.contains("coeffs")) throw ParseError("field 'coeffs' is missing");
  const auto &arr = doc["coeffs"];
  if (!arr.is_array()) throw ParseError("field 'coeffs' must be an array of [re, im] pairs");
  if (arr.size() != static_cast<std::size_t>(n) + 1) {
    throw ParseError("field 'coeffs' must hold N+1 = " + std::to_string(n + 1) + " entries, got " +
                     std::to_string(arr.size()));
  }
  TargetFile t;
  t.photons = static_cast<int>(n);
  double n2 = 0.0;
  for (std::size_t k = 0; k < arr.size(); ++k) {
    const auto &pair = arr[k];
    const std::string field = "field 'coeffs[" + std::to_string(k) + "]'";
    if (!pair.is_array() || pair.size() != 2 || !pair[0].is_number() || !pair[1].is_number()) {
      throw ParseError(field + " must be a [re, im] pair of numbers");
    }
    const Complex c(pair[0].get<double>(), pair[1].get<double>());
    if (!std::isfinite(c.real()) || !std::isfinite(c.imag())) throw ParseError(field + " is not finite");
    n2 += std::norm(c);
    t.coeffs.push_back(c);
  }
  if (n2 == 0.0) throw ParseError("field 'coeffs' is all zero");
  t.input_norm2 = n2;
  const double inv = 1.0 / std::sqrt(n2);
  for (auto &c : t.coeffs) c *= inv;
  return t;
}

TargetFile load_target(const std::string &path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot read target file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_target(buf.str());
}

std::vector<double> parse_schedule(std::string_view text, int blocks) {
  if (text == "optimal") {
    std::vector<double> t;
    for (int k = 1; k <= blocks; ++k) t.push_back(1.0 / k);
    return t;
  }
  std::vector<double> t;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t comma = text.find(',', start);
    const std::string_view tok = text.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
    const std::string field = "schedule entry " + std::to_string(t.size() + 1);
    const std::size_t slash = tok.find('/');
    double v = 0.0;
    if (slash == std::string_view::npos) {
      v = parse_number(tok, field);
    } else {
      const double num = parse_number(tok.substr(0, slash), field);
      const double den = parse_number(tok.substr(slash + 1), field);
      if (den == 0.0) throw ParseError(field + ": zero denominator");
      v = num / den;
    }
    if (!(v > 0.0 && v <= 1.0)) throw ParseError(field + ": transmittance must lie in (0, 1]");
    t.push_back(v);
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  if (static_cast<int>(t.size()) != blocks) {
    throw ParseError("schedule has " + std::to_string(t.size()) + " entries but the scheme has " +
                     std::to_string(blocks) + " blocks");
  }
  return t;
}

}  // namespace noonlab::cli
