// Copyright 2026 The ringnet Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "ringnet/distribution.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>

namespace ringnet {

OutcomeDistribution OutcomeDistribution::zeros(int parties) {
  if (parties < 1 || parties > 30) {
    throw std::invalid_argument("party count out of range: " +
                                std::to_string(parties));
  }
  OutcomeDistribution d;
  d.parties = parties;
  d.probs.assign(std::size_t{1} << parties, 0.0);
  return d;
}

void OutcomeDistribution::validate(double sum_tol) const {
  if (parties < 1 || probs.size() != (std::size_t{1} << parties)) {
    throw std::invalid_argument("distribution size does not match 2^parties");
  }
  double sum = 0.0;
  for (double p : probs) {
    if (!(p >= -1e-12)) {
      throw std::invalid_argument("distribution has a negative entry");
    }
    sum += p;
  }
  if (std::abs(sum - 1.0) > sum_tol) {
    throw std::invalid_argument("distribution sums to " + std::to_string(sum) +
                                ", expected 1");
  }
}

std::string format_bitstring(std::uint32_t bitstring, int parties) {
  std::string s(static_cast<std::size_t>(parties), '0');
  for (int j = 0; j < parties; ++j) {
    if (bit_of(bitstring, j, parties)) s[static_cast<std::size_t>(j)] = '1';
  }
  return s;
}

std::uint32_t parse_bitstring(const std::string& s) {
  if (s.empty() || s.size() > 30) {
    throw std::invalid_argument("bad bitstring: '" + s + "'");
  }
  std::uint32_t v = 0;
  for (char c : s) {
    if (c != '0' && c != '1') {
      throw std::invalid_argument("bad bitstring: '" + s + "'");
    }
    v = (v << 1) | static_cast<std::uint32_t>(c - '0');
  }
  return v;
}

}  // namespace ringnet
