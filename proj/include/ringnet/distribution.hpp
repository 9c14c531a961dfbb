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

#pragma once

#include <bit>
#include <cstdint>
#include <string>
#include <vector>

namespace ringnet {

/// Probability distribution over the 2^n binary outcome strings of an n-party
/// network. Strings are indexed big-endian: party 0 owns the most significant
/// bit, so for n = 3 the outcome (a1=0, a2=1, a3=1) is "011" = index 3.
struct OutcomeDistribution {
  int parties = 0;
  std::vector<double> probs;

  static OutcomeDistribution zeros(int parties);

  std::size_t size() const { return probs.size(); }

  /// Throws std::invalid_argument unless the vector has 2^parties entries,
  /// all non-negative (up to -1e-12 noise), summing to 1 within sum_tol.
  void validate(double sum_tol = 1e-9) const;
};

/// XOR of the bits of an outcome string.
inline unsigned parity(std::uint64_t bitstring) {
  return static_cast<unsigned>(std::popcount(bitstring) & 1);
}

/// Bit of party `party` in an outcome-string index (big-endian).
inline unsigned bit_of(std::uint32_t bitstring, int party, int parties) {
  return (bitstring >> (parties - 1 - party)) & 1u;
}

std::string format_bitstring(std::uint32_t bitstring, int parties);

/// Parses a string of '0'/'1' characters; throws std::invalid_argument on
/// anything else or on empty input.
std::uint32_t parse_bitstring(const std::string& s);

}  // namespace ringnet
