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

#include "ringnet/witness.hpp"

#include <cmath>
#include <stdexcept>

namespace ringnet {

double interference_term(double p00, double p01, double p10, double p11) {
  return p00 - p01 - p10 + p11;
}

double pair_sum_gap(std::span<const double> probs) {
  // Sum over unordered distinct pairs within a parity class equals
  // ((sum)^2 - sum of squares) / 2.
  double mass[2] = {0.0, 0.0};
  double mass_sq[2] = {0.0, 0.0};
  for (std::size_t i = 0; i < probs.size(); ++i) {
    const unsigned par = parity(i);
    mass[par] += probs[i];
    mass_sq[par] += probs[i] * probs[i];
  }
  const double even_pairs = 0.5 * (mass[0] * mass[0] - mass_sq[0]);
  const double odd_pairs = 0.5 * (mass[1] * mass[1] - mass_sq[1]);
  return even_pairs - odd_pairs;
}

WitnessValue evaluate_cn(const OutcomeDistribution& dist) {
  dist.validate(1e-9);
  WitnessValue w;
  w.parties = dist.parties;
  double mass[2] = {0.0, 0.0};
  double mass_sq[2] = {0.0, 0.0};
  for (std::size_t i = 0; i < dist.probs.size(); ++i) {
    const unsigned par = parity(i);
    mass[par] += dist.probs[i];
    mass_sq[par] += dist.probs[i] * dist.probs[i];
  }
  w.even_pair_sum = 0.5 * (mass[0] * mass[0] - mass_sq[0]);
  w.odd_pair_sum = 0.5 * (mass[1] * mass[1] - mass_sq[1]);
  w.value = std::abs(w.even_pair_sum - w.odd_pair_sum);
  return w;
}

double quantum_cn_value(int parties) {
  if (parties < 2) {
    throw std::invalid_argument("quantum witness value needs at least 2 parties");
  }
  // binom(2^(n-1), 2) * (2^(1-n))^2 simplifies to 1/2 - 2^-n, exactly
  // representable in binary.
  return 0.5 - std::ldexp(1.0, -parties);
}

}  // namespace ringnet
