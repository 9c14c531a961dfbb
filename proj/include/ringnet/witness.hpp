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

#include <span>

#include "ringnet/distribution.hpp"

namespace ringnet {

/// Value of the nonlinear coherence witness C_n on a distribution, together
/// with its two constituent sums over unordered pairs of distinct outcome
/// strings of equal parity.
struct WitnessValue {
  int parties = 0;
  double value = 0.0;          // |even_pair_sum - odd_pair_sum|
  double even_pair_sum = 0.0;  // sum over unordered even-parity pairs of p*p'
  double odd_pair_sum = 0.0;
};

/// Two-slit interference term: p00 - p01 - p10 + p11. Zero whenever detection
/// probabilities combine additively.
double interference_term(double p00, double p01, double p10, double p11);

/// even_pair_sum - odd_pair_sum of a probability vector indexed by outcome
/// string. No validation; shared low-level kernel of evaluate_cn and the
/// classical-bound optimizer.
double pair_sum_gap(std::span<const double> probs);

/// Evaluates C_n. Input must be a valid distribution (sums to 1 within 1e-9).
WitnessValue evaluate_cn(const OutcomeDistribution& dist);

/// Closed-form quantum value of C_n on the ring network: 1/2 - 2^-n,
/// the logical maximum. Throws std::invalid_argument for n < 2.
double quantum_cn_value(int parties);

}  // namespace ringnet
