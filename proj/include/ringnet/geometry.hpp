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

#include <cstdint>
#include <optional>
#include <vector>

#include "ringnet/classical.hpp"
#include "ringnet/optimizer.hpp"

namespace ringnet {

/// Parameters certifying the point mass on `bitstring` as classical:
/// gamma = 1 with deterministic clockwise responses. The round trip through
/// classical_distribution reproduces the point mass exactly.
ClassicalParams vertex_membership(std::uint32_t bitstring, int parties);

struct VertexCertificate {
  std::uint32_t bitstring = 0;
  ClassicalParams params;
  /// Largest entrywise deviation of the round trip from the point mass.
  double max_abs_error = 0.0;
};

/// Two classical distributions whose convex mixture is not classical.
struct ConvexityWitness {
  int parties = 0;
  OutcomeDistribution q1, q2;
  ClassicalParams q1_params, q2_params;
  double q1_residual = 0.0, q2_residual = 0.0;
  double lambda = 0.5;
  OutcomeDistribution midpoint;
  DecompositionResult midpoint_result;
};

struct WitnessOptions {
  double lambda = 0.5;
  int restarts = 64;
  std::uint64_t seed = 2026;
  double tol = 1e-6;
};

/// Standard witness: q1 and q2 are half/half mixtures of complementary pairs
/// of even-parity point masses whose lambda = 1/2 mixture is the uniform
/// distribution over four even-parity strings -- for n = 3, exactly the
/// quantum ring distribution. The mixture's infeasibility is established both
/// by the exact even-support certificate and by the optimization residual.
/// Throws std::invalid_argument for n < 3: at two parties the classical set
/// already contains the quantum point and no such witness exists.
ConvexityWitness nonconvexity_witness(int parties,
                                      const WitnessOptions& options = {});

struct SeparationReport {
  int parties = 0;
  std::vector<VertexCertificate> vertices;
  /// False at n = 2, where the non-convexity section does not apply.
  bool witness_applicable = false;
  std::optional<ConvexityWitness> witness;
};

/// Aggregates the two facts behind the no-linear-inequality claim: every
/// vertex of the logical polytope is classical, and the classical set is
/// non-convex. Any linear functional bounded on the classical set is
/// therefore bounded on the whole polytope. Aggregation only; nothing here
/// searches for hyperplanes.
SeparationReport no_separating_hyperplane_report(
    int parties, const WitnessOptions& options = {});

}  // namespace ringnet
