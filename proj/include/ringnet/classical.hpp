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
#include <span>
#include <vector>

#include "ringnet/distribution.hpp"

namespace ringnet {

/// Post-selected classical ring model: with probability gamma every particle
/// travelled clockwise (each source to its own-indexed station) and station j
/// answers 0 with probability p_zero[j]; otherwise every particle travelled
/// counterclockwise and station j answers 0 with probability q_zero[j].
struct ClassicalParams {
  int parties = 0;
  double gamma = 0.0;
  std::vector<double> p_zero;
  std::vector<double> q_zero;

  /// Throws std::invalid_argument unless all entries lie in [0,1] and both
  /// response lists have `parties` entries.
  void validate() const;
};

/// Pre-post-selection routing: direction_probs[i] is the probability that
/// source i sends its particle clockwise, i.e. to station i rather than to
/// station i+1.
struct RoutingParams {
  std::vector<double> direction_probs;

  void validate() const;
};

/// p(a_1..a_n) = gamma * prod_j p_j(a_j) + (1-gamma) * prod_j q_j(a_j).
OutcomeDistribution classical_distribution(const ClassicalParams& params);

/// Allocation-free kernel of classical_distribution; `out` must hold
/// 2^parties entries.
void classical_distribution_into(int parties, double gamma,
                                 std::span<const double> p_zero,
                                 std::span<const double> q_zero,
                                 std::span<double> out);

struct PostselectedModel {
  /// Probability that post-selection succeeds: product of all clockwise
  /// routing probabilities plus product of all counterclockwise ones.
  double single_detection_probability = 0.0;
  ClassicalParams params;
};

/// Conditions the routing model on one particle per station. Only the two
/// coherent orientations survive, so gamma is the clockwise product divided
/// by their sum. Responses are copied through unchanged. Throws
/// PostselectionError when both orientation products vanish.
PostselectedModel postselected_from_routing(const RoutingParams& routing,
                                            std::vector<double> p_zero,
                                            std::vector<double> q_zero);

struct PredicateVerdict {
  bool satisfied = false;
  /// Odd-parity strings with probability above tol.
  std::vector<std::uint32_t> odd_violations;
  /// Even-parity strings with probability at or below tol.
  std::vector<std::uint32_t> even_violations;
};

/// Checks the parity predicate: every odd-parity outcome has probability
/// <= tol and every even-parity outcome has probability > tol.
PredicateVerdict check_predicate(const OutcomeDistribution& dist,
                                 double tol = 1e-9);

/// Which outcome of one station's response distribution is pinned to exactly
/// zero, per routing direction. kNone leaves both outcomes free.
enum class ZeroFlag : std::uint8_t { kNone = 0, kOutcome0 = 1, kOutcome1 = 2 };

struct SupportPattern {
  std::vector<ZeroFlag> clockwise;
  std::vector<ZeroFlag> counterclockwise;
};

struct InfeasibilityReport {
  int parties = 0;
  /// 3^(2n): every assignment of a zero outcome (or none) to each station and
  /// direction.
  std::uint64_t patterns_examined = 0;
  /// Patterns that null every odd-parity outcome in both orientations.
  std::uint64_t odd_killing_patterns = 0;
  /// ...of which some keep every even-parity outcome reachable.
  std::uint64_t feasible_patterns = 0;
  bool infeasible = false;
  /// Up to four feasible patterns, when any exist.
  std::vector<SupportPattern> examples;
};

/// Exhaustively enumerates support patterns and checks, per pattern, whether
/// (a) every odd-parity outcome is killed in both the clockwise and the
/// counterclockwise product and (b) every even-parity outcome can stay
/// strictly positive. No pattern passes both for n >= 3; for n = 2 the
/// perfect-correlation patterns do. Combinatorial certificate, no floating
/// point involved. Throws std::invalid_argument outside 2 <= n <= 6 (the
/// enumeration is 3^(2n) patterns; n = 6 is the practical bound).
InfeasibilityReport predicate_infeasibility_proof(int parties);

}  // namespace ringnet
