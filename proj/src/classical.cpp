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

#include "ringnet/classical.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "ringnet/errors.hpp"

namespace ringnet {

namespace {

void require_unit_interval(std::span<const double> values, const char* name) {
  for (double v : values) {
    if (!(v >= 0.0 && v <= 1.0)) {
      throw std::invalid_argument(std::string(name) + " entry " +
                                  std::to_string(v) + " outside [0,1]");
    }
  }
}

}  // namespace

void ClassicalParams::validate() const {
  if (parties < 2) {
    throw std::invalid_argument("classical model needs at least 2 parties");
  }
  if (p_zero.size() != static_cast<std::size_t>(parties) ||
      q_zero.size() != static_cast<std::size_t>(parties)) {
    throw std::invalid_argument("response lists must have one entry per party");
  }
  if (!(gamma >= 0.0 && gamma <= 1.0)) {
    throw std::invalid_argument("gamma outside [0,1]");
  }
  require_unit_interval(p_zero, "p_zero");
  require_unit_interval(q_zero, "q_zero");
}

void RoutingParams::validate() const {
  if (direction_probs.size() < 2) {
    throw std::invalid_argument("routing needs at least 2 sources");
  }
  require_unit_interval(direction_probs, "direction_probs");
}

void classical_distribution_into(int parties, double gamma,
                                 std::span<const double> p_zero,
                                 std::span<const double> q_zero,
                                 std::span<double> out) {
  const std::uint32_t count = 1u << parties;
  const double anti_gamma = 1.0 - gamma;
  for (std::uint32_t idx = 0; idx < count; ++idx) {
    double p = 1.0;
    double q = 1.0;
    for (int j = 0; j < parties; ++j) {
      if (bit_of(idx, j, parties)) {
        p *= 1.0 - p_zero[static_cast<std::size_t>(j)];
        q *= 1.0 - q_zero[static_cast<std::size_t>(j)];
      } else {
        p *= p_zero[static_cast<std::size_t>(j)];
        q *= q_zero[static_cast<std::size_t>(j)];
      }
    }
    out[idx] = gamma * p + anti_gamma * q;
  }
}

OutcomeDistribution classical_distribution(const ClassicalParams& params) {
  params.validate();
  OutcomeDistribution dist = OutcomeDistribution::zeros(params.parties);
  classical_distribution_into(params.parties, params.gamma, params.p_zero,
                              params.q_zero, dist.probs);
  return dist;
}

PostselectedModel postselected_from_routing(const RoutingParams& routing,
                                            std::vector<double> p_zero,
                                            std::vector<double> q_zero) {
  routing.validate();
  const int parties = static_cast<int>(routing.direction_probs.size());
  double clockwise = 1.0;
  double counterclockwise = 1.0;
  for (double d : routing.direction_probs) {
    clockwise *= d;
    counterclockwise *= 1.0 - d;
  }
  const double pi = clockwise + counterclockwise;
  if (pi == 0.0) {
    throw PostselectionError(
        "both cyclic routing products vanish; post-selection never succeeds");
  }
  PostselectedModel model;
  model.single_detection_probability = pi;
  model.params.parties = parties;
  model.params.gamma = clockwise / pi;
  model.params.p_zero = std::move(p_zero);
  model.params.q_zero = std::move(q_zero);
  model.params.validate();
  return model;
}

PredicateVerdict check_predicate(const OutcomeDistribution& dist, double tol) {
  dist.validate();
  PredicateVerdict verdict;
  for (std::uint32_t idx = 0; idx < dist.probs.size(); ++idx) {
    if (parity(idx) == 1) {
      if (dist.probs[idx] > tol) verdict.odd_violations.push_back(idx);
    } else {
      if (dist.probs[idx] <= tol) verdict.even_violations.push_back(idx);
    }
  }
  verdict.satisfied =
      verdict.odd_violations.empty() && verdict.even_violations.empty();
  return verdict;
}

namespace {

// A direction's flags packed as two bitmasks over outcome-string positions:
// kill0 marks parties whose response to outcome 0 is pinned to zero, kill1
// likewise for outcome 1. A string is killed when any of its bits hits a
// pinned outcome.
struct KillMasks {
  std::uint32_t kill0 = 0;
  std::uint32_t kill1 = 0;

  bool kills(std::uint32_t idx) const {
    return ((kill0 & ~idx) | (kill1 & idx)) != 0;
  }
};

KillMasks masks_from_flags(const std::uint8_t* trits, int parties) {
  KillMasks m;
  for (int j = 0; j < parties; ++j) {
    const std::uint32_t bit = 1u << (parties - 1 - j);
    if (trits[j] == 1) m.kill0 |= bit;
    if (trits[j] == 2) m.kill1 |= bit;
  }
  return m;
}

SupportPattern pattern_from_trits(const std::vector<std::uint8_t>& trits,
                                  int parties) {
  SupportPattern pattern;
  pattern.clockwise.resize(static_cast<std::size_t>(parties));
  pattern.counterclockwise.resize(static_cast<std::size_t>(parties));
  for (int j = 0; j < parties; ++j) {
    pattern.clockwise[static_cast<std::size_t>(j)] =
        static_cast<ZeroFlag>(trits[static_cast<std::size_t>(j)]);
    pattern.counterclockwise[static_cast<std::size_t>(j)] =
        static_cast<ZeroFlag>(trits[static_cast<std::size_t>(parties + j)]);
  }
  return pattern;
}

}  // namespace

InfeasibilityReport predicate_infeasibility_proof(int parties) {
  if (parties < 2 || parties > 6) {
    throw std::invalid_argument(
        "support-pattern enumeration covers 2 <= parties <= 6 (3^(2n) "
        "patterns); got " +
        std::to_string(parties));
  }
  InfeasibilityReport report;
  report.parties = parties;

  const std::uint32_t strings = 1u << parties;
  // Masked kill test needs the full bit width only; ~idx bits beyond the
  // string length never intersect the masks.
  std::vector<std::uint8_t> trits(static_cast<std::size_t>(2 * parties), 0);
  bool done = false;
  while (!done) {
    ++report.patterns_examined;
    const KillMasks cw = masks_from_flags(trits.data(), parties);
    const KillMasks ccw = masks_from_flags(trits.data() + parties, parties);

    bool odd_killed = true;
    for (std::uint32_t idx = 0; idx < strings && odd_killed; ++idx) {
      if (parity(idx) == 1 && !(cw.kills(idx) && ccw.kills(idx))) {
        odd_killed = false;
      }
    }
    if (odd_killed) {
      ++report.odd_killing_patterns;
      bool even_alive = true;
      for (std::uint32_t idx = 0; idx < strings && even_alive; ++idx) {
        if (parity(idx) == 0 && cw.kills(idx) && ccw.kills(idx)) {
          even_alive = false;
        }
      }
      if (even_alive) {
        ++report.feasible_patterns;
        if (report.examples.size() < 4) {
          report.examples.push_back(pattern_from_trits(trits, parties));
        }
      }
    }

    // Odometer over 3^(2n) flag assignments.
    std::size_t pos = 0;
    while (pos < trits.size() && ++trits[pos] == 3) {
      trits[pos] = 0;
      ++pos;
    }
    done = pos == trits.size();
  }

  report.infeasible = report.feasible_patterns == 0;
  return report;
}

}  // namespace ringnet
