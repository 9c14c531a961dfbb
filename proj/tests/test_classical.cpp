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

#include <doctest.h>

#include <cmath>
#include <numeric>
#include <random>

#include "ringnet/errors.hpp"

using namespace ringnet;

namespace {

ClassicalParams make_params(double gamma, std::vector<double> p_zero,
                            std::vector<double> q_zero) {
  ClassicalParams params;
  params.parties = static_cast<int>(p_zero.size());
  params.gamma = gamma;
  params.p_zero = std::move(p_zero);
  params.q_zero = std::move(q_zero);
  return params;
}

}  // namespace

TEST_CASE("deterministic parameters give point masses") {
  const OutcomeDistribution d =
      classical_distribution(make_params(1.0, {1, 1, 1}, {0.5, 0.5, 0.5}));
  CHECK(d.probs[0b000] == 1.0);
  for (std::uint32_t s = 1; s < 8; ++s) CHECK(d.probs[s] == 0.0);
}

TEST_CASE("half/half mixture of two deterministic orientations") {
  const OutcomeDistribution d =
      classical_distribution(make_params(0.5, {1, 1, 1}, {0, 1, 0}));
  CHECK(d.probs[0b000] == 0.5);
  CHECK(d.probs[0b101] == 0.5);
  for (std::uint32_t s : {0b001u, 0b010u, 0b011u, 0b100u, 0b110u, 0b111u}) {
    CHECK(d.probs[s] == 0.0);
  }
}

TEST_CASE("unbiased responses give the uniform distribution") {
  const OutcomeDistribution d = classical_distribution(
      make_params(0.5, {0.5, 0.5, 0.5}, {0.5, 0.5, 0.5}));
  for (double p : d.probs) CHECK(std::abs(p - 0.125) < 1e-15);
}

TEST_CASE("classical distributions always normalize") {
  std::mt19937_64 rng(555);
  std::uniform_real_distribution<double> uniform(0.0, 1.0);
  for (int n : {2, 3, 5}) {
    for (int trial = 0; trial < 100; ++trial) {
      ClassicalParams params;
      params.parties = n;
      params.gamma = uniform(rng);
      for (int j = 0; j < n; ++j) {
        params.p_zero.push_back(uniform(rng));
        params.q_zero.push_back(uniform(rng));
      }
      const OutcomeDistribution d = classical_distribution(params);
      const double sum =
          std::accumulate(d.probs.begin(), d.probs.end(), 0.0);
      CHECK(std::abs(sum - 1.0) < 1e-12);
    }
  }
}

TEST_CASE("parameter validation rejects out-of-range entries") {
  CHECK_THROWS_AS(classical_distribution(make_params(1.2, {1, 1}, {1, 1})),
                  std::invalid_argument);
  CHECK_THROWS_AS(classical_distribution(make_params(0.5, {1.0, -0.1}, {1, 1})),
                  std::invalid_argument);
  ClassicalParams short_list = make_params(0.5, {1, 1, 1}, {1, 1, 1});
  short_list.q_zero.pop_back();
  CHECK_THROWS_AS(classical_distribution(short_list), std::invalid_argument);
}

TEST_CASE("routing post-selection recovers gamma") {
  SUBCASE("uniform routing") {
    const PostselectedModel model = postselected_from_routing(
        RoutingParams{{0.5, 0.5, 0.5}}, {1, 1, 1}, {0, 1, 0});
    CHECK(model.single_detection_probability == 0.25);
    CHECK(model.params.gamma == 0.5);
    CHECK(model.params.p_zero == std::vector<double>{1, 1, 1});
    CHECK(model.params.q_zero == std::vector<double>{0, 1, 0});
  }
  SUBCASE("deterministic clockwise routing") {
    const PostselectedModel model = postselected_from_routing(
        RoutingParams{{1, 1, 1}}, {0.5, 0.5, 0.5}, {0.5, 0.5, 0.5});
    CHECK(model.single_detection_probability == 1.0);
    CHECK(model.params.gamma == 1.0);
  }
  SUBCASE("blocked routing is a distinct error") {
    CHECK_THROWS_AS(postselected_from_routing(RoutingParams{{1, 0, 1}},
                                              {1, 1, 1}, {1, 1, 1}),
                    PostselectionError);
  }
}

TEST_CASE("predicate verdicts") {
  SUBCASE("quantum triangle distribution satisfies the predicate") {
    OutcomeDistribution d = OutcomeDistribution::zeros(3);
    for (std::uint32_t s : {0b000u, 0b011u, 0b101u, 0b110u}) d.probs[s] = 0.25;
    const PredicateVerdict verdict = check_predicate(d);
    CHECK(verdict.satisfied);
    CHECK(verdict.odd_violations.empty());
    CHECK(verdict.even_violations.empty());
  }
  SUBCASE("two-point mixtures miss even-parity strings") {
    OutcomeDistribution d = OutcomeDistribution::zeros(3);
    d.probs[0b000] = 0.5;
    d.probs[0b101] = 0.5;
    const PredicateVerdict verdict = check_predicate(d);
    CHECK_FALSE(verdict.satisfied);
    CHECK(verdict.odd_violations.empty());
    CHECK(verdict.even_violations == std::vector<std::uint32_t>{0b011, 0b110});
  }
  SUBCASE("uniform distribution leaks onto odd parity") {
    OutcomeDistribution d = OutcomeDistribution::zeros(3);
    for (double& p : d.probs) p = 0.125;
    const PredicateVerdict verdict = check_predicate(d);
    CHECK_FALSE(verdict.satisfied);
    CHECK(verdict.odd_violations ==
          std::vector<std::uint32_t>{0b001, 0b010, 0b100, 0b111});
  }
}

TEST_CASE("support-pattern enumeration proves triangle infeasibility") {
  const InfeasibilityReport report = predicate_infeasibility_proof(3);
  CHECK(report.parties == 3);
  CHECK(report.patterns_examined == 729);  // 3^6
  CHECK(report.infeasible);
  CHECK(report.feasible_patterns == 0);
  CHECK(report.examples.empty());
  // Patterns that null every odd outcome exist; none keeps all evens alive.
  CHECK(report.odd_killing_patterns > 0);
}

TEST_CASE("two parties admit perfect-correlation patterns") {
  const InfeasibilityReport report = predicate_infeasibility_proof(2);
  CHECK(report.patterns_examined == 81);  // 3^4
  CHECK_FALSE(report.infeasible);
  CHECK(report.feasible_patterns == 2);
  REQUIRE_FALSE(report.examples.empty());
  // Re-verify the first reported pattern by hand: flags must kill both odd
  // strings in both directions and keep both even strings alive somewhere.
  const SupportPattern& pattern = report.examples.front();
  auto killed = [&](const std::vector<ZeroFlag>& flags, std::uint32_t s) {
    for (int j = 0; j < 2; ++j) {
      const unsigned bit = bit_of(s, j, 2);
      if (flags[static_cast<std::size_t>(j)] ==
          (bit == 0 ? ZeroFlag::kOutcome0 : ZeroFlag::kOutcome1)) {
        return true;
      }
    }
    return false;
  };
  for (std::uint32_t odd : {0b01u, 0b10u}) {
    CHECK(killed(pattern.clockwise, odd));
    CHECK(killed(pattern.counterclockwise, odd));
  }
  for (std::uint32_t even : {0b00u, 0b11u}) {
    CHECK((!killed(pattern.clockwise, even) ||
           !killed(pattern.counterclockwise, even)));
  }
}

TEST_CASE("four parties remain infeasible") {
  const InfeasibilityReport report = predicate_infeasibility_proof(4);
  CHECK(report.patterns_examined == 6561);  // 3^8
  CHECK(report.infeasible);
}

TEST_CASE("enumeration bound is enforced") {
  CHECK_THROWS_AS(predicate_infeasibility_proof(7), std::invalid_argument);
  CHECK_THROWS_AS(predicate_infeasibility_proof(1), std::invalid_argument);
}

TEST_CASE("random classical networks never satisfy the predicate") {
  std::mt19937_64 rng(909090);
  std::uniform_real_distribution<double> uniform(0.0, 1.0);
  const int n = 3;
  for (int trial = 0; trial < 100000; ++trial) {
    ClassicalParams params;
    params.parties = n;
    params.gamma = uniform(rng);
    for (int j = 0; j < n; ++j) {
      params.p_zero.push_back(uniform(rng));
      params.q_zero.push_back(uniform(rng));
    }
    const OutcomeDistribution d = classical_distribution(params);
    CHECK_FALSE(check_predicate(d).satisfied);
  }
}

TEST_CASE("even-parity strings never differ in a single bit") {
  // The singleton-support argument behind the exact certificates.
  for (int n : {3, 4, 5}) {
    const std::uint32_t strings = 1u << n;
    for (std::uint32_t a = 0; a < strings; ++a) {
      if (parity(a) == 1) continue;
      for (std::uint32_t b = a + 1; b < strings; ++b) {
        if (parity(b) == 1) continue;
        CHECK(std::popcount(a ^ b) >= 2);
      }
    }
  }
}
