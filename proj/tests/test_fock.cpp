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

#include "ringnet/fock.hpp"

#include <doctest.h>

#include <cmath>
#include <complex>
#include <cstdlib>

#include "ringnet/distribution.hpp"
#include "ringnet/errors.hpp"
#include "ring_expansion_oracle.hpp"

using namespace ringnet;

namespace {

OccupationVector occ_of(std::initializer_list<int> counts) {
  OccupationVector occ;
  for (int c : counts) occ.push_back(static_cast<std::uint8_t>(c));
  return occ;
}

FockState simulate_bs_state(int parties) {
  return apply_transform(build_ring_input(parties),
                         ring_beam_splitter_transform(parties));
}

LinearModeTransform random_unitary(int dim, ModeBasis basis) {
  Eigen::MatrixXcd raw = Eigen::MatrixXcd::Random(dim, dim);
  Eigen::HouseholderQR<Eigen::MatrixXcd> qr(raw);
  Eigen::MatrixXcd q = qr.householderQ();
  return LinearModeTransform(std::move(q), basis, basis);
}

}  // namespace

TEST_CASE("ring input state is the uniform arm superposition") {
  const FockState state = build_ring_input(3);
  CHECK(state.basis == ModeBasis::kSourceArms);
  CHECK(state.amplitudes.size() == 8);
  const double expected = std::pow(0.5, 1.5);
  for (const auto& [occ, amp] : state.amplitudes) {
    CHECK(std::abs(amp.real() - expected) < 1e-15);
    CHECK(amp.imag() == 0.0);
  }

  const FockState pair = build_ring_input(2);
  CHECK(pair.amplitudes.size() == 4);
  for (const auto& [occ, amp] : pair.amplitudes) {
    CHECK(std::abs(amp.real() - 0.5) < 1e-15);
  }
}

TEST_CASE("ring input rejects fewer than two parties") {
  CHECK_THROWS_AS(build_ring_input(1), std::invalid_argument);
  CHECK_THROWS_AS(build_ring_input(0), std::invalid_argument);
  CHECK_THROWS_AS(build_ring_input(-4), std::invalid_argument);
}

TEST_CASE("ring input is normalized for all desk sizes") {
  for (int n = 2; n <= 7; ++n) {
    CHECK(std::abs(build_ring_input(n).squared_norm() - 1.0) < 1e-12);
  }
}

TEST_CASE("beam-splitter bank is unitary") {
  for (int n = 2; n <= 7; ++n) {
    CHECK(ring_beam_splitter_transform(n).unitarity_error() < 1e-12);
  }
}

TEST_CASE("three-party beam-splitter state matches the exact expansion") {
  const FockState state = simulate_bs_state(3);
  const auto oracle = testing::ExactRingExpansion::expand(3);
  CHECK(oracle.norm_numerator() == 64);

  CHECK(state.amplitudes.size() == oracle.monomials.size());
  CHECK(state.amplitudes.size() == 28);
  for (const auto& [occ, coef] : oracle.monomials) {
    OccupationVector key(occ.begin(), occ.end());
    const auto it = state.amplitudes.find(key);
    REQUIRE(it != state.amplitudes.end());
    // Fock amplitude = polynomial coefficient times sqrt(prod occ!).
    double fact = 1.0;
    for (int c : occ) {
      for (int k = 2; k <= c; ++k) fact *= k;
    }
    CHECK(std::abs(it->second.real() - coef * std::sqrt(fact) / 8.0) < 1e-13);
    CHECK(std::abs(it->second.imag()) < 1e-13);
  }

  // One-particle-per-station component before renormalization.
  double selected_sq = 0.0;
  for (const auto& [occ, amp] : state.amplitudes) {
    bool selected = true;
    for (int j = 0; j < 3; ++j) {
      if (occ[static_cast<std::size_t>(2 * j)] +
              occ[static_cast<std::size_t>(2 * j + 1)] !=
          1) {
        selected = false;
      }
    }
    if (selected) selected_sq += std::norm(amp);
  }
  CHECK(std::abs(selected_sq - 0.25) < 1e-12);
}

TEST_CASE("identity transform leaves states untouched") {
  const FockState state = build_ring_input(4);
  const FockState same = apply_transform(
      state, LinearModeTransform::identity(8, ModeBasis::kSourceArms));
  REQUIRE(same.amplitudes.size() == state.amplitudes.size());
  for (const auto& [occ, amp] : state.amplitudes) {
    CHECK(std::abs(same.amplitudes.at(occ) - amp) < 1e-15);
  }
}

TEST_CASE("vacuum is invariant under any mode unitary") {
  FockState vacuum{ModeLayout(3), ModeBasis::kSourceArms, {}, true};
  vacuum.amplitudes.emplace(OccupationVector(6, 0), 1.0);
  std::srand(7);
  const FockState mapped =
      apply_transform(vacuum, random_unitary(6, ModeBasis::kSourceArms));
  REQUIRE(mapped.amplitudes.size() == 1);
  CHECK(std::abs(mapped.amplitudes.begin()->second - 1.0) < 1e-15);
  CHECK(mapped.amplitudes.begin()->first == OccupationVector(6, 0));
}

TEST_CASE("transforms preserve norm and particle number") {
  std::srand(99);
  for (int n : {2, 3, 4}) {
    const FockState state = build_ring_input(n);
    const FockState mapped = apply_transform(
        state, random_unitary(2 * n, ModeBasis::kSourceArms));
    CHECK(std::abs(mapped.squared_norm() - 1.0) < 1e-12);
    for (const auto& [occ, amp] : mapped.amplitudes) {
      int total = 0;
      for (std::uint8_t c : occ) total += c;
      CHECK(total == n);
    }
  }
}

TEST_CASE("transform application rejects mismatched inputs") {
  const FockState state = build_ring_input(3);
  CHECK_THROWS_AS(
      apply_transform(state,
                      LinearModeTransform::identity(4, ModeBasis::kSourceArms)),
      std::invalid_argument);
  CHECK_THROWS_AS(
      apply_transform(state, LinearModeTransform::identity(
                                 6, ModeBasis::kDetectorPorts)),
      std::invalid_argument);
}

TEST_CASE("non-unitary matrices are rejected") {
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Identity(4, 4);
  m(0, 0) = 1.5;
  CHECK_THROWS_AS(LinearModeTransform(std::move(m), ModeBasis::kSourceArms,
                                      ModeBasis::kSourceArms),
                  std::invalid_argument);
}

TEST_CASE("triangle post-selection reproduces the two-matching state") {
  const auto outcome = postselect_single_per_station(simulate_bs_state(3));
  CHECK(std::abs(outcome.success_probability - 0.25) < 1e-12);

  // 1/2 ( a_l(b_l c_l + b_r c_r) + a_r(b_r c_l + b_l c_r) ), modes ordered
  // (a_l, a_r, b_l, b_r, c_l, c_r).
  const FockState& state = outcome.state;
  REQUIRE(state.amplitudes.size() == 4);
  for (const auto& occ : {occ_of({1, 0, 1, 0, 1, 0}), occ_of({1, 0, 0, 1, 0, 1}),
                          occ_of({0, 1, 0, 1, 1, 0}), occ_of({0, 1, 1, 0, 0, 1})}) {
    REQUIRE(state.amplitudes.count(occ) == 1);
    CHECK(std::abs(state.amplitudes.at(occ) - 0.5) < 1e-12);
  }
}

TEST_CASE("post-selection succeeds with probability 2^(1-n)") {
  for (int n = 2; n <= 7; ++n) {
    const auto outcome = postselect_single_per_station(simulate_bs_state(n));
    const auto oracle = testing::ExactRingExpansion::expand(n);
    const double expected = std::pow(2.0, 1 - n);
    CHECK(std::abs(outcome.success_probability - expected) < 1e-12);
    CHECK(std::abs(oracle.postselection_probability() - expected) < 1e-15);
    CHECK(std::abs(outcome.success_probability -
                   oracle.postselection_probability()) < 1e-12);
  }
}

TEST_CASE("empty projection is a distinct error") {
  FockState both_left{ModeLayout(2), ModeBasis::kDetectorPorts, {}, true};
  both_left.amplitudes.emplace(occ_of({2, 0, 0, 0}), 1.0);
  CHECK_THROWS_AS(postselect_single_per_station(both_left),
                  PostselectionError);
}

TEST_CASE("post-selection validates its input") {
  FockState unnormalized{ModeLayout(2), ModeBasis::kDetectorPorts, {}, false};
  unnormalized.amplitudes.emplace(occ_of({1, 0, 1, 0}), 0.5);
  CHECK_THROWS_AS(postselect_single_per_station(unnormalized),
                  std::invalid_argument);
  CHECK_THROWS_AS(postselect_single_per_station(build_ring_input(2)),
                  std::invalid_argument);
}

TEST_CASE("ring outcome distributions are uniform on even parity") {
  SUBCASE("triangle") {
    const auto outcome = postselect_single_per_station(simulate_bs_state(3));
    const OutcomeDistribution dist = outcome_distribution(outcome.state);
    for (std::uint32_t s : {0b000u, 0b011u, 0b101u, 0b110u}) {
      CHECK(std::abs(dist.probs[s] - 0.25) < 1e-12);
    }
    for (std::uint32_t s : {0b001u, 0b010u, 0b100u, 0b111u}) {
      CHECK(dist.probs[s] < 1e-12);
    }
  }
  SUBCASE("pair correlates perfectly") {
    const auto outcome = postselect_single_per_station(simulate_bs_state(2));
    const OutcomeDistribution dist = outcome_distribution(outcome.state);
    CHECK(std::abs(dist.probs[0b00] - 0.5) < 1e-12);
    CHECK(std::abs(dist.probs[0b11] - 0.5) < 1e-12);
    CHECK(dist.probs[0b01] < 1e-12);
    CHECK(dist.probs[0b10] < 1e-12);
  }
  SUBCASE("all desk sizes") {
    for (int n = 2; n <= 7; ++n) {
      const auto outcome = postselect_single_per_station(simulate_bs_state(n));
      const OutcomeDistribution dist = outcome_distribution(outcome.state);
      const double uniform = std::pow(2.0, 1 - n);
      for (std::uint32_t s = 0; s < dist.probs.size(); ++s) {
        if (parity(s) == 0) {
          CHECK(std::abs(dist.probs[s] - uniform) < 1e-12);
        } else {
          CHECK(dist.probs[s] < 1e-12);
        }
      }
    }
  }
}

TEST_CASE("two-party post-selected amplitudes have equal moduli") {
  const auto outcome = postselect_single_per_station(simulate_bs_state(2));
  const FockState& state = outcome.state;
  REQUIRE(state.amplitudes.size() == 2);
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  CHECK(std::abs(std::abs(state.amplitudes.at(occ_of({1, 0, 1, 0}))) -
                 inv_sqrt2) < 1e-12);
  CHECK(std::abs(std::abs(state.amplitudes.at(occ_of({0, 1, 0, 1}))) -
                 inv_sqrt2) < 1e-12);
}

TEST_CASE("outcome distribution rejects states outside the subspace") {
  FockState crowded{ModeLayout(2), ModeBasis::kDetectorPorts, {}, true};
  crowded.amplitudes.emplace(occ_of({2, 0, 0, 0}), 1.0);
  CHECK_THROWS_AS(outcome_distribution(crowded), std::invalid_argument);
}

TEST_CASE("rotating station labels rotates the distribution") {
  // Asymmetric state in the post-selected subspace, complex phases included.
  FockState state{ModeLayout(3), ModeBasis::kDetectorPorts, {}, true};
  state.amplitudes.emplace(occ_of({1, 0, 1, 0, 1, 0}),
                           std::complex<double>(std::sqrt(0.55), 0.0));
  state.amplitudes.emplace(occ_of({0, 1, 0, 1, 1, 0}),
                           std::complex<double>(0.0, std::sqrt(0.30)));
  state.amplitudes.emplace(occ_of({0, 1, 1, 0, 0, 1}),
                           std::complex<double>(-std::sqrt(0.15), 0.0));

  // Station j's ports map to station j+1's.
  Eigen::MatrixXcd perm = Eigen::MatrixXcd::Zero(6, 6);
  for (int j = 0; j < 3; ++j) {
    const int next = (j + 1) % 3;
    perm(2 * next, 2 * j) = 1.0;
    perm(2 * next + 1, 2 * j + 1) = 1.0;
  }
  const FockState rotated = apply_transform(
      state, LinearModeTransform(std::move(perm), ModeBasis::kDetectorPorts,
                                 ModeBasis::kDetectorPorts));

  const OutcomeDistribution before = outcome_distribution(state);
  const OutcomeDistribution after = outcome_distribution(rotated);
  for (std::uint32_t s = 0; s < 8; ++s) {
    // Party j's bit moves to party j+1.
    const std::uint32_t rotated_string = ((s >> 1) | (s << 2)) & 0b111u;
    CHECK(std::abs(after.probs[rotated_string] - before.probs[s]) < 1e-12);
  }
}
