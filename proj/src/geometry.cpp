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

#include "ringnet/geometry.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace ringnet {

namespace {

double roundtrip_error(const ClassicalParams& params, std::uint32_t bitstring) {
  const OutcomeDistribution dist = classical_distribution(params);
  double worst = 0.0;
  for (std::uint32_t idx = 0; idx < dist.probs.size(); ++idx) {
    const double expected = idx == bitstring ? 1.0 : 0.0;
    worst = std::max(worst, std::abs(dist.probs[idx] - expected));
  }
  return worst;
}

OutcomeDistribution half_half_mixture(int parties, std::uint32_t a,
                                      std::uint32_t b) {
  OutcomeDistribution dist = OutcomeDistribution::zeros(parties);
  dist.probs[a] = 0.5;
  dist.probs[b] = 0.5;
  return dist;
}

ClassicalParams half_half_params(int parties, std::uint32_t a,
                                 std::uint32_t b) {
  ClassicalParams params = vertex_membership(a, parties);
  params.gamma = 0.5;
  params.q_zero = vertex_membership(b, parties).p_zero;
  return params;
}

double l2_residual(const OutcomeDistribution& target,
                   const ClassicalParams& params) {
  const OutcomeDistribution fit = classical_distribution(params);
  double sq = 0.0;
  for (std::size_t i = 0; i < fit.probs.size(); ++i) {
    const double d = fit.probs[i] - target.probs[i];
    sq += d * d;
  }
  return std::sqrt(sq);
}

}  // namespace

ClassicalParams vertex_membership(std::uint32_t bitstring, int parties) {
  if (parties < 2) {
    throw std::invalid_argument("vertex certificates need at least 2 parties");
  }
  if (bitstring >= (std::uint32_t{1} << parties)) {
    throw std::invalid_argument("bitstring out of range for " +
                                std::to_string(parties) + " parties");
  }
  ClassicalParams params;
  params.parties = parties;
  params.gamma = 1.0;
  params.p_zero.resize(static_cast<std::size_t>(parties));
  for (int j = 0; j < parties; ++j) {
    params.p_zero[static_cast<std::size_t>(j)] =
        bit_of(bitstring, j, parties) ? 0.0 : 1.0;
  }
  params.q_zero = params.p_zero;
  return params;
}

ConvexityWitness nonconvexity_witness(int parties,
                                      const WitnessOptions& options) {
  if (parties < 3) {
    throw std::invalid_argument(
        "no non-convexity witness below 3 parties: the two-party classical "
        "set already reaches the quantum point");
  }
  if (parties > 16) {
    throw std::invalid_argument("witness construction supports parties <= 16");
  }
  if (!(options.lambda > 0.0 && options.lambda < 1.0)) {
    throw std::invalid_argument("lambda must lie strictly between 0 and 1");
  }

  // Four even-parity strings, pairwise distinct: the all-zero string and the
  // three two-bit patterns on the first three parties.
  const int shift = parties - 3;
  const std::uint32_t s1 = 0;
  const std::uint32_t s2 = 0b011u << shift;
  const std::uint32_t s3 = 0b101u << shift;
  const std::uint32_t s4 = 0b110u << shift;

  ConvexityWitness witness;
  witness.parties = parties;
  witness.lambda = options.lambda;
  witness.q1 = half_half_mixture(parties, s1, s2);
  witness.q2 = half_half_mixture(parties, s3, s4);
  witness.q1_params = half_half_params(parties, s1, s2);
  witness.q2_params = half_half_params(parties, s3, s4);
  witness.q1_residual = l2_residual(witness.q1, witness.q1_params);
  witness.q2_residual = l2_residual(witness.q2, witness.q2_params);

  witness.midpoint = OutcomeDistribution::zeros(parties);
  for (std::size_t i = 0; i < witness.midpoint.probs.size(); ++i) {
    witness.midpoint.probs[i] = options.lambda * witness.q1.probs[i] +
                                (1.0 - options.lambda) * witness.q2.probs[i];
  }

  witness.midpoint_result = decompose_as_classical(
      witness.midpoint, options.restarts, options.seed, options.tol);

  if (witness.q1_residual > 1e-9 || witness.q2_residual > 1e-9 ||
      witness.midpoint_result.feasible) {
    throw std::logic_error("non-convexity witness failed re-verification");
  }
  return witness;
}

SeparationReport no_separating_hyperplane_report(int parties,
                                                 const WitnessOptions& options) {
  if (parties < 2 || parties > 16) {
    throw std::invalid_argument("separation report supports 2 <= parties <= 16");
  }
  SeparationReport report;
  report.parties = parties;
  const std::uint32_t vertices = std::uint32_t{1} << parties;
  report.vertices.reserve(vertices);
  for (std::uint32_t s = 0; s < vertices; ++s) {
    VertexCertificate cert;
    cert.bitstring = s;
    cert.params = vertex_membership(s, parties);
    cert.max_abs_error = roundtrip_error(cert.params, s);
    report.vertices.push_back(std::move(cert));
  }
  report.witness_applicable = parties >= 3;
  if (report.witness_applicable) {
    report.witness = nonconvexity_witness(parties, options);
  }
  return report;
}

}  // namespace ringnet
