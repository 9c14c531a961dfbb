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

#include <cmath>
#include <stdexcept>
#include <string>

#include "ringnet/errors.hpp"

namespace ringnet {

namespace {

double factorial(int k) {
  double f = 1.0;
  for (int i = 2; i <= k; ++i) f *= i;
  return f;
}

double occupation_factorial_product(const OccupationVector& occ) {
  double f = 1.0;
  for (std::uint8_t c : occ) f *= factorial(c);
  return f;
}

int particle_count(const OccupationVector& occ) {
  int n = 0;
  for (std::uint8_t c : occ) n += c;
  return n;
}

}  // namespace

ModeLayout::ModeLayout(int parties) : parties_(parties) {
  if (parties < 2) {
    throw std::invalid_argument("ring network needs at least 2 parties, got " +
                                std::to_string(parties));
  }
}

double FockState::squared_norm() const {
  double s = 0.0;
  for (const auto& [occ, amp] : amplitudes) s += std::norm(amp);
  return s;
}

int FockState::total_particles() const {
  if (amplitudes.empty()) return 0;
  return particle_count(amplitudes.begin()->first);
}

LinearModeTransform::LinearModeTransform(Eigen::MatrixXcd matrix,
                                         ModeBasis input_basis,
                                         ModeBasis output_basis)
    : matrix_(std::move(matrix)), input_(input_basis), output_(output_basis) {
  if (matrix_.rows() != matrix_.cols() || matrix_.rows() == 0) {
    throw std::invalid_argument("mode transform must be a nonempty square matrix");
  }
  if (unitarity_error() > 1e-12) {
    throw std::invalid_argument("mode transform is not unitary within 1e-12");
  }
}

LinearModeTransform LinearModeTransform::identity(int dimension,
                                                  ModeBasis basis) {
  return LinearModeTransform(Eigen::MatrixXcd::Identity(dimension, dimension),
                             basis, basis);
}

double LinearModeTransform::unitarity_error() const {
  Eigen::MatrixXcd gram = matrix_.adjoint() * matrix_;
  gram -= Eigen::MatrixXcd::Identity(matrix_.rows(), matrix_.cols());
  return gram.cwiseAbs().maxCoeff();
}

FockState build_ring_input(int parties) {
  ModeLayout layout(parties);
  FockState state{layout, ModeBasis::kSourceArms, {}, true};
  const double amp = std::pow(2.0, -0.5 * parties);
  const std::uint32_t configs = 1u << parties;
  for (std::uint32_t mask = 0; mask < configs; ++mask) {
    OccupationVector occ(static_cast<std::size_t>(layout.mode_count()), 0);
    for (int i = 0; i < parties; ++i) {
      int arm = ((mask >> i) & 1u) ? layout.arm_to_next_station(i)
                                   : layout.arm_to_own_station(i);
      occ[static_cast<std::size_t>(arm)] = 1;
    }
    state.amplitudes.emplace(std::move(occ), std::complex<double>(amp, 0.0));
  }
  return state;
}

LinearModeTransform ring_beam_splitter_transform(int parties) {
  ModeLayout layout(parties);
  const int dim = layout.mode_count();
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(dim, dim);
  for (int i = 0; i < parties; ++i) {
    // Own arm enters station i with the symmetric image.
    int own = layout.arm_to_own_station(i);
    m(layout.left_port(i), own) = inv_sqrt2;
    m(layout.right_port(i), own) = inv_sqrt2;
    // The arm toward the next station is that station's "previous source"
    // input and picks up the relative minus sign.
    int next_station = (i + 1) % parties;
    int fwd = layout.arm_to_next_station(i);
    m(layout.left_port(next_station), fwd) = inv_sqrt2;
    m(layout.right_port(next_station), fwd) = -inv_sqrt2;
  }
  return LinearModeTransform(std::move(m), ModeBasis::kSourceArms,
                             ModeBasis::kDetectorPorts);
}

FockState apply_transform(const FockState& state,
                          const LinearModeTransform& t) {
  const int dim = state.layout.mode_count();
  if (dim != t.dimension()) {
    throw std::invalid_argument("state has " + std::to_string(dim) +
                                " modes but transform expects " +
                                std::to_string(t.dimension()));
  }
  if (state.basis != t.input_basis()) {
    throw std::invalid_argument("state mode basis does not match transform input basis");
  }
  const Eigen::MatrixXcd& m = t.matrix();

  std::map<OccupationVector, std::complex<double>> out;
  std::map<OccupationVector, std::complex<double>> partial, next;
  for (const auto& [occ, amp] : state.amplitudes) {
    partial.clear();
    partial.emplace(OccupationVector(static_cast<std::size_t>(dim), 0),
                    amp / std::sqrt(occupation_factorial_product(occ)));
    // One substitution per particle; creation operators commute, so the
    // expansion is a plain multiset product.
    for (int k = 0; k < dim; ++k) {
      for (int rep = 0; rep < occ[static_cast<std::size_t>(k)]; ++rep) {
        next.clear();
        for (const auto& [mono, coef] : partial) {
          for (int j = 0; j < dim; ++j) {
            const std::complex<double> w = m(j, k);
            if (std::norm(w) == 0.0) continue;
            OccupationVector grown = mono;
            ++grown[static_cast<std::size_t>(j)];
            next[std::move(grown)] += coef * w;
          }
        }
        partial.swap(next);
      }
    }
    for (const auto& [mono, coef] : partial) {
      out[mono] += coef * std::sqrt(occupation_factorial_product(mono));
    }
  }

  FockState result{state.layout, t.output_basis(), {}, state.normalized};
  for (auto& [mono, amp] : out) {
    if (std::abs(amp) >= kAmplitudePruneThreshold) {
      result.amplitudes.emplace(mono, amp);
    }
  }
  return result;
}

PostselectionOutcome postselect_single_per_station(const FockState& state) {
  if (state.basis != ModeBasis::kDetectorPorts) {
    throw std::invalid_argument("post-selection acts on detector-port states");
  }
  if (std::abs(state.squared_norm() - 1.0) > 1e-9) {
    throw std::invalid_argument("post-selection requires a normalized state");
  }
  const ModeLayout& layout = state.layout;
  FockState projected{layout, ModeBasis::kDetectorPorts, {}, false};
  double success = 0.0;
  for (const auto& [occ, amp] : state.amplitudes) {
    bool keep = true;
    for (int j = 0; j < layout.parties(); ++j) {
      int station_count = occ[static_cast<std::size_t>(layout.left_port(j))] +
                          occ[static_cast<std::size_t>(layout.right_port(j))];
      if (station_count != 1) {
        keep = false;
        break;
      }
    }
    if (keep) {
      projected.amplitudes.emplace(occ, amp);
      success += std::norm(amp);
    }
  }
  if (projected.amplitudes.empty()) {
    throw PostselectionError(
        "one-particle-per-station projection is the zero vector");
  }
  const double scale = 1.0 / std::sqrt(success);
  for (auto& [occ, amp] : projected.amplitudes) amp *= scale;
  projected.normalized = true;
  return PostselectionOutcome{success, std::move(projected)};
}

OutcomeDistribution outcome_distribution(const FockState& state) {
  if (state.basis != ModeBasis::kDetectorPorts) {
    throw std::invalid_argument("outcome statistics need a detector-port state");
  }
  if (std::abs(state.squared_norm() - 1.0) > 1e-9) {
    throw std::invalid_argument("outcome statistics need a normalized state");
  }
  const ModeLayout& layout = state.layout;
  const int n = layout.parties();
  OutcomeDistribution dist = OutcomeDistribution::zeros(n);
  for (const auto& [occ, amp] : state.amplitudes) {
    std::uint32_t bits = 0;
    for (int j = 0; j < n; ++j) {
      int left = occ[static_cast<std::size_t>(layout.left_port(j))];
      int right = occ[static_cast<std::size_t>(layout.right_port(j))];
      if (left + right != 1) {
        throw std::invalid_argument(
            "state lies outside the one-particle-per-station subspace");
      }
      bits = (bits << 1) | static_cast<std::uint32_t>(right);
    }
    dist.probs[bits] += std::norm(amp);
  }
  dist.validate(1e-9);
  return dist;
}

}  // namespace ringnet
