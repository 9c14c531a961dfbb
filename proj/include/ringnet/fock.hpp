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

#include <Eigen/Dense>
#include <complex>
#include <cstdint>
#include <map>
#include <vector>

#include "ringnet/distribution.hpp"

namespace ringnet {

/// Stored amplitudes with modulus below this are dropped after collection.
/// Well below every test tolerance in the project.
inline constexpr double kAmplitudePruneThreshold = 1e-14;

/// Which half of the ring a mode index refers to: the 2n arms leaving the
/// sources, or the 2n detector ports behind the station beam splitters.
enum class ModeBasis { kSourceArms, kDetectorPorts };

/// Geometry of an n-party ring: n single-particle sources on the edges and n
/// detection stations on the vertices. Source i has one arm toward station i
/// and one toward station i+1 (cyclically), so each station receives exactly
/// two arms: its own source's and the previous source's. Behind the beam
/// splitter, station j exposes a left and a right detector port.
///
/// Mode indexing is fixed so states on either side use 2n modes:
///   source side:   arm (i -> station i) = 2i, arm (i -> station i+1) = 2i+1
///   detector side: left port of station j = 2j, right port = 2j+1
class ModeLayout {
 public:
  /// Throws std::invalid_argument for parties < 2.
  explicit ModeLayout(int parties);

  int parties() const { return parties_; }
  int mode_count() const { return 2 * parties_; }

  int arm_to_own_station(int source) const { return 2 * source; }
  int arm_to_next_station(int source) const { return 2 * source + 1; }
  int left_port(int station) const { return 2 * station; }
  int right_port(int station) const { return 2 * station + 1; }

  /// Station fed by a source-side arm mode.
  int station_of_arm(int arm_mode) const {
    int source = arm_mode / 2;
    return (arm_mode % 2 == 0) ? source : (source + 1) % parties_;
  }

 private:
  int parties_;
};

/// Occupation numbers, one entry per mode of a ModeLayout.
using OccupationVector = std::vector<std::uint8_t>;

/// Sparse bosonic state: complex amplitude per occupation vector. All stored
/// occupation vectors carry the same total particle count, and amplitudes
/// below kAmplitudePruneThreshold are never stored.
struct FockState {
  ModeLayout layout;
  ModeBasis basis = ModeBasis::kSourceArms;
  std::map<OccupationVector, std::complex<double>> amplitudes;
  bool normalized = false;

  /// Sum of |amplitude|^2.
  double squared_norm() const;

  /// Total particle count shared by all stored occupation vectors;
  /// 0 for a vacuum or empty state.
  int total_particles() const;
};

/// Unitary map between the two 2n-mode bases. Column k holds the image of
/// creation operator k: a_k^dag -> sum_j matrix(j, k) b_j^dag.
class LinearModeTransform {
 public:
  /// Throws std::invalid_argument unless the matrix is square and unitary
  /// within 1e-12 per entry.
  LinearModeTransform(Eigen::MatrixXcd matrix, ModeBasis input_basis,
                      ModeBasis output_basis);

  static LinearModeTransform identity(int dimension, ModeBasis basis);

  const Eigen::MatrixXcd& matrix() const { return matrix_; }
  int dimension() const { return static_cast<int>(matrix_.rows()); }
  ModeBasis input_basis() const { return input_; }
  ModeBasis output_basis() const { return output_; }

  /// Largest entrywise deviation of T^dag T from the identity.
  double unitarity_error() const;

 private:
  Eigen::MatrixXcd matrix_;
  ModeBasis input_;
  ModeBasis output_;
};

/// Product state of the n ring sources, each particle in an equal
/// superposition of its two arms: amplitude (1/sqrt2)^n on each of the 2^n
/// single-occupancy arm patterns. Throws std::invalid_argument for n < 2.
FockState build_ring_input(int parties);

/// The 50/50 beam-splitter bank of the ring: at station j, the arm arriving
/// from the previous source (j-1, cyclically) maps to (left - right)/sqrt2
/// and the arm from its own source j to (left + right)/sqrt2.
LinearModeTransform ring_beam_splitter_transform(int parties);

/// Homomorphic action of a mode unitary: every creation operator in the
/// polynomial expansion of `state` is substituted by its image under `t` and
/// amplitudes are collected per occupation vector. Preserves the norm and the
/// total particle count. Throws std::invalid_argument on dimension or basis
/// mismatch.
FockState apply_transform(const FockState& state, const LinearModeTransform& t);

struct PostselectionOutcome {
  double success_probability;
  FockState state;  // renormalized projection
};

/// Projects onto the subspace with exactly one particle behind each station's
/// beam splitter and renormalizes. Requires a normalized state on detector
/// ports. Throws PostselectionError when the projection is the zero vector.
PostselectionOutcome postselect_single_per_station(const FockState& state);

/// Detection statistics of a normalized one-particle-per-station state:
/// p(a_1..a_n) is the squared amplitude of the occupation vector whose
/// station j holds its particle in the left port if a_j = 0 and in the right
/// port if a_j = 1. Throws std::invalid_argument outside that subspace.
OutcomeDistribution outcome_distribution(const FockState& state);

}  // namespace ringnet
