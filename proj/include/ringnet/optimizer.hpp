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

#include "ringnet/classical.hpp"
#include "ringnet/distribution.hpp"

namespace ringnet {

struct OptimizerOptions {
  /// Cap per local ascent; hitting it only lowers converged_fraction.
  std::uint32_t max_iterations = 10000;
  /// Projected-gradient norm below which an ascent counts as converged.
  double gradient_tol = 1e-8;
  /// Central finite-difference step.
  double fd_step = 1e-6;
  /// Worker threads; 0 picks the hardware concurrency. Restarts are
  /// independent and merged by restart index, so the thread count never
  /// changes the result.
  int threads = 0;
};

struct BoundResult {
  int parties = 0;
  double best_value = 0.0;
  ClassicalParams best_params;
  int restarts = 0;
  std::uint64_t iterations_total = 0;
  /// Fraction of local ascents (two per restart, one per sign of the
  /// objective) that reached gradient_tol before max_iterations.
  double converged_fraction = 0.0;
  std::uint64_t seed = 0;
};

/// Maximizes C_n over the classical model's (2n+1)-dimensional parameter box
/// (gamma, p_zero, q_zero) by multi-start projected gradient ascent with
/// central finite differences and backtracking line search. The witness's
/// absolute value is handled by ascending the signed pair-sum gap from both
/// signs and keeping the larger magnitude. Deterministic: every restart
/// derives its own generator from (seed, restart index), and reruns with the
/// same arguments reproduce the result bit for bit.
BoundResult maximize_classical_cn(int parties, int restarts,
                                  std::uint64_t seed,
                                  const OptimizerOptions& options = {});

/// Exhaustive evaluation of the same objective on the uniform grid with
/// `resolution` points per axis (including both box corners; odd resolutions
/// >= 3 include the midpoint 1/2). Independent brute-force check of
/// maximize_classical_cn; the grid maximum is a certified lower bound on the
/// true classical maximum. Restricted to n <= 3 and
/// resolution^(2n+1) <= 1e9.
double grid_oracle_cn(int parties, int resolution);

/// Exact support-structure verdict attached to a decomposition, independent
/// of the optimization path.
enum class SupportCertificate {
  /// Support has >= 3 atoms and is not confined to even-parity strings;
  /// the combinatorial argument does not apply.
  kNotApplicable,
  /// Support lies in the even-parity set with >= 3 atoms: any classical
  /// mixture whose support avoids odd-parity strings is a mixture of two
  /// point masses (a product support inside the even-parity set is a
  /// singleton, because flipping one bit flips parity), which covers at most
  /// two atoms. Certified non-classical.
  kInfeasibleEvenSupport,
  /// Support has <= 2 atoms; the explicit two-point-mass mixture
  /// reproduces the target. Certified classical.
  kFeasibleTwoAtoms,
};

struct DecompositionResult {
  bool feasible = false;
  /// Best-fit parameters, present iff feasible.
  std::optional<ClassicalParams> params;
  /// L2 distance between the target and the best classical fit found.
  double residual = 0.0;
  SupportCertificate certificate = SupportCertificate::kNotApplicable;
};

/// Least-squares fit of the classical model to `target` with the same
/// multi-start machinery (descent on the squared L2 distance). Feasible iff
/// the best residual is below tol. Supports of at most two atoms are also
/// reconstructed exactly, and even-parity-only supports of three or more
/// atoms are certified infeasible combinatorially; the certificate field
/// reports which case applied.
DecompositionResult decompose_as_classical(const OutcomeDistribution& target,
                                           int restarts, std::uint64_t seed,
                                           double tol = 1e-6,
                                           const OptimizerOptions& options = {});

}  // namespace ringnet
