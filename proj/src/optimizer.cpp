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

#include "ringnet/optimizer.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <functional>
#include <random>
#include <stdexcept>
#include <thread>
#include <vector>

#include "ringnet/witness.hpp"

namespace ringnet {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ull;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
  return x ^ (x >> 31);
}

std::uint64_t substream_seed(std::uint64_t seed, std::uint64_t index) {
  return splitmix64(seed ^ splitmix64(index + 1));
}

double clamp_unit(double v) { return std::clamp(v, 0.0, 1.0); }

using Objective = std::function<double(const std::vector<double>&)>;

struct LocalRun {
  double value = 0.0;
  std::vector<double> x;
  std::uint32_t iterations = 0;
  bool converged = false;
};

// Projected gradient ascent on [0,1]^d with central finite differences
// (clamped at the box) and Armijo backtracking on the projected step.
// A step size below 1e-12 with no accepted ascent counts as stationary.
LocalRun ascend(const Objective& f, std::vector<double> x,
                const OptimizerOptions& opt) {
  const std::size_t d = x.size();
  std::vector<double> grad(d), trial(d);
  double fx = f(x);
  LocalRun run;
  for (std::uint32_t it = 1; it <= opt.max_iterations; ++it) {
    run.iterations = it;
    for (std::size_t k = 0; k < d; ++k) {
      const double xk = x[k];
      const double hi = std::min(1.0, xk + opt.fd_step);
      const double lo = std::max(0.0, xk - opt.fd_step);
      x[k] = hi;
      const double fp = f(x);
      x[k] = lo;
      const double fm = f(x);
      x[k] = xk;
      grad[k] = (fp - fm) / (hi - lo);
    }

    double stationarity_sq = 0.0;
    for (std::size_t k = 0; k < d; ++k) {
      const double moved = clamp_unit(x[k] + grad[k]) - x[k];
      stationarity_sq += moved * moved;
    }
    if (std::sqrt(stationarity_sq) < opt.gradient_tol) {
      run.converged = true;
      break;
    }

    double step = 1.0;
    bool accepted = false;
    while (step > 1e-12) {
      double directional = 0.0;
      for (std::size_t k = 0; k < d; ++k) {
        trial[k] = clamp_unit(x[k] + step * grad[k]);
        directional += grad[k] * (trial[k] - x[k]);
      }
      const double ft = f(trial);
      const bool sufficient = directional > 0.0
                                  ? ft >= fx + 1e-4 * directional
                                  : ft > fx;
      if (sufficient) {
        x.swap(trial);
        fx = ft;
        accepted = true;
        break;
      }
      step *= 0.5;
    }
    if (!accepted) {
      run.converged = true;
      break;
    }
  }
  run.value = fx;
  run.x = std::move(x);
  return run;
}

struct RestartOutcome {
  double score = 0.0;  // quantity being maximized across restarts
  std::vector<double> x;
  std::uint64_t iterations = 0;
  int converged_runs = 0;
  int total_runs = 0;
};

// Runs `restarts` independent jobs, possibly in parallel, and reduces them
// by restart index so the merge is deterministic.
RestartOutcome multistart(
    int restarts, int threads,
    const std::function<RestartOutcome(int)>& run_restart) {
  std::vector<RestartOutcome> outcomes(static_cast<std::size_t>(restarts));
  int workers = threads > 0
                    ? threads
                    : static_cast<int>(std::thread::hardware_concurrency());
  workers = std::clamp(workers, 1, restarts);
  if (workers == 1) {
    for (int i = 0; i < restarts; ++i) {
      outcomes[static_cast<std::size_t>(i)] = run_restart(i);
    }
  } else {
    std::atomic<int> next{0};
    auto worker = [&] {
      for (int i = next.fetch_add(1); i < restarts; i = next.fetch_add(1)) {
        outcomes[static_cast<std::size_t>(i)] = run_restart(i);
      }
    };
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(workers));
    for (int w = 0; w < workers; ++w) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }

  RestartOutcome best = outcomes.front();
  std::uint64_t iterations = 0;
  int converged = 0;
  int total = 0;
  for (const auto& o : outcomes) {
    iterations += o.iterations;
    converged += o.converged_runs;
    total += o.total_runs;
    // Strict comparison: the first restart reaching the best value wins.
    if (o.score > best.score) best = o;
  }
  best.iterations = iterations;
  best.converged_runs = converged;
  best.total_runs = total;
  return best;
}

std::vector<double> random_interior_start(std::mt19937_64& rng,
                                          std::size_t dimension) {
  // Corners are flat for the finite-difference gradient; start inside.
  std::uniform_real_distribution<double> interior(0.01, 0.99);
  std::vector<double> x(dimension);
  for (double& v : x) v = interior(rng);
  return x;
}

ClassicalParams params_from_point(int parties, const std::vector<double>& x) {
  ClassicalParams params;
  params.parties = parties;
  params.gamma = x[0];
  params.p_zero.assign(x.begin() + 1, x.begin() + 1 + parties);
  params.q_zero.assign(x.begin() + 1 + parties, x.end());
  return params;
}

// Signed even-minus-odd pair-sum gap of the classical model at a parameter
// point, with reusable scratch for the distribution.
class GapEvaluator {
 public:
  explicit GapEvaluator(int parties)
      : parties_(parties), dist_(std::size_t{1} << parties) {}

  double operator()(const std::vector<double>& x) {
    const std::size_t n = static_cast<std::size_t>(parties_);
    classical_distribution_into(
        parties_, x[0], std::span<const double>(x.data() + 1, n),
        std::span<const double>(x.data() + 1 + n, n), dist_);
    return pair_sum_gap(dist_);
  }

 private:
  int parties_;
  std::vector<double> dist_;
};

}  // namespace

BoundResult maximize_classical_cn(int parties, int restarts,
                                  std::uint64_t seed,
                                  const OptimizerOptions& options) {
  if (parties < 2 || parties > 16) {
    throw std::invalid_argument("classical bound supports 2 <= parties <= 16");
  }
  if (restarts < 1) {
    throw std::invalid_argument("need at least one restart");
  }
  const std::size_t dimension = static_cast<std::size_t>(2 * parties + 1);

  auto run_restart = [&](int index) {
    std::mt19937_64 rng(substream_seed(seed, static_cast<std::uint64_t>(index)));
    const std::vector<double> x0 = random_interior_start(rng, dimension);

    GapEvaluator gap(parties);
    RestartOutcome outcome;
    outcome.total_runs = 2;
    // |even - odd| has a kink at zero; ascend the signed gap from both
    // sides and keep the larger magnitude (plus sign wins ties).
    for (double sign : {1.0, -1.0}) {
      Objective f = [&gap, sign](const std::vector<double>& x) {
        return sign * gap(x);
      };
      LocalRun run = ascend(f, x0, options);
      outcome.iterations += run.iterations;
      if (run.converged) ++outcome.converged_runs;
      const double magnitude = std::abs(gap(run.x));
      if (magnitude > outcome.score || outcome.x.empty()) {
        outcome.score = magnitude;
        outcome.x = std::move(run.x);
      }
    }
    return outcome;
  };

  RestartOutcome best = multistart(restarts, options.threads, run_restart);

  BoundResult result;
  result.parties = parties;
  result.best_value = best.score;
  result.best_params = params_from_point(parties, best.x);
  result.restarts = restarts;
  result.iterations_total = best.iterations;
  result.converged_fraction =
      best.total_runs > 0
          ? static_cast<double>(best.converged_runs) / best.total_runs
          : 0.0;
  result.seed = seed;
  return result;
}

double grid_oracle_cn(int parties, int resolution) {
  if (parties < 2 || parties > 3) {
    throw std::invalid_argument("grid oracle is restricted to 2 or 3 parties");
  }
  if (resolution < 2) {
    throw std::invalid_argument("grid needs at least the two box corners");
  }
  const int dimension = 2 * parties + 1;
  const double points = std::pow(static_cast<double>(resolution), dimension);
  if (points > 1e9) {
    throw std::invalid_argument("grid budget exceeded: resolution^" +
                                std::to_string(dimension) + " > 1e9");
  }

  std::vector<double> axis(static_cast<std::size_t>(resolution));
  for (int k = 0; k < resolution; ++k) {
    axis[static_cast<std::size_t>(k)] =
        static_cast<double>(k) / static_cast<double>(resolution - 1);
  }

  GapEvaluator gap(parties);
  std::vector<int> counter(static_cast<std::size_t>(dimension), 0);
  std::vector<double> x(static_cast<std::size_t>(dimension), axis[0]);
  double best = 0.0;
  while (true) {
    const double value = std::abs(gap(x));
    if (value > best) best = value;

    std::size_t pos = 0;
    while (pos < counter.size()) {
      if (++counter[pos] < resolution) {
        x[pos] = axis[static_cast<std::size_t>(counter[pos])];
        break;
      }
      counter[pos] = 0;
      x[pos] = axis[0];
      ++pos;
    }
    if (pos == counter.size()) break;
  }
  return best;
}

namespace {

std::vector<std::uint32_t> support_atoms(const OutcomeDistribution& target,
                                         double eps) {
  std::vector<std::uint32_t> atoms;
  for (std::uint32_t idx = 0; idx < target.probs.size(); ++idx) {
    if (target.probs[idx] > eps) atoms.push_back(idx);
  }
  return atoms;
}

std::vector<double> point_mass_response(std::uint32_t bitstring, int parties) {
  std::vector<double> zero_prob(static_cast<std::size_t>(parties));
  for (int j = 0; j < parties; ++j) {
    zero_prob[static_cast<std::size_t>(j)] =
        bit_of(bitstring, j, parties) ? 0.0 : 1.0;
  }
  return zero_prob;
}

double l2_distance(const std::vector<double>& a, const std::vector<double>& b) {
  double sq = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const double d = a[i] - b[i];
    sq += d * d;
  }
  return std::sqrt(sq);
}

}  // namespace

DecompositionResult decompose_as_classical(const OutcomeDistribution& target,
                                           int restarts, std::uint64_t seed,
                                           double tol,
                                           const OptimizerOptions& options) {
  target.validate();
  if (target.parties < 2) {
    throw std::invalid_argument("decomposition needs at least 2 parties");
  }
  if (restarts < 1) {
    throw std::invalid_argument("need at least one restart");
  }
  const int parties = target.parties;
  const std::size_t dimension = static_cast<std::size_t>(2 * parties + 1);

  const std::vector<std::uint32_t> atoms = support_atoms(target, 1e-12);
  DecompositionResult result;

  bool even_only = true;
  for (std::uint32_t atom : atoms) {
    if (parity(atom) == 1) even_only = false;
  }
  if (atoms.size() >= 3 && even_only) {
    result.certificate = SupportCertificate::kInfeasibleEvenSupport;
  }

  // Least-squares fit by multi-start descent on the squared distance.
  auto run_restart = [&](int index) {
    std::mt19937_64 rng(substream_seed(seed, static_cast<std::uint64_t>(index)));
    std::vector<double> x0 = random_interior_start(rng, dimension);

    std::vector<double> scratch(target.probs.size());
    Objective neg_sq_dist = [&](const std::vector<double>& x) {
      const std::size_t n = static_cast<std::size_t>(parties);
      classical_distribution_into(
          parties, x[0], std::span<const double>(x.data() + 1, n),
          std::span<const double>(x.data() + 1 + n, n), scratch);
      double sq = 0.0;
      for (std::size_t i = 0; i < scratch.size(); ++i) {
        const double d = scratch[i] - target.probs[i];
        sq += d * d;
      }
      return -sq;
    };

    LocalRun run = ascend(neg_sq_dist, std::move(x0), options);
    RestartOutcome outcome;
    outcome.total_runs = 1;
    outcome.converged_runs = run.converged ? 1 : 0;
    outcome.iterations = run.iterations;
    outcome.score = run.value;  // -squared distance
    outcome.x = std::move(run.x);
    return outcome;
  };

  RestartOutcome best = multistart(restarts, options.threads, run_restart);
  ClassicalParams best_params = params_from_point(parties, best.x);
  double residual = l2_distance(classical_distribution(best_params).probs,
                                target.probs);

  // A support of at most two atoms is a mixture of two point masses;
  // reconstruct it exactly and keep whichever fit is tighter.
  if (!atoms.empty() && atoms.size() <= 2) {
    ClassicalParams exact;
    exact.parties = parties;
    exact.gamma = atoms.size() == 1 ? 1.0 : clamp_unit(target.probs[atoms[0]]);
    exact.p_zero = point_mass_response(atoms[0], parties);
    exact.q_zero = point_mass_response(atoms.back(), parties);
    const double exact_residual =
        l2_distance(classical_distribution(exact).probs, target.probs);
    if (exact_residual <= residual) {
      best_params = std::move(exact);
      residual = exact_residual;
    }
    result.certificate = SupportCertificate::kFeasibleTwoAtoms;
  }

  result.residual = residual;
  result.feasible = residual < tol &&
                    result.certificate != SupportCertificate::kInfeasibleEvenSupport;
  if (result.feasible) result.params = std::move(best_params);
  return result;
}

}  // namespace ringnet
