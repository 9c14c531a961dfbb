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

#include <CLI11.hpp>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>

#include "ringnet/classical.hpp"
#include "ringnet/errors.hpp"
#include "ringnet/fock.hpp"
#include "ringnet/geometry.hpp"
#include "ringnet/io.hpp"
#include "ringnet/optimizer.hpp"
#include "ringnet/witness.hpp"

namespace {

constexpr std::uint64_t kDefaultSeed = 2026;

int default_restarts() {
  if (const char* env = std::getenv("RINGNET_RESTARTS")) {
    char* end = nullptr;
    const long value = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && value >= 1 && value <= 1000000) {
      return static_cast<int>(value);
    }
    throw std::invalid_argument("RINGNET_RESTARTS must be a positive integer");
  }
  return 500;
}

void emit(const std::string& text, const std::string& output_path) {
  if (output_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(output_path, std::ios::binary);
  if (!out) {
    throw std::runtime_error("cannot write '" + output_path + "'");
  }
  out << text;
}

void emit_json(const nlohmann::json& doc, const std::string& output_path) {
  emit(doc.dump(2) + "\n", output_path);
}

ringnet::OutcomeDistribution simulate_ring(int parties) {
  if (parties > 12) {
    throw std::invalid_argument("ring simulation supports parties <= 12");
  }
  const auto input = ringnet::build_ring_input(parties);
  const auto mixed = ringnet::apply_transform(
      input, ringnet::ring_beam_splitter_transform(parties));
  const auto selected = ringnet::postselect_single_per_station(mixed);
  return ringnet::outcome_distribution(selected.state);
}

int run_quantum(int parties, const std::string& output_path) {
  if (parties > 12) {
    throw std::invalid_argument("ring simulation supports parties <= 12");
  }
  const auto input = ringnet::build_ring_input(parties);
  const auto mixed = ringnet::apply_transform(
      input, ringnet::ring_beam_splitter_transform(parties));
  const auto selected = ringnet::postselect_single_per_station(mixed);
  nlohmann::json doc =
      ringnet::io::to_json(ringnet::outcome_distribution(selected.state));
  doc["success_probability"] = selected.success_probability;
  emit_json(doc, output_path);
  return 0;
}

int run_classical(const std::string& params_path,
                  const std::string& output_path) {
  const auto params =
      ringnet::io::params_from_json(ringnet::io::load_json(params_path));
  emit_json(ringnet::io::to_json(ringnet::classical_distribution(params)),
            output_path);
  return 0;
}

int run_witness(const std::string& dist_path, double tol,
                const std::string& output_path) {
  const auto dist = ringnet::io::load_distribution(dist_path);
  const auto witness = ringnet::evaluate_cn(dist);
  const auto verdict = ringnet::check_predicate(dist, tol);
  emit_json(ringnet::io::to_json(witness, verdict, dist.parties), output_path);
  return 0;
}

int run_bound(int parties, int restarts, std::uint64_t seed,
              const std::string& output_path) {
  emit_json(ringnet::io::to_json(
                ringnet::maximize_classical_cn(parties, restarts, seed)),
            output_path);
  return 0;
}

int run_feasibility(const std::string& dist_path, int restarts,
                    std::uint64_t seed, double tol,
                    const std::string& output_path) {
  const auto dist = ringnet::io::load_distribution(dist_path);
  emit_json(ringnet::io::to_json(
                ringnet::decompose_as_classical(dist, restarts, seed, tol)),
            output_path);
  return 0;
}

int run_geometry(int parties, int restarts, std::uint64_t seed, double lambda,
                 const std::string& output_path) {
  ringnet::WitnessOptions options;
  options.restarts = restarts;
  options.seed = seed;
  options.lambda = lambda;
  emit_json(ringnet::io::to_json(
                ringnet::no_separating_hyperplane_report(parties, options)),
            output_path);
  return 0;
}

int run_prove(int parties, const std::string& output_path) {
  emit_json(
      ringnet::io::to_json(ringnet::predicate_infeasibility_proof(parties)),
      output_path);
  return 0;
}

int run_sweep(int max_parties, int restarts, std::uint64_t seed,
              const std::string& output_path) {
  if (max_parties < 2 || max_parties > 10) {
    throw std::invalid_argument("sweep supports 2 <= max-parties <= 10");
  }
  std::string csv = "n,cn_quantum,cn_classical_max,gap,restarts,seed\n";
  for (int n = 2; n <= max_parties; ++n) {
    const double quantum = ringnet::evaluate_cn(simulate_ring(n)).value;
    const double classical =
        ringnet::maximize_classical_cn(n, restarts, seed).best_value;
    char row[160];
    std::snprintf(row, sizeof(row), "%d,%.12g,%.12g,%.12g,%d,%llu\n", n,
                  quantum, classical, quantum - classical, restarts,
                  static_cast<unsigned long long>(seed));
    csv += row;
  }
  emit(csv, output_path);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Single-particle coherence in ring networks: quantum simulation, "
      "classical models, nonlinear witnesses, and bound optimization"};
  app.require_subcommand(1);

  int parties = 3;
  int max_parties = 6;
  int restarts = -1;  // resolved after parsing so the env override applies
  std::uint64_t seed = kDefaultSeed;
  double witness_tol = 1e-9;
  double feasibility_tol = 1e-6;
  double lambda = 0.5;
  std::string dist_path, params_path, output_path;

  auto* quantum = app.add_subcommand(
      "quantum", "Simulate the quantum ring and print its post-selected "
                 "outcome distribution");
  quantum->add_option("--parties", parties, "party count n >= 2")->required();
  quantum->add_option("--output", output_path, "write the document here");

  auto* classical = app.add_subcommand(
      "classical", "Evaluate the post-selected classical model distribution");
  classical->add_option("--params", params_path, "parameter document (JSON)")
      ->required();
  classical->add_option("--output", output_path, "write the document here");

  auto* witness = app.add_subcommand(
      "witness", "Evaluate C_n and the parity predicate on a distribution");
  witness->add_option("--dist", dist_path, "distribution document (JSON)")
      ->required();
  witness->add_option("--tol", witness_tol, "predicate tolerance");
  witness->add_option("--output", output_path, "write the document here");

  auto* bound = app.add_subcommand(
      "bound", "Maximize C_n over classical network parameters");
  bound->add_option("--parties", parties, "party count n >= 2")->required();
  bound->add_option("--restarts", restarts, "multi-start restarts");
  bound->add_option("--seed", seed, "random seed");
  bound->add_option("--output", output_path, "write the document here");

  auto* feasibility = app.add_subcommand(
      "feasibility", "Fit a classical decomposition to a target distribution");
  feasibility->add_option("--dist", dist_path, "distribution document (JSON)")
      ->required();
  feasibility->add_option("--restarts", restarts, "multi-start restarts");
  feasibility->add_option("--seed", seed, "random seed");
  feasibility->add_option("--tol", feasibility_tol, "feasibility tolerance");
  feasibility->add_option("--output", output_path, "write the document here");

  auto* geometry = app.add_subcommand(
      "geometry", "Vertex certificates plus the non-convexity witness");
  geometry->add_option("--parties", parties, "party count n >= 2")->required();
  geometry->add_option("--restarts", restarts, "multi-start restarts");
  geometry->add_option("--seed", seed, "random seed");
  geometry->add_option("--lambda", lambda, "mixture weight of the witness");
  geometry->add_option("--output", output_path, "write the document here");

  auto* prove = app.add_subcommand(
      "prove", "Exhaustive support-pattern certificate for the parity "
               "predicate");
  prove->add_option("--parties", parties, "party count 2..6")->required();
  prove->add_option("--output", output_path, "write the document here");

  auto* sweep = app.add_subcommand(
      "sweep", "CSV table of quantum value, classical maximum, and gap per n");
  sweep->add_option("--max-parties", max_parties, "largest n, 2..10")
      ->required();
  sweep->add_option("--restarts", restarts, "multi-start restarts");
  sweep->add_option("--seed", seed, "random seed");
  sweep->add_option("--output", output_path, "write the CSV here");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (restarts == -1) restarts = default_restarts();
    if (restarts < 1) {
      throw std::invalid_argument("restarts must be positive");
    }
    if (quantum->parsed()) return run_quantum(parties, output_path);
    if (classical->parsed()) return run_classical(params_path, output_path);
    if (witness->parsed())
      return run_witness(dist_path, witness_tol, output_path);
    if (bound->parsed()) return run_bound(parties, restarts, seed, output_path);
    if (feasibility->parsed())
      return run_feasibility(dist_path, restarts, seed, feasibility_tol,
                             output_path);
    if (geometry->parsed())
      return run_geometry(parties, restarts, seed, lambda, output_path);
    if (prove->parsed()) return run_prove(parties, output_path);
    if (sweep->parsed())
      return run_sweep(max_parties, restarts, seed, output_path);
    return 2;
  } catch (const std::invalid_argument& err) {
    std::cerr << "error: " << err.what() << "\n";
    return 2;
  } catch (const std::exception& err) {
    std::cerr << "error: " << err.what() << "\n";
    return 3;
  }
}
