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

#include <string>

#include <json.hpp>

#include "ringnet/classical.hpp"
#include "ringnet/distribution.hpp"
#include "ringnet/geometry.hpp"
#include "ringnet/optimizer.hpp"
#include "ringnet/witness.hpp"

namespace ringnet::io {

// Distribution documents carry `parties` and a `probs` map keyed by outcome
// string; omitted strings are zero. Parameter documents carry `parties`,
// `gamma`, `p_zero`, `q_zero`, or alternatively `routing` plus the two
// response lists to derive gamma from routing probabilities.

nlohmann::json to_json(const OutcomeDistribution& dist);
OutcomeDistribution distribution_from_json(const nlohmann::json& doc);

nlohmann::json to_json(const ClassicalParams& params);
ClassicalParams params_from_json(const nlohmann::json& doc);

nlohmann::json to_json(const WitnessValue& witness,
                       const PredicateVerdict& verdict, int parties);
nlohmann::json to_json(const BoundResult& result);
nlohmann::json to_json(const DecompositionResult& result);
nlohmann::json to_json(const InfeasibilityReport& report);
nlohmann::json to_json(const SeparationReport& report);

OutcomeDistribution load_distribution(const std::string& path);
nlohmann::json load_json(const std::string& path);

}  // namespace ringnet::io
