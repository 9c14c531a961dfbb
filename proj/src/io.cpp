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

#include "ringnet/io.hpp"

#include <fstream>
#include <stdexcept>

namespace ringnet::io {

namespace {

using nlohmann::json;

int parties_field(const json& doc) {
  if (!doc.contains("parties") || !doc["parties"].is_number_integer()) {
    throw std::invalid_argument("document needs an integer 'parties' field");
  }
  const int parties = doc["parties"].get<int>();
  if (parties < 2 || parties > 20) {
    throw std::invalid_argument("'parties' out of supported range [2, 20]");
  }
  return parties;
}

std::vector<double> number_list(const json& doc, const char* key,
                                std::size_t expected) {
  if (!doc.contains(key) || !doc[key].is_array() ||
      doc[key].size() != expected) {
    throw std::invalid_argument(std::string("'") + key + "' must be a list of " +
                                std::to_string(expected) + " numbers");
  }
  std::vector<double> values;
  values.reserve(expected);
  for (const auto& v : doc[key]) {
    if (!v.is_number()) {
      throw std::invalid_argument(std::string("'") + key +
                                  "' must contain numbers only");
    }
    values.push_back(v.get<double>());
  }
  return values;
}

const char* certificate_name(SupportCertificate certificate) {
  switch (certificate) {
    case SupportCertificate::kInfeasibleEvenSupport:
      return "infeasible_even_support";
    case SupportCertificate::kFeasibleTwoAtoms:
      return "feasible_two_atoms";
    case SupportCertificate::kNotApplicable:
      break;
  }
  return "not_applicable";
}

const char* flag_name(ZeroFlag flag) {
  switch (flag) {
    case ZeroFlag::kOutcome0:
      return "zero_at_0";
    case ZeroFlag::kOutcome1:
      return "zero_at_1";
    case ZeroFlag::kNone:
      break;
  }
  return "none";
}

json flags_to_json(const std::vector<ZeroFlag>& flags) {
  json list = json::array();
  for (ZeroFlag f : flags) list.push_back(flag_name(f));
  return list;
}

json bitstring_list(const std::vector<std::uint32_t>& strings, int parties) {
  json list = json::array();
  for (std::uint32_t s : strings) list.push_back(format_bitstring(s, parties));
  return list;
}

}  // namespace

json to_json(const OutcomeDistribution& dist) {
  json probs = json::object();
  for (std::uint32_t idx = 0; idx < dist.probs.size(); ++idx) {
    if (dist.probs[idx] != 0.0) {
      probs[format_bitstring(idx, dist.parties)] = dist.probs[idx];
    }
  }
  return json{{"parties", dist.parties}, {"probs", std::move(probs)}};
}

OutcomeDistribution distribution_from_json(const json& doc) {
  const int parties = parties_field(doc);
  if (!doc.contains("probs") || !doc["probs"].is_object()) {
    throw std::invalid_argument("document needs a 'probs' object");
  }
  OutcomeDistribution dist = OutcomeDistribution::zeros(parties);
  for (const auto& [key, value] : doc["probs"].items()) {
    if (key.size() != static_cast<std::size_t>(parties)) {
      throw std::invalid_argument("outcome string '" + key +
                                  "' does not match the party count");
    }
    if (!value.is_number()) {
      throw std::invalid_argument("probability of '" + key +
                                  "' is not a number");
    }
    dist.probs[parse_bitstring(key)] = value.get<double>();
  }
  dist.validate(1e-9);
  return dist;
}

json to_json(const ClassicalParams& params) {
  return json{{"parties", params.parties},
              {"gamma", params.gamma},
              {"p_zero", params.p_zero},
              {"q_zero", params.q_zero}};
}

ClassicalParams params_from_json(const json& doc) {
  const int parties = parties_field(doc);
  const std::size_t n = static_cast<std::size_t>(parties);
  ClassicalParams params;
  params.parties = parties;
  params.p_zero = number_list(doc, "p_zero", n);
  params.q_zero = number_list(doc, "q_zero", n);
  if (doc.contains("routing")) {
    RoutingParams routing{number_list(doc, "routing", n)};
    params.gamma =
        postselected_from_routing(routing, params.p_zero, params.q_zero)
            .params.gamma;
  } else if (doc.contains("gamma") && doc["gamma"].is_number()) {
    params.gamma = doc["gamma"].get<double>();
  } else {
    throw std::invalid_argument(
        "parameter document needs 'gamma' or 'routing'");
  }
  params.validate();
  return params;
}

json to_json(const WitnessValue& witness, const PredicateVerdict& verdict,
             int parties) {
  return json{{"parties", witness.parties},
              {"cn", witness.value},
              {"even_pair_sum", witness.even_pair_sum},
              {"odd_pair_sum", witness.odd_pair_sum},
              {"predicate",
               json{{"satisfied", verdict.satisfied},
                    {"odd_violations",
                     bitstring_list(verdict.odd_violations, parties)},
                    {"even_violations",
                     bitstring_list(verdict.even_violations, parties)}}}};
}

json to_json(const BoundResult& result) {
  return json{{"parties", result.parties},
              {"best_value", result.best_value},
              {"best_params", to_json(result.best_params)},
              {"restarts", result.restarts},
              {"iterations_total", result.iterations_total},
              {"converged_fraction", result.converged_fraction},
              {"seed", result.seed}};
}

json to_json(const DecompositionResult& result) {
  json doc{{"feasible", result.feasible},
           {"residual", result.residual},
           {"certificate", certificate_name(result.certificate)}};
  doc["params"] = result.params ? to_json(*result.params) : json(nullptr);
  return doc;
}

json to_json(const InfeasibilityReport& report) {
  json examples = json::array();
  for (const SupportPattern& pattern : report.examples) {
    examples.push_back(
        json{{"clockwise", flags_to_json(pattern.clockwise)},
             {"counterclockwise", flags_to_json(pattern.counterclockwise)}});
  }
  return json{{"parties", report.parties},
              {"patterns_examined", report.patterns_examined},
              {"odd_killing_patterns", report.odd_killing_patterns},
              {"feasible_patterns", report.feasible_patterns},
              {"infeasible", report.infeasible},
              {"examples", std::move(examples)}};
}

json to_json(const SeparationReport& report) {
  json vertices = json::array();
  for (const VertexCertificate& cert : report.vertices) {
    vertices.push_back(
        json{{"bitstring", format_bitstring(cert.bitstring, report.parties)},
             {"params", to_json(cert.params)},
             {"max_abs_error", cert.max_abs_error}});
  }
  json doc{{"parties", report.parties},
           {"vertices", std::move(vertices)},
           {"nonconvexity_applicable", report.witness_applicable}};
  if (report.witness) {
    const ConvexityWitness& w = *report.witness;
    doc["nonconvexity"] =
        json{{"q1", to_json(w.q1)},
             {"q1_params", to_json(w.q1_params)},
             {"q1_residual", w.q1_residual},
             {"q2", to_json(w.q2)},
             {"q2_params", to_json(w.q2_params)},
             {"q2_residual", w.q2_residual},
             {"lambda", w.lambda},
             {"midpoint", to_json(w.midpoint)},
             {"midpoint_result", to_json(w.midpoint_result)}};
  } else {
    doc["nonconvexity"] = nullptr;
  }
  return doc;
}

json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw std::invalid_argument("cannot open '" + path + "'");
  }
  json doc;
  try {
    in >> doc;
  } catch (const json::parse_error& err) {
    throw std::invalid_argument("cannot parse '" + path + "': " + err.what());
  }
  return doc;
}

OutcomeDistribution load_distribution(const std::string& path) {
  return distribution_from_json(load_json(path));
}

}  // namespace ringnet::io
