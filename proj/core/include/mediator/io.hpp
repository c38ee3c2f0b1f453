#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "mediator/consistency.hpp"
#include "mediator/generator.hpp"
#include "mediator/implement.hpp"
#include "mediator/infograph.hpp"
#include "mediator/model.hpp"
#include "mediator/potential.hpp"

namespace mediator {

using Json = nlohmann::ordered_json;

// Input that is not well-formed JSON or does not follow the expected schema.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class FileNotFound : public ParseError {
 public:
  using ParseError::ParseError;
};

Json parse_json_text(const std::string& text);
// Throws FileNotFound or ParseError.
Json read_json_file(const std::string& path);

Rational parse_rational(const Json& value);
Json to_json(const Rational& value);

struct Instance {
  Model model;
  std::optional<JointBelief> joint_belief;
};

RawModel parse_raw_model(const Json& doc);
RawJointBelief parse_raw_joint_belief(const Json& entries);
// Parses and validates; throws ParseError or ValidationError.
Instance parse_instance(const Json& doc);

// Instance files in canonical form (states and players in index order).
Json to_json(const Model& model);
Json to_json(const Model& model, const JointBelief& jb);
Json belief_to_json(const Model& model, const Belief& belief);
Json joint_belief_to_json(const Model& model, const JointBelief& jb);

// Phi table: {"w|w'": "p/q"}.
EdgeLabels parse_phi(const Model& model, const Json& doc);
Json to_json(const Model& model, const PLFunction& phi);

// {"signals": [...], "tau": {signal: {state: "p/q"}}}; validated.
SignalKernel parse_kernel(const Model& model, const Json& doc);
Json to_json(const Model& model, const SignalKernel& kernel);

Json to_json(const Model& model, const Certificate& certificate);
Json to_json(const Model& model, const CKCPartition& components, const ComponentGraph& graph);
Json to_json(const Model& model, const Verdict& verdict);
Json to_json(const Model& model, const std::vector<Mismatch>& mismatches);
Json to_json(const Model& model, const MonteCarloReport& report);
Json to_json(const Model& model, const MultiResult& result);
Json to_json(const Model& model, const FLabeling& f);

// {"players": [...], "actions": {player: [...]}, "payoffs": {"a,b": {player: "p/q"}}}
StrategicGame parse_game(const Json& doc);
Json to_json(const StrategicGame& game);
Json potential_to_json(const StrategicGame& game, const std::vector<Rational>& g);
Json cycle_to_json(const StrategicGame& game, const AdditiveCycle& cycle);

}  // namespace mediator
