#include "mediator/io.hpp"

#include <fstream>
#include <sstream>

namespace mediator {

namespace {

const Json& field(const Json& doc, const char* key, const char* where) {
  if (!doc.is_object()) throw ParseError(std::string(where) + ": expected an object");
  auto it = doc.find(key);
  if (it == doc.end()) throw ParseError(std::string(where) + ": missing \"" + key + "\"");
  return *it;
}

std::string string_of(const Json& value, const char* where) {
  if (!value.is_string()) throw ParseError(std::string(where) + ": expected a string");
  return value.get<std::string>();
}

std::vector<std::string> strings_of(const Json& value, const char* where) {
  if (!value.is_array()) throw ParseError(std::string(where) + ": expected an array of strings");
  std::vector<std::string> out;
  for (const auto& item : value) out.push_back(string_of(item, where));
  return out;
}

std::vector<std::vector<std::string>> cells_of(const Json& value, const char* where) {
  if (!value.is_array()) throw ParseError(std::string(where) + ": expected an array of cells");
  std::vector<std::vector<std::string>> out;
  for (const auto& cell : value) out.push_back(strings_of(cell, where));
  return out;
}

Json cells_to_json(const Model& model, const std::vector<std::vector<StateId>>& cells) {
  Json out = Json::array();
  for (const auto& cell : cells) {
    Json names = Json::array();
    for (StateId s : cell) names.push_back(model.state_name(s));
    out.push_back(std::move(names));
  }
  return out;
}

Json states_to_json(const Model& model, const std::vector<StateId>& states) {
  Json out = Json::array();
  for (StateId s : states) out.push_back(model.state_name(s));
  return out;
}

}  // namespace

Json parse_json_text(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw FileNotFound("cannot open file '" + path + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_json_text(buffer.str());
}

Rational parse_rational(const Json& value) {
  if (!value.is_string()) throw ParseError("rational values must be strings \"p/q\"");
  try {
    return Rational::parse(value.get<std::string>());
  } catch (const RationalError& e) {
    throw ParseError(e.what());
  }
}

Json to_json(const Rational& value) { return value.str(); }

RawModel parse_raw_model(const Json& doc) {
  RawModel raw;
  raw.states = strings_of(field(doc, "states", "instance"), "states");
  const Json& prior = field(doc, "prior", "instance");
  if (!prior.is_object()) throw ParseError("prior: expected an object");
  for (const auto& [name, value] : prior.items()) raw.prior.emplace_back(name, parse_rational(value));
  const Json& players = field(doc, "players", "instance");
  if (!players.is_object()) throw ParseError("players: expected an object");
  for (const auto& [name, cells] : players.items()) raw.players.emplace_back(name, cells_of(cells, "players"));
  raw.mediator = cells_of(field(doc, "mediator", "instance"), "mediator");
  return raw;
}

RawJointBelief parse_raw_joint_belief(const Json& entries) {
  if (!entries.is_object()) throw ParseError("joint_belief: expected an object");
  RawJointBelief raw;
  for (const auto& [state, row] : entries.items()) {
    if (!row.is_object()) throw ParseError("joint_belief." + state + ": expected an object");
    std::vector<std::pair<std::string, std::optional<RawJointBelief::SparseDistribution>>> beliefs;
    for (const auto& [player, dist] : row.items()) {
      if (dist.is_null()) {
        beliefs.emplace_back(player, std::nullopt);
        continue;
      }
      if (!dist.is_object()) {
        throw ParseError("joint_belief." + state + "." + player + ": expected an object or null");
      }
      RawJointBelief::SparseDistribution sparse;
      for (const auto& [target, p] : dist.items()) sparse.emplace_back(target, parse_rational(p));
      beliefs.emplace_back(player, std::move(sparse));
    }
    raw.entries.emplace_back(state, std::move(beliefs));
  }
  return raw;
}

Instance parse_instance(const Json& doc) {
  Instance instance{validate_model(parse_raw_model(doc)), std::nullopt};
  if (doc.contains("joint_belief")) {
    instance.joint_belief = validate_joint_belief(instance.model, parse_raw_joint_belief(doc["joint_belief"]));
  }
  return instance;
}

Json to_json(const Model& model) {
  Json out;
  out["states"] = model.states();
  Json prior = Json::object();
  for (StateId s = 0; s < model.num_states(); ++s) prior[model.state_name(s)] = to_json(model.prior(s));
  out["prior"] = std::move(prior);
  Json players = Json::object();
  for (const auto& player : model.players()) players[player.id] = cells_to_json(model, player.partition.cells());
  out["players"] = std::move(players);
  out["mediator"] = cells_to_json(model, model.mediator().cells());
  return out;
}

Json belief_to_json(const Model& model, const Belief& belief) {
  if (!belief) return nullptr;
  Json out = Json::object();
  for (StateId s = 0; s < model.num_states(); ++s) {
    if (!(*belief)[s].is_zero()) out[model.state_name(s)] = to_json((*belief)[s]);
  }
  return out;
}

Json joint_belief_to_json(const Model& model, const JointBelief& jb) {
  Json out = Json::object();
  for (StateId s = 0; s < model.num_states(); ++s) {
    Json row = Json::object();
    for (PlayerId i = 0; i < model.num_players(); ++i) row[model.player(i).id] = belief_to_json(model, jb.at(s, i));
    out[model.state_name(s)] = std::move(row);
  }
  return out;
}

Json to_json(const Model& model, const JointBelief& jb) {
  Json out = to_json(model);
  out["joint_belief"] = joint_belief_to_json(model, jb);
  return out;
}

EdgeLabels parse_phi(const Model& model, const Json& doc) {
  if (!doc.is_object()) throw ParseError("phi: expected an object mapping \"w|w'\" to \"p/q\"");
  EdgeLabels labels;
  for (const auto& [key, value] : doc.items()) {
    auto bar = key.find('|');
    if (bar == std::string::npos) throw ParseError("phi: key '" + key + "' is not of the form \"w|w'\"");
    StateId a = model.state(key.substr(0, bar));
    StateId b = model.state(key.substr(bar + 1));
    labels[{a, b}] = parse_rational(value);
  }
  return labels;
}

Json to_json(const Model& model, const PLFunction& phi) {
  Json out = Json::object();
  for (const auto& [edge, value] : phi.labels()) {
    out[model.state_name(edge.first) + "|" + model.state_name(edge.second)] = to_json(value);
  }
  return out;
}

SignalKernel parse_kernel(const Model& model, const Json& doc) {
  auto signals = strings_of(field(doc, "signals", "kernel"), "signals");
  const Json& tau = field(doc, "tau", "kernel");
  if (!tau.is_object()) throw ParseError("tau: expected an object");
  std::vector<std::vector<Rational>> table(signals.size(), std::vector<Rational>(model.num_states()));
  std::vector<Violation> violations;
  for (const auto& [signal, row] : tau.items()) {
    auto it = std::find(signals.begin(), signals.end(), signal);
    if (it == signals.end()) {
      violations.push_back({ViolationKind::UnknownSignal, "tau names unknown signal '" + signal + "'"});
      continue;
    }
    if (!row.is_object()) throw ParseError("tau." + signal + ": expected an object");
    for (const auto& [state, p] : row.items()) {
      auto s = model.find_state(state);
      if (!s) {
        violations.push_back({ViolationKind::UnknownState, "tau." + signal + " names unknown state '" + state + "'"});
        continue;
      }
      table[static_cast<std::size_t>(it - signals.begin())][*s] = parse_rational(p);
    }
  }
  if (!violations.empty()) throw ValidationError(std::move(violations));
  SignalKernel kernel(std::move(signals), std::move(table));
  validate_kernel(model, kernel);
  return kernel;
}

Json to_json(const Model& model, const SignalKernel& kernel) {
  Json out;
  out["signals"] = kernel.signals();
  Json tau = Json::object();
  for (std::size_t k = 0; k < kernel.num_signals(); ++k) {
    Json row = Json::object();
    for (StateId s = 0; s < model.num_states(); ++s) row[model.state_name(s)] = to_json(kernel.prob(k, s));
    tau[kernel.signal_name(k)] = std::move(row);
  }
  out["tau"] = std::move(tau);
  return out;
}

Json to_json(const Model& model, const Certificate& certificate) {
  Json out;
  if (certificate.kind == CertificateKind::FCycle) {
    out["kind"] = "FCycle";
    out["path"] = states_to_json(model, certificate.path);
  } else {
    out["kind"] = "FLoop";
    Json pairs = Json::array();
    for (const auto& p : certificate.pairs) pairs.push_back({model.state_name(p.from), model.state_name(p.to)});
    out["pairs"] = std::move(pairs);
  }
  out["product"] = to_json(certificate.product);
  return out;
}

Json to_json(const Model& model, const CKCPartition& components, const ComponentGraph& graph) {
  Json out;
  Json comps = Json::array();
  for (const auto& c : components.components) comps.push_back(states_to_json(model, c));
  out["components"] = std::move(comps);
  Json edges = Json::array();
  for (const auto& e : graph.edges) {
    Json witnesses = Json::array();
    for (std::size_t cell : e.witnesses) witnesses.push_back(states_to_json(model, model.mediator().cell(cell)));
    edges.push_back({{"from", e.from}, {"to", e.to}, {"witnesses", std::move(witnesses)}});
  }
  out["component_graph"] = std::move(edges);
  return out;
}

Json to_json(const Model& model, const FLabeling& f) {
  Json out = Json::object();
  for (StateId s : f.states) out[model.state_name(s)] = to_json(f.values[s]);
  return out;
}

Json to_json(const Model& model, const Verdict& verdict) {
  Json out;
  out["implementable"] = verdict.implementable();
  out["omega_plus"] = states_to_json(model, verdict.plus.states);
  if (verdict.implementation) {
    const auto& impl = *verdict.implementation;
    out["f"] = to_json(model, impl.f);
    out["signal"] = impl.kernel.signal_name(impl.signal);
    out["kernel"] = to_json(model, impl.kernel);
    return out;
  }
  const auto& rejection = *verdict.rejection;
  out["reason"] = std::string(to_string(rejection.reason));
  if (rejection.cell) out["cell"] = states_to_json(model, model.mediator().cell(*rejection.cell));
  if (rejection.entry) {
    out["entry"] = {{"state", model.state_name(rejection.entry->first)},
                    {"player", model.player(rejection.entry->second).id}};
  }
  if (rejection.conflict) {
    Json values = Json::object();
    for (const auto& [player, value] : rejection.conflict->values) values[model.player(player).id] = to_json(value);
    out["edge"] = {model.state_name(rejection.conflict->a), model.state_name(rejection.conflict->b)};
    out["values"] = std::move(values);
  }
  if (rejection.certificate) out["certificate"] = to_json(model, *rejection.certificate);
  return out;
}

Json to_json(const Model& model, const std::vector<Mismatch>& mismatches) {
  Json out;
  out["match"] = mismatches.empty();
  Json list = Json::array();
  for (const auto& m : mismatches) {
    list.push_back({{"state", model.state_name(m.state)},
                    {"player", model.player(m.player).id},
                    {"expected", belief_to_json(model, m.expected)},
                    {"got", belief_to_json(model, m.got)}});
  }
  out["mismatches"] = std::move(list);
  return out;
}

Json to_json(const Model& model, const MonteCarloReport& report) {
  Json out;
  out["samples"] = report.samples;
  out["signal_hits"] = report.signal_hits;
  out["max_deviation"] = report.max_deviation;
  out["flagged"] = report.flagged;
  out["low_confidence"] = report.low_confidence;
  Json entries = Json::array();
  for (const auto& e : report.entries) {
    entries.push_back({{"player", model.player(e.player).id},
                       {"cell", states_to_json(model, model.partition(e.player).cell(e.cell))},
                       {"state", model.state_name(e.state)},
                       {"hits", e.hits},
                       {"empirical", e.empirical},
                       {"expected", e.expected},
                       {"deviation", e.deviation},
                       {"tolerance", e.tolerance}});
  }
  out["entries"] = std::move(entries);
  return out;
}

namespace {

Json rationals_to_json(const std::vector<Rational>& values) {
  Json out = Json::array();
  for (const auto& v : values) out.push_back(to_json(v));
  return out;
}

Json distribution_to_json(const Model& model, const Distribution& dist) {
  Json out = Json::object();
  for (StateId s = 0; s < model.num_states(); ++s) out[model.state_name(s)] = to_json(dist[s]);
  return out;
}

Json option_to_json(const Model& model, const std::vector<Rational>& u) { return distribution_to_json(model, u); }

}  // namespace

Json to_json(const Model& model, const MultiResult& result) {
  Json out;
  out["ok"] = result.failure == MultiFailure::None;
  if (result.failure != MultiFailure::None) out["failure"] = std::string(to_string(result.failure));
  if (result.rejected_member) {
    out["rejected_member"] = *result.rejected_member;
    out["member_verdict"] = to_json(model, *result.member_verdict);
    return out;
  }
  Json posteriors = Json::array();
  for (const auto& p : result.posteriors) posteriors.push_back(distribution_to_json(model, p));
  out["posteriors"] = std::move(posteriors);
  out["member_posterior"] = result.member_posterior;
  if (!result.pp.holds) {
    out["pp_witness"] = option_to_json(model, result.pp.witness);
    return out;
  }
  if (result.spp && !result.spp->holds) {
    out["spp_failing_member"] = *result.spp->failing_member;
    out["spp_witness"] = option_to_json(model, result.spp->witness);
  }
  if (result.kernel) {
    out["weights"] = rationals_to_json(result.weights);
    out["degraded"] = result.degraded;
    out["kernel"] = to_json(model, *result.kernel);
  }
  return out;
}

StrategicGame parse_game(const Json& doc) {
  auto players = strings_of(field(doc, "players", "game"), "players");
  const Json& actions_doc = field(doc, "actions", "game");
  std::vector<std::vector<std::string>> actions;
  for (const auto& p : players) actions.push_back(strings_of(field(actions_doc, p.c_str(), "actions"), "actions"));
  std::size_t profiles = 1;
  for (const auto& a : actions) profiles *= a.size();
  if (players.empty() || profiles == 0) throw ParseError("game: every player needs at least one action");

  std::vector<std::vector<std::optional<Rational>>> table(profiles, std::vector<std::optional<Rational>>(players.size()));
  const Json& payoffs = field(doc, "payoffs", "game");
  if (!payoffs.is_object()) throw ParseError("payoffs: expected an object");
  for (const auto& [key, row] : payoffs.items()) {
    std::vector<std::string> parts;
    std::stringstream ss(key);
    std::string part;
    while (std::getline(ss, part, ',')) parts.push_back(part);
    if (parts.size() != players.size()) throw ParseError("payoffs: profile '" + key + "' has wrong arity");
    std::size_t index = 0;
    for (std::size_t i = 0; i < players.size(); ++i) {
      auto it = std::find(actions[i].begin(), actions[i].end(), parts[i]);
      if (it == actions[i].end()) throw ParseError("payoffs: unknown action '" + parts[i] + "' in '" + key + "'");
      index = index * actions[i].size() + static_cast<std::size_t>(it - actions[i].begin());
    }
    for (std::size_t i = 0; i < players.size(); ++i) {
      table[index][i] = parse_rational(field(row, players[i].c_str(), "payoffs"));
    }
  }
  std::vector<std::vector<Rational>> dense(profiles);
  for (std::size_t k = 0; k < profiles; ++k) {
    for (const auto& v : table[k]) {
      if (!v) throw ParseError("payoffs: missing entry for a profile");
      dense[k].push_back(*v);
    }
  }
  return StrategicGame(std::move(players), std::move(actions), std::move(dense));
}

Json to_json(const StrategicGame& game) {
  Json out;
  out["players"] = game.players();
  Json actions = Json::object();
  for (std::size_t i = 0; i < game.num_players(); ++i) actions[game.players()[i]] = game.actions(i);
  out["actions"] = std::move(actions);
  Json payoffs = Json::object();
  for (std::size_t k = 0; k < game.num_profiles(); ++k) {
    Json row = Json::object();
    for (std::size_t i = 0; i < game.num_players(); ++i) row[game.players()[i]] = to_json(game.payoff(k, i));
    payoffs[game.profile_key(k)] = std::move(row);
  }
  out["payoffs"] = std::move(payoffs);
  return out;
}

Json potential_to_json(const StrategicGame& game, const std::vector<Rational>& g) {
  Json out = Json::object();
  for (std::size_t k = 0; k < game.num_profiles(); ++k) out[game.profile_key(k)] = to_json(g[k]);
  return out;
}

Json cycle_to_json(const StrategicGame& game, const AdditiveCycle& cycle) {
  Json out;
  Json profiles = Json::array();
  for (std::size_t v : cycle.vertices) profiles.push_back(game.profile_key(v));
  out["cycle"] = std::move(profiles);
  out["sum"] = to_json(cycle.sum);
  return out;
}

}  // namespace mediator
