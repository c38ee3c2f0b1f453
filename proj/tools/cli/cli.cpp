#include "cli.hpp"

#include <algorithm>
#include <functional>
#include <ostream>
#include <sstream>

#include "mediator/consistency.hpp"
#include "mediator/fixtures.hpp"
#include "mediator/generator.hpp"
#include "mediator/implement.hpp"
#include "mediator/infograph.hpp"
#include "mediator/io.hpp"
#include "mediator/potential.hpp"

namespace mediator::cli {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string belief_cell(const Model& model, const Belief& belief) {
  if (!belief) return "empty";
  std::string out = "(";
  for (StateId s = 0; s < model.num_states(); ++s) {
    if (s) out += ",";
    out += (*belief)[s].str();
  }
  return out + ")";
}

// Rows are states, columns players, like the tables in the worked example.
std::string render_table(const Model& model, const JointBelief& jb) {
  std::vector<std::vector<std::string>> rows;
  std::vector<std::string> header{""};
  for (const auto& p : model.players()) header.push_back("player " + p.id);
  rows.push_back(header);
  for (StateId s = 0; s < model.num_states(); ++s) {
    std::vector<std::string> row{model.state_name(s)};
    for (PlayerId i = 0; i < model.num_players(); ++i) row.push_back(belief_cell(model, jb.at(s, i)));
    rows.push_back(std::move(row));
  }
  std::vector<std::size_t> width(header.size(), 0);
  for (const auto& row : rows) {
    for (std::size_t c = 0; c < row.size(); ++c) width[c] = std::max(width[c], row[c].size());
  }
  std::ostringstream out;
  for (const auto& row : rows) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      out << (c ? " | " : "") << row[c];
      if (c + 1 < row.size()) out << std::string(width[c] - row[c].size(), ' ');
    }
    out << "\n";
  }
  return out.str();
}

std::string describe_certificate(const Model& model, const Certificate& cert) {
  std::string out;
  if (cert.kind == CertificateKind::FCycle) {
    out = "F-cycle ";
    for (std::size_t k = 0; k < cert.path.size(); ++k) out += (k ? " -> " : "") + model.state_name(cert.path[k]);
  } else {
    out = "F-loop ";
    for (std::size_t k = 0; k < cert.pairs.size(); ++k) {
      out += (k ? ", " : "") + std::string("(") + model.state_name(cert.pairs[k].from) + "," +
             model.state_name(cert.pairs[k].to) + ")";
    }
  }
  return out + " with product " + cert.product.str();
}

Instance load_instance(const RunConfig& config, bool need_belief) {
  if (config.inputs.empty()) throw UsageError(config.subcommand + ": missing instance file");
  Instance instance = parse_instance(read_json_file(config.inputs.front()));
  if (need_belief && !instance.joint_belief) throw ParseError("instance has no \"joint_belief\"");
  return instance;
}

std::vector<PlayerId> player_group(const Model& model, const std::vector<std::string>& names) {
  std::vector<PlayerId> ids;
  for (const auto& name : names) ids.push_back(model.player_id(name));
  return ids;
}

void emit(std::ostream& out, const Json& doc) { out << doc.dump(2) << "\n"; }

int cmd_validate(const RunConfig& config, std::ostream& out) {
  Instance instance = load_instance(config, false);
  Json doc;
  doc["valid"] = true;
  doc["instance"] = instance.joint_belief ? to_json(instance.model, *instance.joint_belief) : to_json(instance.model);
  if (config.format == Format::Text) {
    out << "valid: " << instance.model.num_states() << " states, " << instance.model.num_players() << " players\n";
    if (instance.joint_belief) out << render_table(instance.model, *instance.joint_belief);
  } else {
    emit(out, doc);
  }
  return kOk;
}

int cmd_ckc(const RunConfig& config, std::ostream& out) {
  Instance instance = load_instance(config, false);
  Model model = instance.model;
  if (!config.players.empty()) {
    auto group = player_group(model, config.players);
    model = restrict_players(model, group);
  }
  InfoGraph graph = build_graph(model);
  CKCPartition comps = ckcs(graph);
  emit(out, to_json(model, comps, component_graph(graph, comps, model.mediator())));
  return kOk;
}

int cmd_check(const RunConfig& config, std::ostream& out) {
  Instance instance = load_instance(config, false);
  if (config.phi_path.empty()) throw UsageError("check: --phi is required");
  const Model& model = instance.model;
  InfoGraph graph = build_graph(model);
  PLFunction phi = PLFunction::from_labels(graph, parse_phi(model, read_json_file(config.phi_path)));
  auto solved = solve_f(graph, model.mediator(), phi);
  Json doc;
  if (auto* f = std::get_if<FLabeling>(&solved)) {
    doc["consistent"] = true;
    doc["f"] = to_json(model, *f);
  } else {
    doc["consistent"] = false;
    doc["certificate"] = to_json(model, std::get<Certificate>(solved));
  }
  if (config.format == Format::Text) {
    out << (doc["consistent"].get<bool>() ? "consistent\n"
                                          : "inconsistent: " +
                                                describe_certificate(model, std::get<Certificate>(solved)) + "\n");
  } else {
    emit(out, doc);
  }
  return doc["consistent"].get<bool>() ? kOk : kRejected;
}

int cmd_decide(const RunConfig& config, std::ostream& out) {
  Instance instance = load_instance(config, true);
  const Model& model = instance.model;
  Verdict verdict = config.players.empty()
                        ? decide_implementable(model, *instance.joint_belief)
                        : subgroup_check(model, player_group(model, config.players), *instance.joint_belief);
  if (config.format == Format::Json) {
    emit(out, to_json(config.players.empty() ? model : restrict_players(model, player_group(model, config.players)),
                      verdict));
    return verdict.implementable() ? kOk : kRejected;
  }
  if (verdict.implementable()) {
    const auto& impl = *verdict.implementation;
    Model shown = config.players.empty() ? model : restrict_players(model, player_group(model, config.players));
    out << "implementable\n" << "tau(" << impl.kernel.signal_name(impl.signal) << "|.):";
    for (StateId s = 0; s < model.num_states(); ++s) out << " " << model.state_name(s) << "=" << impl.kernel.prob(impl.signal, s);
    out << "\n" << render_table(shown, joint_posterior(shown, impl.kernel, impl.signal));
    return kOk;
  }
  const auto& rejection = *verdict.rejection;
  out << "rejected: " << to_string(rejection.reason);
  if (rejection.certificate) out << ": " << describe_certificate(model, *rejection.certificate);
  out << "\n";
  return kRejected;
}

SignalKernel load_kernel(const RunConfig& config, const Model& model) {
  if (config.kernel_path.empty()) throw UsageError(config.subcommand + ": --kernel is required");
  return parse_kernel(model, read_json_file(config.kernel_path));
}

int cmd_verify(const RunConfig& config, std::ostream& out) {
  Instance instance = load_instance(config, true);
  SignalKernel kernel = load_kernel(config, instance.model);
  std::size_t signal = kernel.signal(config.signal);
  auto mismatches = verify_exact(instance.model, kernel, signal, *instance.joint_belief);
  if (config.format == Format::Text) {
    out << (mismatches.empty() ? "match\n" : "mismatch\n");
    out << render_table(instance.model, joint_posterior(instance.model, kernel, signal));
  } else {
    emit(out, to_json(instance.model, mismatches));
  }
  return mismatches.empty() ? kOk : kMismatch;
}

int cmd_simulate(const RunConfig& config, std::ostream& out) {
  if (config.samples == 0) throw UsageError("simulate: --samples must be positive");
  if (!config.seed) throw UsageError("simulate: --seed is required");
  Instance instance = load_instance(config, true);
  SignalKernel kernel = load_kernel(config, instance.model);
  auto report = verify_monte_carlo(instance.model, kernel, kernel.signal(config.signal), *instance.joint_belief,
                                   config.samples, *config.seed);
  emit(out, to_json(instance.model, report));
  return report.flagged == 0 ? kOk : kMismatch;
}

int cmd_multi(const RunConfig& config, std::ostream& out) {
  Instance instance = load_instance(config, false);
  const Model& model = instance.model;
  std::vector<JointBelief> beliefs;
  for (std::size_t k = 1; k < config.inputs.size(); ++k) {
    Json doc = read_json_file(config.inputs[k]);
    const Json& entries = doc.contains("joint_belief") ? doc["joint_belief"] : doc;
    beliefs.push_back(validate_joint_belief(model, parse_raw_joint_belief(entries)));
  }
  if (beliefs.empty()) {
    if (!instance.joint_belief) throw UsageError("multi: no joint beliefs given");
    beliefs.push_back(*instance.joint_belief);
  }
  Semantics semantics;
  if (config.semantics == "pp") {
    semantics = Semantics::PP;
  } else if (config.semantics == "spp") {
    semantics = Semantics::SPP;
  } else {
    throw UsageError("multi: --semantics must be pp or spp");
  }
  MultiResult result = synthesize_multi(model, beliefs, semantics, config.degraded);
  emit(out, to_json(model, result));
  return result.failure == MultiFailure::None ? kOk : kRejected;
}

int cmd_potential(const RunConfig& config, std::ostream& out) {
  if (config.inputs.empty()) throw UsageError("potential: missing game file");
  StrategicGame game = parse_game(read_json_file(config.inputs.front()));
  auto result = recover_potential(game);
  Json doc;
  if (auto* g = std::get_if<std::vector<Rational>>(&result)) {
    doc["potential_game"] = true;
    doc["potential"] = potential_to_json(game, *g);
  } else {
    doc["potential_game"] = false;
    doc["violation"] = cycle_to_json(game, std::get<AdditiveCycle>(result));
  }
  emit(out, doc);
  return doc["potential_game"].get<bool>() ? kOk : kRejected;
}

struct Checks {
  Json results = Json::object();
  bool all = true;

  void add(const std::string& name, bool ok) {
    results[name] = ok;
    all = all && ok;
  }
};

int demo_negotiation(const RunConfig& config, std::ostream& out) {
  using fixtures::Action;
  Model model = fixtures::negotiation_model();
  Checks checks;
  Json doc;

  Verdict infeasible = decide_implementable(model, fixtures::negotiation_belief(model, Rational(1, 3), Rational(3, 4)));
  doc["attack_compromise_pair"] = to_json(model, infeasible);
  bool loop = !infeasible.implementable() && infeasible.rejection->certificate &&
              infeasible.rejection->certificate->kind == CertificateKind::FLoop;
  checks.add("pair_rejected_by_loop", loop);
  checks.add("loop_product_is_1/6", loop && infeasible.rejection->certificate->product == Rational(1, 6));

  Json matched = Json::array();
  for (Rational p : {Rational(1, 3), Rational(1, 4), Rational(1, 2)}) {
    Verdict v = decide_implementable(model, fixtures::negotiation_belief(model, p, p));
    matched.push_back({{"p", p.str()}, {"implementable", v.implementable()}});
    checks.add("matched_p=" + p.str() + "_implementable", v.implementable());
  }
  doc["matched"] = std::move(matched);

  // Player 1 at {w1,w2} believing (1/3, 2/3) against player 2's dominant
  // actions (C at w1, A at w2).
  auto p1 = [](Action own) {
    return Rational(1, 3) * fixtures::negotiation_payoff(1, own, Action::Compromise).first +
           Rational(2, 3) * fixtures::negotiation_payoff(2, own, Action::Attack).first;
  };
  // Player 2 at {w3,w4} believing (3/4, 1/4) against player 1's dominant
  // actions (A at w3, C at w4).
  auto p2 = [](Action own) {
    return Rational(3, 4) * fixtures::negotiation_payoff(3, Action::Attack, own).second +
           Rational(1, 4) * fixtures::negotiation_payoff(4, Action::Compromise, own).second;
  };
  doc["indifference"] = {
      {"player1", {{"attack", p1(Action::Attack).str()}, {"compromise", p1(Action::Compromise).str()}}},
      {"player2", {{"attack", p2(Action::Attack).str()}, {"compromise", p2(Action::Compromise).str()}}}};
  checks.add("player1_indifferent_at_-8/3",
             p1(Action::Attack) == Rational(-8, 3) && p1(Action::Compromise) == Rational(-8, 3));
  checks.add("player2_indifferent_at_-3", p2(Action::Attack) == Rational(-3) && p2(Action::Compromise) == Rational(-3));
  doc["checks"] = checks.results;

  if (config.format == Format::Text) {
    out << "pair (1/3,2/3) & (3/4,1/4): "
        << (loop ? describe_certificate(model, *infeasible.rejection->certificate) : std::string("not rejected"))
        << "\n";
    out << "player 1: A -> " << p1(Action::Attack) << ", C -> " << p1(Action::Compromise) << "\n";
    out << "player 2: A -> " << p2(Action::Attack) << ", C -> " << p2(Action::Compromise) << "\n";
    for (const auto& [name, ok] : checks.results.items()) out << (ok.get<bool>() ? "ok   " : "FAIL ") << name << "\n";
  } else {
    emit(out, doc);
  }
  return checks.all ? kOk : kMismatch;
}

int demo_example1(const RunConfig& config, std::ostream& out) {
  Model model = fixtures::example1_model();
  JointBelief table1 = fixtures::example1_table1(model);
  JointBelief table2 = fixtures::example1_table2(model);
  Checks checks;
  Json doc;

  SignalKernel silent = uninformative_kernel(model);
  checks.add("uninformative_kernel_gives_table1", verify_exact(model, silent, 0, table1).empty());

  Verdict verdict = decide_implementable(model, table2);
  doc["table2"] = to_json(model, verdict);
  bool ratios = false;
  if (verdict.implementable()) {
    const auto& impl = *verdict.implementation;
    const Rational base = impl.kernel.prob(impl.signal, 0);
    const std::vector<Rational> expected{1, 2, 2, 1, 2};
    ratios = true;
    for (StateId s = 0; s < 5; ++s) ratios = ratios && impl.kernel.prob(impl.signal, s) / base == expected[s];
    checks.add("synthesized_kernel_gives_table2", verify_exact(model, impl.kernel, impl.signal, table2).empty());
  } else {
    checks.add("synthesized_kernel_gives_table2", false);
  }
  checks.add("table2_implementable", verdict.implementable());
  checks.add("kernel_ratios_1:2:2:1:2", ratios);
  checks.add("stated_kernel_gives_table2", verify_exact(model, fixtures::example1_kernel(), 0, table2).empty());

  Verdict modified = decide_implementable(model, fixtures::example1_table2_modified(model));
  doc["table2_modified"] = to_json(model, modified);
  checks.add("modified_table2_rejected_by_loop",
             !modified.implementable() && modified.rejection->certificate &&
                 modified.rejection->certificate->kind == CertificateKind::FLoop &&
                 modified.rejection->certificate->product != Rational(1));
  doc["checks"] = checks.results;

  if (config.format == Format::Text) {
    out << "beliefs without a mediator\n" << render_table(model, joint_posterior(model, silent, 0));
    if (verdict.implementable()) {
      const auto& impl = *verdict.implementation;
      out << "\nbeliefs after signal " << impl.kernel.signal_name(impl.signal) << "\n"
          << render_table(model, joint_posterior(model, impl.kernel, impl.signal));
    }
    if (modified.rejection && modified.rejection->certificate) {
      out << "\nmodified beliefs: " << describe_certificate(model, *modified.rejection->certificate) << "\n";
    }
    for (const auto& [name, ok] : checks.results.items()) out << (ok.get<bool>() ? "ok   " : "FAIL ") << name << "\n";
  } else {
    emit(out, doc);
  }
  return checks.all ? kOk : kMismatch;
}

int cmd_demo(const RunConfig& config, std::ostream& out) {
  if (config.inputs.empty()) throw UsageError("demo: expected 'negotiation' or 'example1'");
  if (config.inputs.front() == "negotiation") return demo_negotiation(config, out);
  if (config.inputs.front() == "example1") return demo_example1(config, out);
  throw UsageError("demo: unknown demo '" + config.inputs.front() + "'");
}

}  // namespace

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  static const std::vector<std::pair<std::string, std::function<int(const RunConfig&, std::ostream&)>>> commands = {
      {"validate", cmd_validate}, {"ckc", cmd_ckc},           {"check", cmd_check},
      {"decide", cmd_decide},     {"verify", cmd_verify},     {"simulate", cmd_simulate},
      {"multi", cmd_multi},       {"potential", cmd_potential}, {"demo", cmd_demo},
  };
  auto fail = [&](const std::string& kind, const std::string& message, Json details = Json()) {
    Json doc;
    doc["error"] = kind;
    doc["message"] = message;
    if (!details.is_null()) doc["violations"] = std::move(details);
    emit(out, doc);
    err << "error: " << message << "\n";
    return kInputError;
  };
  try {
    for (const auto& [name, handler] : commands) {
      if (name == config.subcommand) return handler(config, out);
    }
    return fail("UsageError", "unknown subcommand '" + config.subcommand + "'");
  } catch (const ValidationError& e) {
    Json list = Json::array();
    for (const auto& v : e.violations()) list.push_back({{"kind", std::string(to_string(v.kind))}, {"message", v.message}});
    return fail("SchemaViolation", e.what(), std::move(list));
  } catch (const FileNotFound& e) {
    return fail("FileNotFound", e.what());
  } catch (const ParseError& e) {
    return fail("ParseError", e.what());
  } catch (const UsageError& e) {
    return fail("UsageError", e.what());
  } catch (const Error& e) {
    return fail(std::string(to_string(e.kind())), e.what());
  }
}

}  // namespace mediator::cli
