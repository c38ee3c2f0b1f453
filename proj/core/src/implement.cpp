#include "mediator/implement.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

namespace mediator {

std::string_view to_string(RejectReason reason) {
  switch (reason) {
    case RejectReason::OmegaPlusEmpty: return "OmegaPlusEmpty";
    case RejectReason::OmegaPlusNotMeasurable: return "OmegaPlusNotMeasurable";
    case RejectReason::OffSupportIncoherent: return "OffSupportIncoherent";
    case RejectReason::PhiInconsistentAcrossPlayers: return "PhiInconsistentAcrossPlayers";
    case RejectReason::Certificate: return "Certificate";
  }
  return "?";
}

OmegaPlus omega_plus(const Model& model, const JointBelief& jb) {
  OmegaPlus plus;
  plus.member.assign(model.num_states(), false);
  for (StateId s = 0; s < model.num_states(); ++s) {
    // Positivity is player-independent for a valid joint belief; any player works.
    for (PlayerId i = 0; i < model.num_players(); ++i) {
      if (jb.diagonal(s, i).is_positive()) {
        plus.member[s] = true;
        break;
      }
    }
    if (plus.member[s]) plus.states.push_back(s);
  }
  const auto& cells = model.mediator().cells();
  for (std::size_t c = 0; c < cells.size(); ++c) {
    bool any = false;
    bool all = true;
    for (StateId s : cells[c]) {
      any = any || plus.member[s];
      all = all && plus.member[s];
    }
    if (any && !all) {
      plus.measurable = false;
      plus.witness_cell = c;
      break;
    }
  }
  return plus;
}

std::variant<JointBeliefPhi, PhiConflict> phi_from_jb(const Model& model, const JointBelief& jb,
                                                     const OmegaPlus& plus) {
  InfoGraph graph = restrict_states(build_graph(model), plus.states);
  EdgeLabels labels;
  for (const auto& e : graph.edges()) {
    PhiConflict seen{e.a, e.b, {}};
    for (PlayerId i : e.players) {
      Rational value = jb.diagonal(e.a, i) / jb.diagonal(e.b, i) * model.prior(e.b) / model.prior(e.a);
      seen.values.emplace_back(i, value);
    }
    for (const auto& [player, value] : seen.values) {
      if (value != seen.values.front().second) return seen;
    }
    labels[{e.a, e.b}] = seen.values.front().second;
  }
  PLFunction phi = PLFunction::from_labels(graph, labels);
  return JointBeliefPhi{std::move(graph), std::move(phi)};
}

Implementation synthesize_tau(const Model& model, const FLabeling& f, const OmegaPlus& plus) {
  Rational max_f;
  for (StateId s : plus.states) max_f = std::max(max_f, f.values[s]);
  return synthesize_tau(model, f, plus, (Rational(2) * max_f).reciprocal());
}

Implementation synthesize_tau(const Model& model, const FLabeling& f, const OmegaPlus& plus,
                              const Rational& scale) {
  const std::size_t n = model.num_states();
  std::vector<std::vector<Rational>> table(2, std::vector<Rational>(n));
  for (StateId s = 0; s < n; ++s) {
    table[0][s] = plus.member[s] ? scale * f.values[s] : Rational(0);
    table[1][s] = Rational(1) - table[0][s];
  }
  SignalKernel kernel({"s", "s0"}, std::move(table));
  validate_kernel(model, kernel);
  return Implementation{f, std::move(kernel), 0};
}

namespace {

// Entries outside omega_plus are forced by the zero-likelihood convention:
// they equal the entry of a surviving cell-mate, or the empty marker.
std::optional<std::pair<StateId, PlayerId>> off_support_violation(const Model& model,
                                                                  const JointBelief& jb,
                                                                  const OmegaPlus& plus) {
  for (StateId s = 0; s < model.num_states(); ++s) {
    if (plus.member[s]) continue;
    for (PlayerId i = 0; i < model.num_players(); ++i) {
      std::optional<StateId> survivor;
      for (StateId t : model.partition(i).cell_containing(s)) {
        if (plus.member[t]) {
          survivor = t;
          break;
        }
      }
      const Belief& expected = survivor ? jb.at(*survivor, i) : Belief{};
      if (jb.at(s, i) != expected) return std::pair(s, i);
    }
  }
  return std::nullopt;
}

Rejection reject(RejectReason reason) { return Rejection{reason, {}, {}, {}, {}}; }

}  // namespace

Verdict decide_implementable(const Model& model, const JointBelief& jb) {
  Verdict verdict;
  verdict.plus = omega_plus(model, jb);
  const auto& plus = verdict.plus;
  if (plus.states.empty()) {
    verdict.rejection = reject(RejectReason::OmegaPlusEmpty);
    return verdict;
  }
  if (!plus.measurable) {
    verdict.rejection = reject(RejectReason::OmegaPlusNotMeasurable);
    verdict.rejection->cell = plus.witness_cell;
    return verdict;
  }
  if (auto entry = off_support_violation(model, jb, plus)) {
    verdict.rejection = reject(RejectReason::OffSupportIncoherent);
    verdict.rejection->entry = entry;
    return verdict;
  }
  auto derived = phi_from_jb(model, jb, plus);
  if (auto* conflict = std::get_if<PhiConflict>(&derived)) {
    verdict.rejection = reject(RejectReason::PhiInconsistentAcrossPlayers);
    verdict.rejection->conflict = std::move(*conflict);
    return verdict;
  }
  verdict.phi = std::move(std::get<JointBeliefPhi>(derived));
  auto solved = solve_f(verdict.phi->graph, model.mediator(), verdict.phi->phi);
  if (auto* cert = std::get_if<Certificate>(&solved)) {
    verdict.rejection = reject(RejectReason::Certificate);
    verdict.rejection->certificate = std::move(*cert);
    return verdict;
  }
  verdict.implementation = synthesize_tau(model, std::get<FLabeling>(solved), plus);
  if (!verify_exact(model, verdict.implementation->kernel, verdict.implementation->signal, jb).empty()) {
    throw std::logic_error("decide_implementable: synthesized kernel does not reproduce the joint belief");
  }
  return verdict;
}

std::vector<Mismatch> verify_exact(const Model& model, const SignalKernel& kernel,
                                   std::size_t signal, const JointBelief& jb) {
  JointBelief got = joint_posterior(model, kernel, signal);
  std::vector<Mismatch> out;
  for (StateId s = 0; s < model.num_states(); ++s) {
    for (PlayerId i = 0; i < model.num_players(); ++i) {
      if (got.at(s, i) != jb.at(s, i)) out.push_back({s, i, jb.at(s, i), got.at(s, i)});
    }
  }
  return out;
}

namespace {

// Cumulative sampler over non-negative rational weights summing to one; uses
// the top 53 bits of the engine so draws are identical on every platform.
class Sampler {
 public:
  explicit Sampler(const std::vector<Rational>& weights) {
    double total = 0.0;
    for (const auto& w : weights) {
      total += w.to_double();
      cumulative_.push_back(total);
    }
  }

  std::size_t draw(std::mt19937_64& engine) const {
    double u = static_cast<double>(engine() >> 11) * 0x1.0p-53 * cumulative_.back();
    auto it = std::upper_bound(cumulative_.begin(), cumulative_.end(), u);
    std::size_t k = static_cast<std::size_t>(it - cumulative_.begin());
    return std::min(k, cumulative_.size() - 1);
  }

 private:
  std::vector<double> cumulative_;
};

}  // namespace

MonteCarloReport verify_monte_carlo(const Model& model, const SignalKernel& kernel,
                                    std::size_t signal, const JointBelief& jb,
                                    std::uint64_t samples, std::uint64_t seed,
                                    const MonteCarloOptions& options) {
  const std::size_t n = model.num_states();
  std::mt19937_64 engine(seed);
  Sampler states(model.prior());
  std::vector<Sampler> signals;
  for (StateId s = 0; s < n; ++s) {
    std::vector<Rational> column;
    for (std::size_t k = 0; k < kernel.num_signals(); ++k) column.push_back(kernel.prob(k, s));
    signals.emplace_back(column);
  }

  std::vector<std::uint64_t> state_hits(n, 0);
  MonteCarloReport report;
  report.samples = samples;
  for (std::uint64_t k = 0; k < samples; ++k) {
    StateId s = states.draw(engine);
    if (signals[s].draw(engine) != signal) continue;
    ++state_hits[s];
    ++report.signal_hits;
  }

  bool any_compared = false;
  for (PlayerId i = 0; i < model.num_players(); ++i) {
    const auto& partition = model.partition(i);
    for (std::size_t c = 0; c < partition.size(); ++c) {
      const auto& cell = partition.cell(c);
      std::uint64_t hits = 0;
      for (StateId s : cell) hits += state_hits[s];
      if (hits == 0) continue;
      if (hits < options.min_cell_hits) {
        report.low_confidence = true;
        continue;
      }
      any_compared = true;
      const Belief& belief = jb.at(cell.front(), i);
      for (StateId s : cell) {
        MonteCarloEntry entry{i, c, s, hits, 0.0, 0.0, 0.0, 0.0};
        entry.empirical = static_cast<double>(state_hits[s]) / static_cast<double>(hits);
        entry.expected = belief ? (*belief)[s].to_double() : 0.0;
        entry.deviation = std::abs(entry.empirical - entry.expected);
        double sigma = std::sqrt(entry.empirical * (1.0 - entry.empirical) / static_cast<double>(hits));
        entry.tolerance = std::max(options.tolerance_floor, options.sigma_multiplier * sigma);
        report.max_deviation = std::max(report.max_deviation, entry.deviation);
        if (entry.deviation > entry.tolerance || !belief) ++report.flagged;
        report.entries.push_back(entry);
      }
    }
  }
  if (!any_compared) report.low_confidence = true;
  return report;
}

Verdict subgroup_check(const Model& model, std::span<const PlayerId> group, const JointBelief& jb) {
  Model restricted = restrict_players(model, group);
  std::vector<PlayerId> ids(group.begin(), group.end());
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
  JointBelief sub(model.num_states(), ids.size());
  for (StateId s = 0; s < model.num_states(); ++s) {
    for (std::size_t k = 0; k < ids.size(); ++k) sub.at(s, k) = jb.at(s, ids[k]);
  }
  return decide_implementable(restricted, sub);
}

}  // namespace mediator
