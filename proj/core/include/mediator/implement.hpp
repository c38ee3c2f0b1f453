#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "mediator/consistency.hpp"
#include "mediator/infograph.hpp"
#include "mediator/model.hpp"

namespace mediator {

// States with positive on-diagonal belief, and whether they form a union of
// mediator cells.
struct OmegaPlus {
  std::vector<StateId> states;
  std::vector<bool> member;
  bool measurable = true;
  std::optional<std::size_t> witness_cell;  // a mediator cell split by the set
};

OmegaPlus omega_plus(const Model& model, const JointBelief& jb);

struct PhiConflict {
  StateId a;
  StateId b;
  std::vector<std::pair<PlayerId, Rational>> values;  // phi(a, b) as seen by each player
};

// phi_JB on the graph restricted to omega_plus, with the graph it lives on.
struct JointBeliefPhi {
  InfoGraph graph;
  PLFunction phi;
};

std::variant<JointBeliefPhi, PhiConflict> phi_from_jb(const Model& model, const JointBelief& jb,
                                                     const OmegaPlus& plus);

enum class RejectReason {
  OmegaPlusEmpty,
  OmegaPlusNotMeasurable,
  OffSupportIncoherent,
  PhiInconsistentAcrossPlayers,
  Certificate,
};

std::string_view to_string(RejectReason reason);

struct Rejection {
  RejectReason reason;
  std::optional<std::size_t> cell;                        // OmegaPlusNotMeasurable
  std::optional<std::pair<StateId, PlayerId>> entry;      // OffSupportIncoherent
  std::optional<PhiConflict> conflict;                    // PhiInconsistentAcrossPlayers
  std::optional<Certificate> certificate;                 // Certificate
};

struct Implementation {
  FLabeling f;
  SignalKernel kernel;
  std::size_t signal;
};

struct Verdict {
  OmegaPlus plus;
  std::optional<JointBeliefPhi> phi;  // present once phi_JB was derived
  std::optional<Implementation> implementation;
  std::optional<Rejection> rejection;

  bool implementable() const { return implementation.has_value(); }
};

// Two-signal kernel {s, s0}: tau(s|w) = f(w) / (2 max f) on omega_plus, zero
// elsewhere; s0 takes the rest. The designated signal is index 0.
Implementation synthesize_tau(const Model& model, const FLabeling& f, const OmegaPlus& plus);
// Same with an explicit scale c in (0, 1/max f].
Implementation synthesize_tau(const Model& model, const FLabeling& f, const OmegaPlus& plus,
                              const Rational& scale);

// Precondition: jb has no joint_belief_violations.
Verdict decide_implementable(const Model& model, const JointBelief& jb);

struct Mismatch {
  StateId state;
  PlayerId player;
  Belief expected;
  Belief got;
};

// Entry-by-entry exact comparison of the joint posterior of `signal` with jb.
std::vector<Mismatch> verify_exact(const Model& model, const SignalKernel& kernel,
                                   std::size_t signal, const JointBelief& jb);

struct MonteCarloEntry {
  PlayerId player;
  std::size_t cell;
  StateId state;
  std::uint64_t hits;
  double empirical;
  double expected;
  double deviation;
  double tolerance;
};

struct MonteCarloReport {
  std::uint64_t samples = 0;
  std::uint64_t signal_hits = 0;
  std::vector<MonteCarloEntry> entries;
  double max_deviation = 0.0;
  std::size_t flagged = 0;
  bool low_confidence = false;
};

struct MonteCarloOptions {
  std::uint64_t min_cell_hits = 100;
  double tolerance_floor = 0.01;
  double sigma_multiplier = 4.0;
};

// Samples states from the prior and signals from the kernel; compares the
// empirical posterior on every player cell hit at least min_cell_hits times.
MonteCarloReport verify_monte_carlo(const Model& model, const SignalKernel& kernel,
                                    std::size_t signal, const JointBelief& jb,
                                    std::uint64_t samples, std::uint64_t seed,
                                    const MonteCarloOptions& options = {});

// Verdict when only the players in `group` observe their partitions; the
// joint belief keeps those players' columns.
Verdict subgroup_check(const Model& model, std::span<const PlayerId> group, const JointBelief& jb);

}  // namespace mediator
