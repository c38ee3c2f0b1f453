#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <utility>
#include <variant>
#include <vector>

#include "mediator/infograph.hpp"
#include "mediator/model.hpp"
#include "mediator/rational.hpp"

namespace mediator {

using DirectedEdge = std::pair<StateId, StateId>;

// Raw ratio labels on directed edges, possibly with only one direction given.
using EdgeLabels = std::map<DirectedEdge, Rational>;

struct ReciprocityViolation {
  StateId a;
  StateId b;
  Rational forward;
  Rational backward;
};

// Checks phi(a,b) * phi(b,a) == 1 on every edge where both directions are
// labelled. Returns the first offending edge.
std::optional<ReciprocityViolation> check_reciprocity(const InfoGraph& graph,
                                                      const EdgeLabels& labels);

// Posterior likelihood function: strictly positive and reciprocal labels on
// every edge of a graph, both directions stored.
class PLFunction {
 public:
  // Fills the missing direction of each edge by reciprocity. Throws
  // Error(InvalidLabel) for non-edges, unlabelled edges or non-positive
  // values, and Error(ReciprocityViolation) when both given directions
  // disagree.
  static PLFunction from_labels(const InfoGraph& graph, const EdgeLabels& labels);

  // phi(a, b); throws Error(InvalidLabel) if (a, b) is not an edge.
  const Rational& operator()(StateId a, StateId b) const;
  const EdgeLabels& labels() const { return values_; }

 private:
  EdgeLabels values_;
};

// phi(a,b) := f(a) / f(b) on every edge of `graph`.
PLFunction pl_from_function(const InfoGraph& graph, const std::vector<Rational>& f);

enum class CertificateKind { FCycle, FLoop };

struct LoopPair {
  StateId from;
  StateId to;

  friend bool operator==(const LoopPair&, const LoopPair&) = default;
};

// Explicit violation of internal or external consistency.
//
// FCycle: `path` = w1 ... w(n+1), consecutive states adjacent, w(n+1) in the
// mediator cell of w1; product of phi along the path.
// FLoop: `pairs` = (w_i, wbar_i); w_i and wbar_i share a component, wbar_i and
// w_(i+1) do not but share a mediator cell (cyclically); product of the
// extended phi(w_i, wbar_i).
struct Certificate {
  CertificateKind kind;
  std::vector<StateId> path;
  std::vector<LoopPair> pairs;
  Rational product;
};

// Within-component labels g with phi(a,b) = g(a)/g(b) on every edge; g = 1
// at each component's anchor (its smallest state).
class ExtendedPL {
 public:
  ExtendedPL(CKCPartition components, std::vector<Rational> labels);

  const CKCPartition& components() const { return components_; }
  const Rational& label(StateId state) const { return labels_[state]; }
  StateId anchor(std::size_t component) const { return components_.components[component].front(); }
  // g(a)/g(b). Throws Error(NotSameComponent).
  Rational extend(StateId a, StateId b) const;

 private:
  CKCPartition components_;
  std::vector<Rational> labels_;
};

// Mediator-measurable positive labelling f with phi(a,b) = f(a)/f(b). Entries
// for states outside the graph are zero.
struct FLabeling {
  std::vector<StateId> states;
  std::vector<Rational> values;
};

// Internal consistency via one BFS tree per component.
std::variant<ExtendedPL, Certificate> check_inc(const InfoGraph& graph, const Partition& mediator,
                                                const PLFunction& phi);

Rational extend_pl(const ExtendedPL& extended, StateId a, StateId b);

// External consistency via a ratio-weighted union-find over components.
std::optional<Certificate> check_exc(const InfoGraph& graph, const Partition& mediator,
                                     const ExtendedPL& extended);

// Runs check_inc then check_exc and composes f. Each connected piece of the
// component graph is anchored so its smallest component has scale 1.
std::variant<FLabeling, Certificate> solve_f(const InfoGraph& graph, const Partition& mediator,
                                             const PLFunction& phi);

// mu_phi(.|C) for component `component`, normalised from the anchor; the
// second overload normalises from an explicit anchor state in C. Throws
// Error(NotAComponent).
Distribution induced_component_distribution(const ExtendedPL& extended, std::size_t component);
Distribution induced_component_distribution(const ExtendedPL& extended, std::size_t component,
                                            StateId anchor);

// Exhaustive oracle: enumerates simple F-cycles with at most `max_len` edges
// and F-loops with at most `max_len` pairs visiting each component at most
// once, evaluating products directly from `phi`.
std::optional<Certificate> brute_force_check(const InfoGraph& graph, const Partition& mediator,
                                             const PLFunction& phi, std::size_t max_len);

// Recomputes the product of a certificate from raw phi after checking its
// structure. Throws Error(MalformedCertificate).
Rational evaluate_certificate(const InfoGraph& graph, const Partition& mediator,
                              const PLFunction& phi, const Certificate& certificate);

// Rotation/reversal with the lexicographically smallest state sequence.
Certificate canonicalize(Certificate certificate);

}  // namespace mediator
