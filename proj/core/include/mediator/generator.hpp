#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "mediator/implement.hpp"
#include "mediator/model.hpp"

namespace mediator {

struct PosteriorFamily {
  Distribution prior;
  std::vector<Distribution> members;
};

// Throws Error(InvalidFamily): empty family, size mismatch, negative entries,
// members not summing to one, or a prior that is not strictly positive.
void validate_family(const PosteriorFamily& family);

// mu_tau(.|signal). Throws Error(SignalHasZeroProbability).
Distribution posterior_over_omega(const Model& model, const SignalKernel& kernel, std::size_t signal);

// Either weights q (q >= 0, sum q = 1, sum q_i mu_i = mu) or an option u with
// E_{mu_i}[u] >= 0 for every member and E_mu[u] < 0. Options are scaled to
// coprime integers.
struct PPVerdict {
  bool holds = false;
  std::vector<Rational> weights;
  std::vector<Rational> witness;
};

PPVerdict check_pp(const PosteriorFamily& family);

// SPP holds when every member can receive positive weight; `weights` is then
// the average of the distinct per-member maximisers. Otherwise
// `failing_member` is a j with max q_j = 0 and `witness` has E_mu[u] = 0,
// E_{mu_i}[u] >= 0 and E_{mu_j}[u] > 0. When PP itself fails, `pp` carries
// its verdict and `failing_member` is empty.
struct SPPVerdict {
  bool holds = false;
  PPVerdict pp;
  std::vector<Rational> weights;
  std::optional<std::size_t> failing_member;
  std::vector<Rational> witness;
};

SPPVerdict check_spp(const PosteriorFamily& family);

// E_dist[u].
Rational expectation(const Distribution& dist, const std::vector<Rational>& u);

enum class Semantics { PP, SPP };

enum class MultiFailure { None, NotPP, NotSPP, PerMemberRejected };

std::string_view to_string(MultiFailure failure);

struct MultiResult {
  MultiFailure failure = MultiFailure::None;
  std::optional<SignalKernel> kernel;
  std::vector<Distribution> posteriors;       // distinct family members, in order
  std::vector<Rational> weights;              // per distinct member
  std::vector<std::size_t> member_posterior;  // input member -> distinct index
  bool degraded = false;                      // SPP failed, PP weights used
  PPVerdict pp;
  std::optional<SPPVerdict> spp;
  std::optional<std::size_t> rejected_member;
  std::optional<Verdict> member_verdict;
};

// One kernel whose signals induce (a subset of) `family`: tau(s_k|w) =
// q_k mu_k(w) / mu(w) over distinct members with positive weight. With SPP
// semantics and allow_degraded, a PP-only family still yields a kernel.
MultiResult synthesize_from_family(const Model& model, const PosteriorFamily& family,
                                   Semantics semantics, bool allow_degraded = false);

// Decides each joint belief, takes the posteriors its kernel induces and
// synthesizes one kernel for the whole family.
MultiResult synthesize_multi(const Model& model, std::span<const JointBelief> beliefs,
                             Semantics semantics, bool allow_degraded = false);

}  // namespace mediator
