#include "mediator/generator.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "mediator/simplex.hpp"

namespace mediator {

void validate_family(const PosteriorFamily& family) {
  auto fail = [](const std::string& why) { return Error(ErrorKind::InvalidFamily, why); };
  if (family.members.empty()) throw fail("family has no members");
  if (family.prior.empty()) throw fail("prior is empty");
  Rational total;
  for (const auto& p : family.prior) {
    if (!p.is_positive()) throw fail("prior must be strictly positive");
    total += p;
  }
  if (total != Rational(1)) throw fail("prior sums to " + total.str());
  for (std::size_t k = 0; k < family.members.size(); ++k) {
    const auto& member = family.members[k];
    if (member.size() != family.prior.size()) throw fail("member " + std::to_string(k) + " has wrong length");
    Rational sum;
    for (const auto& p : member) {
      if (p.sign() < 0) throw fail("member " + std::to_string(k) + " has a negative entry");
      sum += p;
    }
    if (sum != Rational(1)) throw fail("member " + std::to_string(k) + " sums to " + sum.str());
  }
}

Distribution posterior_over_omega(const Model& model, const SignalKernel& kernel, std::size_t signal) {
  Rational total = signal_probability(model, kernel, signal);
  if (!total.is_positive()) {
    throw Error(ErrorKind::SignalHasZeroProbability,
                "signal " + kernel.signal_name(signal) + " has zero probability");
  }
  Distribution out(model.num_states());
  for (StateId s = 0; s < model.num_states(); ++s) out[s] = model.prior(s) * kernel.prob(signal, s) / total;
  return out;
}

Rational expectation(const Distribution& dist, const std::vector<Rational>& u) {
  Rational sum;
  for (std::size_t k = 0; k < dist.size(); ++k) sum += dist[k] * u[k];
  return sum;
}

namespace {

// Scales to integers with gcd 1.
std::vector<Rational> primitive(std::vector<Rational> u) {
  mpz_class lcm = 1;
  for (const auto& v : u) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), v.denominator().get_mpz_t());
  mpz_class gcd = 0;
  for (const auto& v : u) {
    mpz_class scaled = v.numerator() * (lcm / v.denominator());
    mpz_gcd(gcd.get_mpz_t(), gcd.get_mpz_t(), scaled.get_mpz_t());
  }
  if (gcd == 0) return u;
  for (auto& v : u) v = Rational(mpq_class(v.numerator() * (lcm / v.denominator()) / gcd));
  return u;
}

Matrix member_columns(const PosteriorFamily& family) {
  Matrix a(family.prior.size(), std::vector<Rational>(family.members.size()));
  for (std::size_t s = 0; s < family.prior.size(); ++s) {
    for (std::size_t k = 0; k < family.members.size(); ++k) a[s][k] = family.members[k][s];
  }
  return a;
}

}  // namespace

PPVerdict check_pp(const PosteriorFamily& family) {
  validate_family(family);
  Matrix a = member_columns(family);
  std::vector<Rational> zero(family.members.size());
  LPResult lp = minimize(a, family.prior, zero);
  PPVerdict verdict;
  if (lp.status == LPStatus::Optimal) {
    verdict.holds = true;
    verdict.weights = std::move(lp.x);
    return verdict;
  }
  verdict.witness = primitive(std::move(lp.farkas));
  return verdict;
}

SPPVerdict check_spp(const PosteriorFamily& family) {
  SPPVerdict verdict;
  verdict.pp = check_pp(family);
  if (!verdict.pp.holds) return verdict;

  const std::size_t n = family.members.size();
  Matrix a = member_columns(family);
  std::vector<std::vector<Rational>> maximisers;
  for (std::size_t j = 0; j < n; ++j) {
    std::vector<Rational> cost(n);
    cost[j] = Rational(-1);
    LPResult lp = minimize(a, family.prior, cost);
    if (lp.status != LPStatus::Optimal) throw std::logic_error("check_spp: bounded LP not optimal");
    if (lp.x[j].is_zero()) {
      // Dual of max q_j: A^T y <= -e_j with mu.y = 0, so u = -y separates.
      std::vector<Rational> u;
      for (const auto& v : lp.dual) u.push_back(-v);
      verdict.failing_member = j;
      verdict.witness = primitive(std::move(u));
      return verdict;
    }
    if (std::find(maximisers.begin(), maximisers.end(), lp.x) == maximisers.end()) {
      maximisers.push_back(std::move(lp.x));
    }
  }
  verdict.holds = true;
  verdict.weights.assign(n, Rational(0));
  for (const auto& x : maximisers) {
    for (std::size_t k = 0; k < n; ++k) verdict.weights[k] += x[k];
  }
  Rational count(static_cast<long>(maximisers.size()));
  for (auto& w : verdict.weights) w /= count;
  return verdict;
}

std::string_view to_string(MultiFailure failure) {
  switch (failure) {
    case MultiFailure::None: return "None";
    case MultiFailure::NotPP: return "NotPP";
    case MultiFailure::NotSPP: return "NotSPP";
    case MultiFailure::PerMemberRejected: return "PerMemberRejected";
  }
  return "?";
}

MultiResult synthesize_from_family(const Model& model, const PosteriorFamily& family,
                                   Semantics semantics, bool allow_degraded) {
  validate_family(family);
  MultiResult result;
  for (const auto& member : family.members) {
    auto it = std::find(result.posteriors.begin(), result.posteriors.end(), member);
    result.member_posterior.push_back(static_cast<std::size_t>(it - result.posteriors.begin()));
    if (it == result.posteriors.end()) result.posteriors.push_back(member);
  }
  PosteriorFamily distinct{family.prior, result.posteriors};

  std::vector<Rational> weights;
  if (semantics == Semantics::SPP) {
    result.spp = check_spp(distinct);
    result.pp = result.spp->pp;
    if (!result.pp.holds) {
      result.failure = MultiFailure::NotPP;
      return result;
    }
    if (result.spp->holds) {
      weights = result.spp->weights;
    } else if (allow_degraded) {
      result.degraded = true;
      weights = result.pp.weights;
    } else {
      result.failure = MultiFailure::NotSPP;
      return result;
    }
  } else {
    result.pp = check_pp(distinct);
    if (!result.pp.holds) {
      result.failure = MultiFailure::NotPP;
      return result;
    }
    weights = result.pp.weights;
  }
  result.weights = weights;

  std::vector<std::string> names;
  std::vector<std::vector<Rational>> table;
  for (std::size_t k = 0; k < distinct.members.size(); ++k) {
    if (weights[k].is_zero()) continue;
    names.push_back("s" + std::to_string(k + 1));
    std::vector<Rational> row(model.num_states());
    for (StateId s = 0; s < model.num_states(); ++s) {
      row[s] = weights[k] * distinct.members[k][s] / family.prior[s];
    }
    table.push_back(std::move(row));
  }
  SignalKernel kernel(std::move(names), std::move(table));
  validate_kernel(model, kernel);
  result.kernel = std::move(kernel);
  return result;
}

MultiResult synthesize_multi(const Model& model, std::span<const JointBelief> beliefs,
                             Semantics semantics, bool allow_degraded) {
  PosteriorFamily family{model.prior(), {}};
  for (std::size_t k = 0; k < beliefs.size(); ++k) {
    Verdict verdict = decide_implementable(model, beliefs[k]);
    if (!verdict.implementable()) {
      MultiResult result;
      result.failure = MultiFailure::PerMemberRejected;
      result.rejected_member = k;
      result.member_verdict = std::move(verdict);
      return result;
    }
    const auto& impl = *verdict.implementation;
    family.members.push_back(posterior_over_omega(model, impl.kernel, impl.signal));
  }
  return synthesize_from_family(model, family, semantics, allow_degraded);
}

}  // namespace mediator
