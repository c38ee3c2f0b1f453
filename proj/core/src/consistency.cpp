#include "mediator/consistency.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>
#include <string>

#include "certificate_util.hpp"

namespace mediator {

std::optional<ReciprocityViolation> check_reciprocity(const InfoGraph& graph,
                                                      const EdgeLabels& labels) {
  for (const auto& e : graph.edges()) {
    auto forward = labels.find({e.a, e.b});
    auto backward = labels.find({e.b, e.a});
    if (forward == labels.end() || backward == labels.end()) continue;
    if (forward->second * backward->second != Rational(1)) {
      return ReciprocityViolation{e.a, e.b, forward->second, backward->second};
    }
  }
  return std::nullopt;
}

PLFunction PLFunction::from_labels(const InfoGraph& graph, const EdgeLabels& labels) {
  for (const auto& [edge, value] : labels) {
    if (!graph.has_edge(edge.first, edge.second)) {
      throw Error(ErrorKind::InvalidLabel, "label on (" + std::to_string(edge.first) + ", " +
                                               std::to_string(edge.second) + ") which is not an edge");
    }
    if (!value.is_positive()) {
      throw Error(ErrorKind::InvalidLabel, "non-positive label " + value.str());
    }
  }
  if (auto bad = check_reciprocity(graph, labels)) {
    throw Error(ErrorKind::ReciprocityViolation,
                "phi(" + std::to_string(bad->a) + "," + std::to_string(bad->b) + ") * phi(" +
                    std::to_string(bad->b) + "," + std::to_string(bad->a) +
                    ") = " + (bad->forward * bad->backward).str());
  }
  PLFunction phi;
  for (const auto& e : graph.edges()) {
    auto forward = labels.find({e.a, e.b});
    auto backward = labels.find({e.b, e.a});
    if (forward != labels.end()) {
      phi.values_[{e.a, e.b}] = forward->second;
      phi.values_[{e.b, e.a}] = forward->second.reciprocal();
    } else if (backward != labels.end()) {
      phi.values_[{e.b, e.a}] = backward->second;
      phi.values_[{e.a, e.b}] = backward->second.reciprocal();
    } else {
      throw Error(ErrorKind::InvalidLabel, "edge (" + std::to_string(e.a) + ", " +
                                               std::to_string(e.b) + ") has no label");
    }
  }
  return phi;
}

const Rational& PLFunction::operator()(StateId a, StateId b) const {
  auto it = values_.find({a, b});
  if (it == values_.end()) {
    throw Error(ErrorKind::InvalidLabel,
                "(" + std::to_string(a) + ", " + std::to_string(b) + ") is not an edge");
  }
  return it->second;
}

PLFunction pl_from_function(const InfoGraph& graph, const std::vector<Rational>& f) {
  EdgeLabels labels;
  for (const auto& e : graph.edges()) labels[{e.a, e.b}] = f[e.a] / f[e.b];
  return PLFunction::from_labels(graph, labels);
}

ExtendedPL::ExtendedPL(CKCPartition components, std::vector<Rational> labels)
    : components_(std::move(components)), labels_(std::move(labels)) {}

Rational ExtendedPL::extend(StateId a, StateId b) const {
  const auto& of = components_.component_of;
  if (a >= of.size() || b >= of.size() || of[a] == CKCPartition::npos || of[a] != of[b]) {
    throw Error(ErrorKind::NotSameComponent, "states " + std::to_string(a) + " and " +
                                                 std::to_string(b) + " are not in one component");
  }
  return labels_[a] / labels_[b];
}

Rational extend_pl(const ExtendedPL& extended, StateId a, StateId b) { return extended.extend(a, b); }

namespace {

constexpr std::size_t kNone = CKCPartition::npos;

// BFS forest used to assign labels and recover tree paths.
struct LabelForest {
  std::vector<std::size_t> parent;
  std::vector<std::size_t> depth;

  // States from `from` to `to` along tree edges (same component).
  std::vector<StateId> path(StateId from, StateId to) const {
    std::vector<StateId> up;
    std::vector<StateId> down;
    while (depth[from] > depth[to]) {
      up.push_back(from);
      from = parent[from];
    }
    while (depth[to] > depth[from]) {
      down.push_back(to);
      to = parent[to];
    }
    while (from != to) {
      up.push_back(from);
      down.push_back(to);
      from = parent[from];
      to = parent[to];
    }
    up.push_back(from);
    up.insert(up.end(), down.rbegin(), down.rend());
    return up;
  }
};

Rational path_product(const PLFunction& phi, const std::vector<StateId>& path) {
  Rational product(1);
  for (std::size_t k = 0; k + 1 < path.size(); ++k) product *= phi(path[k], path[k + 1]);
  return product;
}

Certificate cycle_certificate(const PLFunction& phi, std::vector<StateId> path) {
  Certificate cert{CertificateKind::FCycle, std::move(path), {}, Rational(1)};
  cert.product = path_product(phi, cert.path);
  return canonicalize(std::move(cert));
}

struct ScaleResult {
  std::vector<Rational> scales;  // per component
  std::optional<Certificate> violation;
};

// Ratio-weighted union-find over components: scale(x) = ratio[x] * scale(parent[x]).
class ScaleUnionFind {
 public:
  explicit ScaleUnionFind(std::size_t n) : parent_(n), ratio_(n, Rational(1)) {
    for (std::size_t k = 0; k < n; ++k) parent_[k] = k;
  }

  // Returns root and scale(x) / scale(root).
  std::pair<std::size_t, Rational> find(std::size_t x) {
    if (parent_[x] == x) return {x, Rational(1)};
    auto [root, parent_ratio] = find(parent_[x]);
    ratio_[x] *= parent_ratio;
    parent_[x] = root;
    return {root, ratio_[x]};
  }

  // Attaches root `child` under root `parent` with scale(child)/scale(parent) = ratio.
  void attach(std::size_t child, std::size_t parent, Rational ratio) {
    parent_[child] = parent;
    ratio_[child] = std::move(ratio);
  }

 private:
  std::vector<std::size_t> parent_;
  std::vector<Rational> ratio_;
};

struct ForestLink {
  std::size_t other;
  StateId here;
  StateId there;
};

ScaleResult component_scales(const InfoGraph& graph, const Partition& mediator,
                             const ExtendedPL& extended) {
  const auto& comps = extended.components();
  const std::size_t k = comps.size();
  ScaleUnionFind uf(k);
  std::vector<std::vector<ForestLink>> forest(k);
  ScaleResult result;

  for (const auto& cell : mediator.cells()) {
    std::vector<StateId> members;
    for (StateId s : cell) {
      if (graph.contains(s)) members.push_back(s);
    }
    if (members.size() < 2) continue;
    const StateId rep = members.front();
    const std::size_t rep_comp = comps.component_of[rep];
    for (std::size_t m = 1; m < members.size(); ++m) {
      const StateId t = members[m];
      const std::size_t t_comp = comps.component_of[t];
      if (t_comp == rep_comp) continue;
      // f(rep) = f(t): scale(rep_comp) * g(rep) = scale(t_comp) * g(t).
      auto [root_rep, r_rep] = uf.find(rep_comp);
      auto [root_t, r_t] = uf.find(t_comp);
      if (root_rep != root_t) {
        uf.attach(root_t, root_rep, r_rep * extended.label(rep) / (r_t * extended.label(t)));
        forest[rep_comp].push_back({t_comp, rep, t});
        forest[t_comp].push_back({rep_comp, t, rep});
        continue;
      }
      if (r_rep * extended.label(rep) == r_t * extended.label(t)) continue;

      // Conflict: walk the merge forest from t's component to rep's component.
      std::vector<std::size_t> via(k, kNone);
      std::vector<ForestLink> link_into(k);
      std::deque<std::size_t> queue{t_comp};
      via[t_comp] = t_comp;
      while (!queue.empty() && via[rep_comp] == kNone) {
        std::size_t c = queue.front();
        queue.pop_front();
        for (const auto& link : forest[c]) {
          if (via[link.other] != kNone) continue;
          via[link.other] = c;
          link_into[link.other] = link;
          queue.push_back(link.other);
        }
      }
      std::vector<ForestLink> hops;  // from t_comp towards rep_comp
      for (std::size_t c = rep_comp; c != t_comp; c = via[c]) hops.push_back(link_into[c]);
      std::reverse(hops.begin(), hops.end());

      Certificate cert{CertificateKind::FLoop, {}, {}, Rational(1)};
      StateId entry = t;
      for (const auto& hop : hops) {
        cert.pairs.push_back({entry, hop.here});
        entry = hop.there;
      }
      cert.pairs.push_back({entry, rep});
      for (const auto& pair : cert.pairs) cert.product *= extended.extend(pair.from, pair.to);
      result.violation = canonicalize(std::move(cert));
      return result;
    }
  }

  result.scales.assign(k, Rational(1));
  std::vector<std::size_t> anchor_of_root(k, kNone);
  std::vector<Rational> relative(k);
  for (std::size_t c = 0; c < k; ++c) {
    auto [root, r] = uf.find(c);
    relative[c] = r;
    // Components are visited in ascending order, so the first one seen per
    // root is the smallest in its piece of the component graph.
    if (anchor_of_root[root] == kNone) anchor_of_root[root] = c;
  }
  for (std::size_t c = 0; c < k; ++c) {
    auto [root, r] = uf.find(c);
    result.scales[c] = relative[c] / relative[anchor_of_root[root]];
  }
  return result;
}

}  // namespace

std::variant<ExtendedPL, Certificate> check_inc(const InfoGraph& graph, const Partition& mediator,
                                                const PLFunction& phi) {
  CKCPartition comps = ckcs(graph);
  const std::size_t n = graph.num_states();
  std::vector<Rational> labels(n);
  LabelForest forest{std::vector<std::size_t>(n, kNone), std::vector<std::size_t>(n, 0)};
  std::vector<bool> visited(n, false);

  for (const auto& component : comps.components) {
    const StateId anchor = component.front();
    labels[anchor] = Rational(1);
    visited[anchor] = true;
    std::deque<StateId> queue{anchor};
    while (!queue.empty()) {
      StateId v = queue.front();
      queue.pop_front();
      for (StateId w : graph.neighbors(v)) {
        if (visited[w]) continue;
        visited[w] = true;
        forest.parent[w] = v;
        forest.depth[w] = forest.depth[v] + 1;
        labels[w] = labels[v] * phi(w, v);
        queue.push_back(w);
      }
    }
  }

  // Closed cycles: every non-tree edge must agree with the labels.
  for (const auto& e : graph.edges()) {
    if (forest.parent[e.a] == e.b || forest.parent[e.b] == e.a) continue;
    if (phi(e.a, e.b) == labels[e.a] / labels[e.b]) continue;
    std::vector<StateId> path{e.a};
    auto back = forest.path(e.b, e.a);
    path.insert(path.end(), back.begin(), back.end());
    return cycle_certificate(phi, std::move(path));
  }

  // Open cycles closed by a mediator cell: cell-mates in one component must
  // carry equal labels.
  for (const auto& cell : mediator.cells()) {
    std::vector<StateId> first_in(comps.size(), kNone);
    for (StateId s : cell) {
      if (!graph.contains(s)) continue;
      std::size_t c = comps.component_of[s];
      if (first_in[c] == kNone) {
        first_in[c] = s;
        continue;
      }
      if (labels[first_in[c]] != labels[s]) {
        return cycle_certificate(phi, forest.path(first_in[c], s));
      }
    }
  }

  return ExtendedPL(std::move(comps), std::move(labels));
}

std::optional<Certificate> check_exc(const InfoGraph& graph, const Partition& mediator,
                                     const ExtendedPL& extended) {
  return component_scales(graph, mediator, extended).violation;
}

std::variant<FLabeling, Certificate> solve_f(const InfoGraph& graph, const Partition& mediator,
                                             const PLFunction& phi) {
  auto inc = check_inc(graph, mediator, phi);
  if (auto* cert = std::get_if<Certificate>(&inc)) return std::move(*cert);
  const auto& extended = std::get<ExtendedPL>(inc);
  auto scaled = component_scales(graph, mediator, extended);
  if (scaled.violation) return std::move(*scaled.violation);

  FLabeling f{graph.vertices(), std::vector<Rational>(graph.num_states())};
  for (StateId s : graph.vertices()) {
    f.values[s] = scaled.scales[extended.components().component_of[s]] * extended.label(s);
  }
  for (const auto& e : graph.edges()) {
    if (phi(e.a, e.b) != f.values[e.a] / f.values[e.b]) {
      throw std::logic_error("solve_f: labelling does not reproduce phi");
    }
  }
  for (const auto& cell : mediator.cells()) {
    std::optional<Rational> value;
    for (StateId s : cell) {
      if (!graph.contains(s)) continue;
      if (value && *value != f.values[s]) {
        throw std::logic_error("solve_f: labelling is not mediator-measurable");
      }
      value = f.values[s];
    }
  }
  return f;
}

Distribution induced_component_distribution(const ExtendedPL& extended, std::size_t component) {
  if (component >= extended.components().size()) {
    throw Error(ErrorKind::NotAComponent, "component " + std::to_string(component) + " does not exist");
  }
  return induced_component_distribution(extended, component, extended.anchor(component));
}

Distribution induced_component_distribution(const ExtendedPL& extended, std::size_t component,
                                            StateId anchor) {
  const auto& comps = extended.components();
  if (component >= comps.size()) {
    throw Error(ErrorKind::NotAComponent, "component " + std::to_string(component) + " does not exist");
  }
  const auto& members = comps.components[component];
  Distribution dist(comps.component_of.size());
  Rational total;
  for (StateId s : members) {
    dist[s] = extended.extend(s, anchor);
    total += dist[s];
  }
  for (StateId s : members) dist[s] /= total;
  return dist;
}

Rational evaluate_certificate(const InfoGraph& graph, const Partition& mediator,
                              const PLFunction& phi, const Certificate& certificate) {
  auto malformed = [](const std::string& why) {
    return Error(ErrorKind::MalformedCertificate, "malformed certificate: " + why);
  };
  if (certificate.kind == CertificateKind::FCycle) {
    const auto& path = certificate.path;
    if (path.size() < 2) throw malformed("cycle needs at least one edge");
    for (std::size_t k = 0; k + 1 < path.size(); ++k) {
      if (!graph.has_edge(path[k], path[k + 1])) throw malformed("consecutive states are not adjacent");
    }
    if (path.front() >= mediator.num_states() || path.back() >= mediator.num_states() ||
        !mediator.same_cell(path.front(), path.back())) {
      throw malformed("cycle does not close within a mediator cell");
    }
    return path_product(phi, path);
  }

  const auto& pairs = certificate.pairs;
  if (pairs.size() < 2) throw malformed("loop needs at least two pairs");
  const CKCPartition comps = ckcs(graph);
  for (const auto& pair : pairs) {
    if (!graph.contains(pair.from) || !graph.contains(pair.to)) throw malformed("state outside graph");
  }
  Rational product(1);
  for (std::size_t k = 0; k < pairs.size(); ++k) {
    const auto& here = pairs[k];
    const auto& next = pairs[(k + 1) % pairs.size()];
    if (comps.component_of[here.from] != comps.component_of[here.to]) {
      throw malformed("pair spans two components");
    }
    if (comps.component_of[here.to] == comps.component_of[next.from]) {
      throw malformed("consecutive pairs share a component");
    }
    if (!mediator.same_cell(here.to, next.from)) {
      throw malformed("consecutive pairs are not joined by a mediator cell");
    }
    product *= path_product(phi, detail::bfs_path(graph, here.from, here.to));
  }
  return product;
}

Certificate canonicalize(Certificate certificate) {
  if (certificate.kind == CertificateKind::FLoop) {
    auto& pairs = certificate.pairs;
    const std::size_t n = pairs.size();
    auto flatten = [](const std::vector<LoopPair>& ps) {
      std::vector<StateId> flat;
      for (const auto& p : ps) {
        flat.push_back(p.from);
        flat.push_back(p.to);
      }
      return flat;
    };
    std::vector<LoopPair> reversed;
    for (std::size_t k = n; k-- > 0;) reversed.push_back({pairs[k].to, pairs[k].from});
    std::vector<LoopPair> best = pairs;
    bool best_reversed = false;
    for (int dir = 0; dir < 2; ++dir) {
      const auto& base = dir == 0 ? pairs : reversed;
      for (std::size_t r = 0; r < n; ++r) {
        std::vector<LoopPair> candidate(base.begin() + static_cast<std::ptrdiff_t>(r), base.end());
        candidate.insert(candidate.end(), base.begin(), base.begin() + static_cast<std::ptrdiff_t>(r));
        if (flatten(candidate) < flatten(best)) {
          best = std::move(candidate);
          best_reversed = dir == 1;
        }
      }
    }
    pairs = std::move(best);
    if (best_reversed) certificate.product = certificate.product.reciprocal();
    return certificate;
  }

  auto& path = certificate.path;
  if (path.size() >= 2 && path.front() == path.back()) {
    std::vector<StateId> core(path.begin(), path.end() - 1);
    std::vector<StateId> reversed(core.rbegin(), core.rend());
    std::vector<StateId> best = core;
    bool best_reversed = false;
    for (int dir = 0; dir < 2; ++dir) {
      const auto& base = dir == 0 ? core : reversed;
      for (std::size_t r = 0; r < base.size(); ++r) {
        std::vector<StateId> candidate(base.begin() + static_cast<std::ptrdiff_t>(r), base.end());
        candidate.insert(candidate.end(), base.begin(), base.begin() + static_cast<std::ptrdiff_t>(r));
        if (candidate < best) {
          best = std::move(candidate);
          best_reversed = dir == 1;
        }
      }
    }
    best.push_back(best.front());
    path = std::move(best);
    if (best_reversed) certificate.product = certificate.product.reciprocal();
  } else {
    std::vector<StateId> reversed(path.rbegin(), path.rend());
    if (reversed < path) {
      path = std::move(reversed);
      certificate.product = certificate.product.reciprocal();
    }
  }
  return certificate;
}

}  // namespace mediator
