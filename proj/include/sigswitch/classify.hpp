#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <tuple>
#include <vector>

#include "sigswitch/bitvector.hpp"
#include "sigswitch/error.hpp"
#include "sigswitch/gf2.hpp"
#include "sigswitch/graph.hpp"
#include "sigswitch/signing.hpp"
#include "sigswitch/symmetry.hpp"

namespace sigswitch {

inline constexpr std::uint64_t kMaxOrbitClasses = std::uint64_t{1} << 20;

/// One switching-isomorphism class.
struct OrbitReport {
  /// Lexicographically smallest canonical vector in the orbit.
  SwitchingClass representative;
  std::size_t size = 0;
  /// Fewest negative edges over the representative's switching class.
  std::size_t mu = 0;
  /// The signing that attains `mu`, ties broken lexicographically.
  BitVector witness;
  /// |Aut(Σ)| for the witness signing.
  std::size_t signed_aut_order = 0;
  /// Group elements fixing the representative class.
  std::size_t stabilizer_order = 0;
};

/// The action of a group of automorphisms on the switching classes of a
/// graph, with the induced edge permutations precomputed per element.
///
/// A class is acted on by transporting its canonical vector along the edge
/// permutation (σ^φ(φ(e)) = σ(e)) and re-canonicalizing. The graph and the
/// group must outlive the action.
class ClassAction {
 public:
  ClassAction(const Graph& g, const PermutationGroup& grp) : space_(g), group_(&grp) {
    if (grp.degree() != g.order()) {
      throw std::invalid_argument("group degree does not match vertex count");
    }
    edge_perms_.reserve(grp.order());
    for (const auto& p : grp.elements()) edge_perms_.push_back(induced_edge_perm(g, p));
  }

  const SwitchingSpace& space() const noexcept { return space_; }
  const PermutationGroup& group() const noexcept { return *group_; }
  std::span<const EdgePermutation> edge_perms() const noexcept { return edge_perms_; }

  BitVector act(const BitVector& canonical, std::size_t element) const {
    return space_.basis().reduce(edge_perms_[element].apply(canonical));
  }

  std::size_t stabilizer_order(const BitVector& canonical) const {
    std::size_t fixed = 0;
    for (std::size_t i = 0; i < edge_perms_.size(); ++i) {
      if (act(canonical, i) == canonical) ++fixed;
    }
    return fixed;
  }

  /// Elements whose edge permutation fixes `signs` exactly.
  PermutationGroup sign_stabilizer(const BitVector& signs) const {
    std::vector<VertexPermutation> keep;
    for (std::size_t i = 0; i < edge_perms_.size(); ++i) {
      if (edge_perms_[i].apply(signs) == signs) keep.push_back(group()[i]);
    }
    return PermutationGroup::from_elements(group_->degree(), std::move(keep));
  }

  bool same_orbit(const BitVector& canonical_a, const BitVector& canonical_b) const {
    for (std::size_t i = 0; i < edge_perms_.size(); ++i) {
      if (act(canonical_a, i) == canonical_b) return true;
    }
    return false;
  }

  std::uint64_t checked_class_count() const {
    const std::uint64_t count = space_.class_count();
    if (count > kMaxOrbitClasses) {
      throw GuardError("switching class count", kMaxOrbitClasses, count);
    }
    return count;
  }

  /// Partitions all classes into orbits. Classes are scanned in
  /// lexicographic order, so the first unassigned class met is the
  /// smallest member of its orbit. Reports are sorted by
  /// (mu, size, representative).
  std::vector<OrbitReport> orbits() const {
    const std::uint64_t count = checked_class_count();
    std::vector<bool> assigned(count, false);
    std::vector<OrbitReport> reports;
    for (std::uint64_t index = 0; index < count; ++index) {
      if (assigned[index]) continue;
      const BitVector rep = space_.canonical_at(index);
      std::size_t size = 0;
      std::size_t fixed = 0;
      for (std::size_t i = 0; i < edge_perms_.size(); ++i) {
        const BitVector image = act(rep, i);
        if (image == rep) ++fixed;
        const auto j = space_.index_of(image);
        if (!assigned[j]) {
          assigned[j] = true;
          ++size;
        }
      }
      OrbitReport r;
      r.representative = {&space_.graph(), rep};
      r.size = size;
      r.stabilizer_order = fixed;
      auto best = space_.min_weight(rep);
      r.mu = best.weight;
      r.witness = std::move(best.witness);
      r.signed_aut_order = sign_stabilizer(r.witness).order();
      reports.push_back(std::move(r));
    }
    std::sort(reports.begin(), reports.end(), [](const OrbitReport& a, const OrbitReport& b) {
      return std::tie(a.mu, a.size, a.representative.canonical) <
             std::tie(b.mu, b.size, b.representative.canonical);
    });
    return reports;
  }

  /// Average number of fixed classes per group element. A non-integral
  /// average means the action is broken and raises std::logic_error.
  std::uint64_t burnside_count() const {
    const std::uint64_t count = checked_class_count();
    std::uint64_t fixed_total = 0;
    for (std::uint64_t index = 0; index < count; ++index) {
      fixed_total += stabilizer_order(space_.canonical_at(index));
    }
    if (fixed_total % group_->order() != 0) {
      throw std::logic_error("Burnside average is not an integer: " +
                             std::to_string(fixed_total) + " / " +
                             std::to_string(group_->order()));
    }
    return fixed_total / group_->order();
  }

 private:
  SwitchingSpace space_;
  const PermutationGroup* group_;
  std::vector<EdgePermutation> edge_perms_;
};

inline SwitchingClass act_on_class(const SwitchingClass& c, const VertexPermutation& p) {
  if (c.graph == nullptr) throw std::invalid_argument("switching class has no graph");
  const SwitchingSpace space(*c.graph);
  return space.class_of(induced_edge_perm(*c.graph, p).apply(c.canonical));
}

inline std::vector<OrbitReport> orbits(const Graph& g, const PermutationGroup& grp) {
  return ClassAction(g, grp).orbits();
}

inline std::uint64_t burnside_count(const Graph& g, const PermutationGroup& grp) {
  return ClassAction(g, grp).burnside_count();
}

inline bool switching_isomorphic(const SignedGraph& a, const SignedGraph& b,
                                 const PermutationGroup& grp) {
  if (!(a.graph() == b.graph())) {
    throw std::invalid_argument("switching isomorphism needs a common underlying graph");
  }
  const SwitchingSpace space(a.graph());
  const BitVector target = space.class_of(b).canonical;
  const BitVector source = space.class_of(a).canonical;
  for (const auto& p : grp.elements()) {
    if (space.basis().reduce(induced_edge_perm(a.graph(), p).apply(source)) == target) {
      return true;
    }
  }
  return false;
}

/// Aut(Σ) as the subgroup of `grp` whose induced edge permutations fix the signs.
inline PermutationGroup signed_automorphism_group(const SignedGraph& s,
                                                  const PermutationGroup& grp) {
  std::vector<VertexPermutation> keep;
  for (const auto& p : grp.elements()) {
    if (induced_edge_perm(s.graph(), p).apply(s.signs()) == s.signs()) keep.push_back(p);
  }
  return PermutationGroup::from_elements(grp.degree(), std::move(keep));
}

inline constexpr std::size_t kMaxIsomorphismOrder = 8;

/// True if `p` maps the edges of `a` exactly onto the edges of `b`.
inline bool is_isomorphism(const Graph& a, const Graph& b, const VertexPermutation& p) {
  if (a.order() != b.order() || a.size() != b.size() || p.size() != a.order()) return false;
  for (const auto& e : a.edges()) {
    if (!b.adjacent(p(e.u), p(e.v))) return false;
  }
  return true;
}

/// Backtracking search for a vertex bijection; n <= 8.
inline bool graphs_isomorphic(const Graph& a, const Graph& b) {
  const std::size_t n = a.order();
  if (std::max(n, b.order()) > kMaxIsomorphismOrder) {
    throw GuardError("graph isomorphism vertex count", kMaxIsomorphismOrder,
                     std::max(n, b.order()));
  }
  if (n != b.order() || a.size() != b.size()) return false;
  std::vector<std::size_t> da(n), db(n);
  for (Vertex v = 0; v < n; ++v) {
    da[v] = a.degree(v);
    db[v] = b.degree(v);
  }
  std::vector<std::size_t> sa = da, sb = db;
  std::sort(sa.begin(), sa.end());
  std::sort(sb.begin(), sb.end());
  if (sa != sb) return false;

  std::vector<Vertex> images(n);
  std::vector<bool> used(n, false);
  auto extend = [&](auto&& self, Vertex v) -> bool {
    if (v == n) return true;
    for (Vertex w = 0; w < n; ++w) {
      if (used[w] || da[v] != db[w]) continue;
      bool consistent = true;
      for (Vertex u = 0; u < v && consistent; ++u) {
        consistent = a.adjacent(u, v) == b.adjacent(images[u], w);
      }
      if (!consistent) continue;
      images[v] = w;
      used[w] = true;
      if (self(self, v + 1)) return true;
      used[w] = false;
    }
    return false;
  };
  return extend(extend, 0);
}

inline constexpr std::size_t kMaxLabeledGraphs = std::size_t{1} << 22;

/// One representative per isomorphism class of graphs on n <= 8 vertices
/// with maximum degree at most `max_degree`, ordered by edge count and then
/// by first labeled appearance.
inline std::vector<Graph> enumerate_bounded_degree_graphs(std::size_t n, std::size_t max_degree) {
  if (n > kMaxIsomorphismOrder) {
    throw GuardError("bounded-degree enumeration vertex count", kMaxIsomorphismOrder, n);
  }
  const Graph full = n == 0 ? Graph() : complete_graph(n);
  const auto candidates = full.edges();

  std::vector<std::vector<Edge>> labeled;
  std::vector<Edge> chosen;
  std::vector<std::size_t> degree(n, 0);
  auto extend = [&](auto&& self, std::size_t next) -> void {
    if (next == candidates.size()) {
      if (labeled.size() >= kMaxLabeledGraphs) {
        throw GuardError("labeled graph enumeration size", kMaxLabeledGraphs, labeled.size() + 1);
      }
      labeled.push_back(chosen);
      return;
    }
    self(self, next + 1);
    const auto [u, v] = candidates[next];
    if (degree[u] < max_degree && degree[v] < max_degree) {
      ++degree[u];
      ++degree[v];
      chosen.push_back(candidates[next]);
      self(self, next + 1);
      chosen.pop_back();
      --degree[u];
      --degree[v];
    }
  };
  extend(extend, 0);
  std::stable_sort(labeled.begin(), labeled.end(),
                   [](const auto& x, const auto& y) { return x.size() < y.size(); });

  // Bucket by sorted degree sequence before the pairwise isomorphism test.
  std::map<std::vector<std::size_t>, std::vector<std::size_t>> buckets;
  std::vector<Graph> reps;
  for (auto& edges : labeled) {
    Graph g(n, std::move(edges));
    std::vector<std::size_t> key(n);
    for (Vertex v = 0; v < n; ++v) key[v] = g.degree(v);
    std::sort(key.begin(), key.end());
    auto& bucket = buckets[key];
    const bool seen = std::any_of(bucket.begin(), bucket.end(),
                                  [&](std::size_t r) { return graphs_isomorphic(reps[r], g); });
    if (!seen) {
      bucket.push_back(reps.size());
      reps.push_back(std::move(g));
    }
  }
  return reps;
}

struct LowerBoundCheck {
  std::size_t n = 0;
  std::size_t max_degree = 0;
  std::size_t bound = 0;
  bool verified = false;
};

/// Builds one signing of K_n per graph with maximum degree <= floor(n/4)-1
/// (its edges negative) and checks the signings are pairwise switching
/// non-isomorphic under S_n. 4 <= n <= 8.
inline LowerBoundCheck verify_lower_bound(std::size_t n) {
  if (n < 4) throw std::invalid_argument("lower-bound check needs n >= 4");
  if (n > kMaxIsomorphismOrder) {
    throw GuardError("lower-bound check vertex count", kMaxIsomorphismOrder, n);
  }
  LowerBoundCheck out{n, n / 4 - 1, 0, true};
  const Graph kn = complete_graph(n);
  const auto graphs = enumerate_bounded_degree_graphs(n, out.max_degree);
  out.bound = graphs.size();

  const PermutationGroup sn = complete_graph_automorphism_group(n);
  const ClassAction action(kn, sn);
  std::vector<BitVector> classes;
  for (const auto& h : graphs) {
    classes.push_back(
        action.space().class_of(SignedGraph::with_negative_edges(kn, h.edges())).canonical);
  }
  for (std::size_t i = 0; i < classes.size() && out.verified; ++i) {
    for (std::size_t j = i + 1; j < classes.size() && out.verified; ++j) {
      if (action.same_orbit(classes[i], classes[j])) out.verified = false;
    }
  }
  return out;
}

/// For signings of a complete graph: isomorphic negative subgraphs imply
/// the signings are switching isomorphic. Returns the truth value of that
/// implication for the given pair. n <= 7.
inline bool negative_iso_implies_same_orbit_check(const Graph& g, const SignedGraph& a,
                                                  const SignedGraph& b,
                                                  const PermutationGroup& grp) {
  if (g.size() != g.order() * (g.order() - 1) / 2) {
    throw std::invalid_argument("negative-subgraph orbit check needs a complete graph");
  }
  if (g.order() > 7) throw GuardError("negative-subgraph orbit check vertex count", 7, g.order());
  if (!graphs_isomorphic(negative_subgraph(a), negative_subgraph(b))) return true;
  return switching_isomorphic(a, b, grp);
}

inline bool negative_iso_implies_same_orbit_check(const Graph& g, const SignedGraph& a,
                                                  const SignedGraph& b) {
  if (g.order() > 7) throw GuardError("negative-subgraph orbit check vertex count", 7, g.order());
  return negative_iso_implies_same_orbit_check(g, a, b,
                                               complete_graph_automorphism_group(g.order()));
}

/// Edge indices of the outer cycle, inner cycle(s) and spokes of GP(n,k).
struct GpEdgeLayers {
  std::vector<EdgeIndex> e1;
  std::vector<EdgeIndex> e2;
  std::vector<EdgeIndex> e3;
};

inline GpEdgeLayers gp_edge_layers(const Graph& g, std::size_t n, std::size_t k) {
  if (!valid_gp_parameters(n, k) || !(g == generalized_petersen(n, k))) {
    throw std::invalid_argument("graph is not GP(" + std::to_string(n) + "," +
                                std::to_string(k) + ")");
  }
  GpEdgeLayers layers;
  auto id = [n](std::uint32_t layer, std::size_t j) {
    return GpVertex{layer, static_cast<std::uint32_t>(j % n)}.flat(n);
  };
  for (std::size_t j = 0; j < n; ++j) {
    layers.e1.push_back(static_cast<EdgeIndex>(*g.edge_index(id(0, j), id(0, j + 1))));
    layers.e2.push_back(static_cast<EdgeIndex>(*g.edge_index(id(1, j), id(1, j + k))));
    layers.e3.push_back(static_cast<EdgeIndex>(*g.edge_index(id(0, j), id(1, j))));
  }
  return layers;
}

/// True when every edge layer carries a single sign.
inline bool layers_monochromatic(const GpEdgeLayers& layers, const BitVector& signs) {
  for (const auto* layer : {&layers.e1, &layers.e2, &layers.e3}) {
    for (auto e : *layer) {
      if (signs.get(e) != signs.get(layer->front())) return false;
    }
  }
  return true;
}

}  // namespace sigswitch
