#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <span>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "sigswitch/bitvector.hpp"
#include "sigswitch/error.hpp"
#include "sigswitch/graph.hpp"

namespace sigswitch {

/// Permutation of 0..n-1 stored as its image table.
class VertexPermutation {
 public:
  VertexPermutation() = default;
  explicit VertexPermutation(std::vector<Vertex> images) : images_(std::move(images)) {
    std::vector<bool> seen(images_.size(), false);
    for (auto v : images_) {
      if (v >= images_.size() || seen[v]) throw std::invalid_argument("not a permutation");
      seen[v] = true;
    }
  }

  static VertexPermutation identity(std::size_t n) {
    std::vector<Vertex> images(n);
    std::iota(images.begin(), images.end(), Vertex{0});
    return VertexPermutation(std::move(images));
  }

  /// Builds a permutation from disjoint cycles, e.g. {{0,1},{2,3,4}}.
  static VertexPermutation from_cycles(std::size_t n,
                                       std::initializer_list<std::initializer_list<Vertex>> cycles) {
    std::vector<Vertex> images(n);
    std::iota(images.begin(), images.end(), Vertex{0});
    for (const auto& cycle : cycles) {
      const std::vector<Vertex> c(cycle);
      for (std::size_t i = 0; i < c.size(); ++i) images.at(c[i]) = c[(i + 1) % c.size()];
    }
    return VertexPermutation(std::move(images));
  }

  std::size_t size() const noexcept { return images_.size(); }
  Vertex operator()(Vertex v) const { return images_[v]; }
  std::span<const Vertex> images() const noexcept { return images_; }

  bool is_identity() const {
    for (std::size_t v = 0; v < images_.size(); ++v) {
      if (images_[v] != v) return false;
    }
    return true;
  }

  VertexPermutation inverse() const {
    std::vector<Vertex> inv(images_.size());
    for (std::size_t v = 0; v < images_.size(); ++v) inv[images_[v]] = static_cast<Vertex>(v);
    return VertexPermutation(std::move(inv));
  }

  friend auto operator<=>(const VertexPermutation&, const VertexPermutation&) = default;

 private:
  std::vector<Vertex> images_;
};

/// (outer ∘ inner)(v) = outer(inner(v)).
inline VertexPermutation compose(const VertexPermutation& outer, const VertexPermutation& inner) {
  if (outer.size() != inner.size()) throw std::invalid_argument("permutation degree mismatch");
  std::vector<Vertex> images(inner.size());
  for (Vertex v = 0; v < inner.size(); ++v) images[v] = outer(inner(v));
  return VertexPermutation(std::move(images));
}

inline VertexPermutation power(const VertexPermutation& p, std::size_t exponent) {
  VertexPermutation result = VertexPermutation::identity(p.size());
  for (std::size_t i = 0; i < exponent; ++i) result = compose(p, result);
  return result;
}

struct VertexPermutationHash {
  std::size_t operator()(const VertexPermutation& p) const noexcept {
    std::size_t h = p.size();
    for (auto v : p.images()) h = h * 1000003u ^ v;
    return h;
  }
};

/// Permutation of edge indices induced by a graph automorphism.
struct EdgePermutation {
  std::vector<EdgeIndex> images;

  std::size_t size() const noexcept { return images.size(); }

  /// Transports a sign vector along the permutation: the sign of edge e
  /// moves to edge images[e].
  BitVector apply(const BitVector& signs) const {
    if (signs.size() != images.size()) throw std::invalid_argument("edge count mismatch");
    BitVector out(signs.size());
    for (auto e : signs.set_indices()) out.set(images[e]);
    return out;
  }

  /// Cycle decomposition with each cycle starting at its smallest index.
  std::vector<std::vector<EdgeIndex>> cycles() const {
    std::vector<std::vector<EdgeIndex>> out;
    std::vector<bool> seen(images.size(), false);
    for (EdgeIndex start = 0; start < images.size(); ++start) {
      if (seen[start]) continue;
      auto& cycle = out.emplace_back();
      for (EdgeIndex e = start; !seen[e]; e = images[e]) {
        seen[e] = true;
        cycle.push_back(e);
      }
    }
    return out;
  }

  friend bool operator==(const EdgePermutation&, const EdgePermutation&) = default;
};

inline bool is_automorphism(const Graph& g, const VertexPermutation& p) {
  if (p.size() != g.order()) return false;
  // A bijection mapping every edge to an edge preserves non-edges too,
  // since the edge count is finite and fixed.
  for (const auto& e : g.edges()) {
    if (!g.adjacent(p(e.u), p(e.v))) return false;
  }
  return true;
}

/// Edge e = {u,v} maps to the index of {p(u),p(v)}.
inline EdgePermutation induced_edge_perm(const Graph& g, const VertexPermutation& p) {
  if (!is_automorphism(g, p)) throw std::invalid_argument("permutation is not an automorphism");
  EdgePermutation out;
  out.images.reserve(g.size());
  for (const auto& e : g.edges()) {
    out.images.push_back(static_cast<EdgeIndex>(*g.edge_index(p(e.u), p(e.v))));
  }
  return out;
}

inline constexpr std::size_t kMaxGroupOrder = 1'000'000;

/// Finite permutation group held as an explicit element list. The identity
/// is always element 0.
class PermutationGroup {
 public:
  PermutationGroup() = default;

  std::size_t degree() const noexcept { return degree_; }
  std::size_t order() const noexcept { return elements_.size(); }
  std::span<const VertexPermutation> elements() const noexcept { return elements_; }
  const VertexPermutation& operator[](std::size_t i) const { return elements_[i]; }

  bool contains(const VertexPermutation& p) const { return lookup_.count(p) != 0; }

  /// Builds a group from a list already known to be closed. The identity is
  /// moved to the front; duplicates are rejected.
  static PermutationGroup from_elements(std::size_t degree, std::vector<VertexPermutation> elements) {
    PermutationGroup grp;
    grp.degree_ = degree;
    const auto id = VertexPermutation::identity(degree);
    grp.push(id);
    for (auto& p : elements) {
      if (p.size() != degree) throw std::invalid_argument("permutation degree mismatch");
      if (p == id) continue;
      if (grp.contains(p)) throw std::invalid_argument("duplicate group element");
      grp.push(std::move(p));
    }
    return grp;
  }

  /// True when the element list is closed under composition. Inverses then
  /// follow from finiteness.
  bool is_closed() const {
    for (const auto& a : elements_) {
      for (const auto& b : elements_) {
        if (!contains(compose(a, b))) return false;
      }
    }
    return true;
  }

 private:
  friend PermutationGroup closure(std::span<const VertexPermutation>, std::size_t, std::size_t);

  void push(VertexPermutation p) {
    lookup_.emplace(p, elements_.size());
    elements_.push_back(std::move(p));
  }

  std::size_t degree_ = 0;
  std::vector<VertexPermutation> elements_;
  std::unordered_map<VertexPermutation, std::size_t, VertexPermutationHash> lookup_;
};

/// Group generated by `gens`, by breadth-first multiplication from the
/// identity. Elements appear in discovery order. Throws GuardError once the
/// group grows past `max_order`.
inline PermutationGroup closure(std::span<const VertexPermutation> gens, std::size_t degree,
                                std::size_t max_order = kMaxGroupOrder) {
  PermutationGroup grp;
  grp.degree_ = degree;
  for (const auto& g : gens) {
    if (g.size() != degree) throw std::invalid_argument("generator degree mismatch");
  }
  grp.push(VertexPermutation::identity(degree));
  for (std::size_t frontier = 0; frontier < grp.elements_.size(); ++frontier) {
    for (const auto& g : gens) {
      auto next = compose(g, grp.elements_[frontier]);
      if (grp.contains(next)) continue;
      if (grp.elements_.size() >= max_order) {
        throw GuardError("permutation group order", max_order, grp.elements_.size() + 1);
      }
      grp.push(std::move(next));
    }
  }
  return grp;
}

inline PermutationGroup closure(const std::vector<VertexPermutation>& gens, std::size_t degree,
                                std::size_t max_order = kMaxGroupOrder) {
  return closure(std::span<const VertexPermutation>(gens), degree, max_order);
}

/// Transposition (0 1) and the n-cycle (0 1 ... n-1); together they generate S_n.
inline std::vector<VertexPermutation> complete_graph_generators(std::size_t n) {
  if (n == 0) throw std::invalid_argument("complete graph needs at least one vertex");
  if (n == 1) return {VertexPermutation::identity(1)};
  std::vector<Vertex> swap(n), cycle(n);
  std::iota(swap.begin(), swap.end(), Vertex{0});
  std::swap(swap[0], swap[1]);
  for (Vertex v = 0; v < n; ++v) cycle[v] = static_cast<Vertex>((v + 1) % n);
  return {VertexPermutation(std::move(swap)), VertexPermutation(std::move(cycle))};
}

/// Raised for the GP parameter pairs whose automorphism group is not
/// generated by rotation, reflection and layer swap.
class ExceptionalGpPair : public std::domain_error {
 public:
  ExceptionalGpPair(std::size_t n, std::size_t k)
      : std::domain_error("GP(" + std::to_string(n) + "," + std::to_string(k) +
                          ") has an exceptional automorphism group; use brute_automorphisms"),
        n_(n),
        k_(k) {}
  std::size_t n() const noexcept { return n_; }
  std::size_t k() const noexcept { return k_; }

 private:
  std::size_t n_, k_;
};

inline bool is_exceptional_gp(std::size_t n, std::size_t k) {
  constexpr std::pair<std::size_t, std::size_t> kExceptional[] = {
      {4, 1}, {5, 2}, {8, 3}, {10, 2}, {10, 3}, {12, 5}, {24, 5}};
  return std::find(std::begin(kExceptional), std::end(kExceptional), std::pair{n, k}) !=
         std::end(kExceptional);
}

/// k^2 ≡ ±1 (mod n), the condition for the layer swap to be an automorphism.
inline bool gp_has_layer_swap(std::size_t n, std::size_t k) {
  const std::size_t sq = (k * k) % n;
  return sq == 1 % n || sq == n - 1;
}

/// Rotation (i,j) -> (i,j+1), reflection (i,j) -> (i,-j), and when
/// k^2 ≡ ±1 (mod n) the swap (0,j) -> (1,kj), (1,j) -> (0,kj).
inline std::vector<VertexPermutation> gp_generators(std::size_t n, std::size_t k) {
  if (!valid_gp_parameters(n, k)) throw std::invalid_argument("invalid GP parameters");
  if (is_exceptional_gp(n, k)) throw ExceptionalGpPair(n, k);

  auto build = [n](auto&& map) {
    std::vector<Vertex> images(2 * n);
    for (std::uint32_t layer = 0; layer < 2; ++layer) {
      for (std::uint32_t j = 0; j < n; ++j) {
        images[GpVertex{layer, j}.flat(n)] = map(GpVertex{layer, j}).flat(n);
      }
    }
    return VertexPermutation(std::move(images));
  };
  const auto mod = [n](std::size_t x) { return static_cast<std::uint32_t>(x % n); };

  std::vector<VertexPermutation> gens;
  gens.push_back(build([&](GpVertex v) { return GpVertex{v.layer, mod(v.position + 1)}; }));
  gens.push_back(build([&](GpVertex v) { return GpVertex{v.layer, mod(n - v.position)}; }));
  if (gp_has_layer_swap(n, k)) {
    gens.push_back(build([&](GpVertex v) { return GpVertex{1 - v.layer, mod(k * v.position)}; }));
  }

  const Graph g = generalized_petersen(n, k);
  for (const auto& p : gens) {
    if (!is_automorphism(g, p)) {
      throw std::logic_error("GP generator failed the automorphism check");
    }
  }
  return gens;
}

inline constexpr std::size_t kMaxBruteForceOrder = 12;

/// Every automorphism of `g` by backtracking over vertex images, pruned by
/// degree, neighbour-degree profile and adjacency to already placed
/// vertices. Elements are in lexicographic order of their image tables.
inline PermutationGroup brute_automorphisms(const Graph& g) {
  const std::size_t n = g.order();
  if (n > kMaxBruteForceOrder) {
    throw GuardError("brute-force automorphism vertex count", kMaxBruteForceOrder, n);
  }
  std::vector<std::vector<std::size_t>> profile(n);
  for (Vertex v = 0; v < n; ++v) {
    for (auto w : g.neighbors(v)) profile[v].push_back(g.degree(w));
    std::sort(profile[v].begin(), profile[v].end());
  }

  std::vector<VertexPermutation> found;
  std::vector<Vertex> images(n);
  std::vector<bool> used(n, false);

  auto extend = [&](auto&& self, Vertex v) -> void {
    if (v == n) {
      found.emplace_back(images);
      return;
    }
    for (Vertex w = 0; w < n; ++w) {
      if (used[w] || g.degree(w) != g.degree(v) || profile[w] != profile[v]) continue;
      bool consistent = true;
      for (Vertex u = 0; u < v && consistent; ++u) {
        consistent = g.adjacent(u, v) == g.adjacent(images[u], w);
      }
      if (!consistent) continue;
      images[v] = w;
      used[w] = true;
      self(self, v + 1);
      used[w] = false;
    }
  };
  extend(extend, 0);
  return PermutationGroup::from_elements(n, std::move(found));
}

/// Aut(GP(n,k)): generator closure when the pair is not exceptional,
/// backtracking otherwise.
inline PermutationGroup gp_automorphism_group(std::size_t n, std::size_t k) {
  if (is_exceptional_gp(n, k)) return brute_automorphisms(generalized_petersen(n, k));
  const auto gens = gp_generators(n, k);
  return closure(gens, 2 * n);
}

inline PermutationGroup complete_graph_automorphism_group(std::size_t n) {
  const auto gens = complete_graph_generators(n);
  return closure(gens, n);
}

}  // namespace sigswitch
