#pragma once

#include <cstddef>
#include <cstdint>
#include <iterator>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "sigswitch/bitvector.hpp"
#include "sigswitch/error.hpp"
#include "sigswitch/gf2.hpp"
#include "sigswitch/graph.hpp"

namespace sigswitch {

/// A graph together with a sign on every edge; bit i of `signs()` set means
/// edge i is negative. Holds a non-owning reference to the graph, which
/// must outlive it.
class SignedGraph {
 public:
  SignedGraph(const Graph& graph, BitVector signs) : graph_(&graph), signs_(std::move(signs)) {
    if (signs_.size() != graph.size()) {
      throw std::invalid_argument("sign vector length does not match edge count");
    }
  }

  static SignedGraph all_positive(const Graph& graph) {
    return SignedGraph(graph, BitVector(graph.size()));
  }

  static SignedGraph with_negative_edges(const Graph& graph, std::span<const Edge> negative) {
    BitVector signs(graph.size());
    for (const auto& e : negative) {
      auto idx = graph.edge_index(e.u, e.v);
      if (!idx) throw std::invalid_argument("negative edge is not an edge of the graph");
      signs.set(*idx);
    }
    return SignedGraph(graph, std::move(signs));
  }
  static SignedGraph with_negative_edges(const Graph& graph, std::initializer_list<Edge> negative) {
    return with_negative_edges(graph, std::span<const Edge>(negative.begin(), negative.size()));
  }

  const Graph& graph() const noexcept { return *graph_; }
  const BitVector& signs() const noexcept { return signs_; }

  bool negative(std::size_t edge) const { return signs_.get(edge); }

  std::vector<Edge> negative_edges() const {
    std::vector<Edge> out;
    for (auto i : signs_.set_indices()) out.push_back(graph_->edge(i));
    return out;
  }

  friend bool operator==(const SignedGraph& a, const SignedGraph& b) {
    return (a.graph_ == b.graph_ || *a.graph_ == *b.graph_) && a.signs_ == b.signs_;
  }

 private:
  const Graph* graph_;
  BitVector signs_;
};

/// The set of vertices where the switching function is -1. A set and its
/// complement switch identically.
struct SwitchingFunction {
  std::vector<bool> flipped;

  static SwitchingFunction identity(std::size_t n) { return {std::vector<bool>(n, false)}; }
  static SwitchingFunction of(std::size_t n, std::initializer_list<Vertex> vertices) {
    SwitchingFunction t = identity(n);
    for (auto v : vertices) t.flipped.at(v) = true;
    return t;
  }
  /// Switching function whose flipped set is given by the low n bits of `mask`.
  static SwitchingFunction from_mask(std::size_t n, std::uint64_t mask) {
    SwitchingFunction t = identity(n);
    for (std::size_t v = 0; v < n; ++v) t.flipped[v] = ((mask >> v) & 1) != 0;
    return t;
  }

  friend bool operator==(const SwitchingFunction&, const SwitchingFunction&) = default;
};

inline SignedGraph switch_signs(const SignedGraph& s, const SwitchingFunction& t) {
  return SignedGraph(s.graph(), s.signs() ^ vertex_cut_edges(s.graph(), t.flipped));
}

/// A switching class, identified by its canonical coset representative:
/// the class member that is zero on every pivot of the cut-space basis.
struct SwitchingClass {
  const Graph* graph = nullptr;
  BitVector canonical;

  friend bool operator==(const SwitchingClass& a, const SwitchingClass& b) {
    return a.canonical == b.canonical &&
           (a.graph == b.graph || (a.graph && b.graph && *a.graph == *b.graph));
  }
};

inline constexpr std::size_t kMaxClassExponent = 62;

/// Cached cut-space data for one graph: the basis, the free coordinates
/// and the component count. Switching classes of the graph are in
/// bijection with bit patterns on the free coordinates.
class SwitchingSpace {
 public:
  explicit SwitchingSpace(const Graph& graph)
      : graph_(&graph),
        basis_(cut_space_basis(graph)),
        free_(basis_.free_coordinates()),
        components_(connected_components(graph).count) {}

  const Graph& graph() const noexcept { return *graph_; }
  const Gf2Basis& basis() const noexcept { return basis_; }
  std::size_t components() const noexcept { return components_; }

  /// m - n + c.
  std::size_t class_exponent() const noexcept { return free_.size(); }
  std::span<const std::size_t> free_coordinates() const noexcept { return free_; }

  std::uint64_t class_count() const {
    if (free_.size() > kMaxClassExponent) {
      throw GuardError("switching class exponent m-n+c", kMaxClassExponent, free_.size());
    }
    return std::uint64_t{1} << free_.size();
  }

  SwitchingClass class_of(const BitVector& signs) const {
    return {graph_, basis_.reduce(signs)};
  }
  SwitchingClass class_of(const SignedGraph& s) const {
    check_graph(s);
    return class_of(s.signs());
  }

  bool equivalent(const SignedGraph& a, const SignedGraph& b) const {
    check_graph(a);
    check_graph(b);
    return basis_.in_span(a.signs() ^ b.signs());
  }

  /// Canonical vector of the class with the given free-coordinate pattern.
  /// The first free coordinate is the most significant bit of `index`, so
  /// increasing indices give lexicographically increasing vectors.
  BitVector canonical_at(std::uint64_t index) const {
    BitVector v(graph_->size());
    const std::size_t f = free_.size();
    for (std::size_t i = 0; i < f; ++i) {
      if ((index >> (f - 1 - i)) & 1) v.set(free_[i]);
    }
    return v;
  }

  /// Inverse of canonical_at. `canonical` must already be reduced.
  std::uint64_t index_of(const BitVector& canonical) const {
    std::uint64_t index = 0;
    for (auto coord : free_) index = (index << 1) | (canonical.get(coord) ? 1 : 0);
    return index;
  }

  CosetMinimum min_weight(const BitVector& signs) const {
    return min_weight_coset_member(basis_, signs);
  }

  /// Forward iteration over all classes in lexicographic order.
  class ClassRange {
   public:
    class iterator {
     public:
      using iterator_category = std::input_iterator_tag;
      using value_type = SwitchingClass;
      using difference_type = std::ptrdiff_t;

      iterator() = default;
      iterator(const SwitchingSpace* space, std::uint64_t index) : space_(space), index_(index) {}

      SwitchingClass operator*() const {
        return {&space_->graph(), space_->canonical_at(index_)};
      }
      iterator& operator++() {
        ++index_;
        return *this;
      }
      iterator operator++(int) {
        auto copy = *this;
        ++index_;
        return copy;
      }
      std::uint64_t index() const noexcept { return index_; }
      friend bool operator==(const iterator& a, const iterator& b) noexcept {
        return a.index_ == b.index_;
      }

     private:
      const SwitchingSpace* space_ = nullptr;
      std::uint64_t index_ = 0;
    };

    explicit ClassRange(const SwitchingSpace& space) : space_(&space), count_(space.class_count()) {}
    iterator begin() const { return {space_, 0}; }
    iterator end() const { return {space_, count_}; }
    std::uint64_t size() const noexcept { return count_; }

   private:
    const SwitchingSpace* space_;
    std::uint64_t count_;
  };

  ClassRange classes() const { return ClassRange(*this); }

 private:
  void check_graph(const SignedGraph& s) const {
    if (&s.graph() != graph_ && !(s.graph() == *graph_)) {
      throw std::invalid_argument("signed graph is on a different underlying graph");
    }
  }

  const Graph* graph_;
  Gf2Basis basis_;
  std::vector<std::size_t> free_;
  std::size_t components_;
};

inline bool switching_equivalent(const SignedGraph& a, const SignedGraph& b) {
  if (!(a.graph() == b.graph())) {
    throw std::invalid_argument("switching equivalence needs a common underlying graph");
  }
  return SwitchingSpace(a.graph()).equivalent(a, b);
}

inline SwitchingClass class_of(const SignedGraph& s) {
  return SwitchingSpace(s.graph()).class_of(s);
}

/// 2^(m-n+c). Throws GuardError when the exponent exceeds 62.
inline std::uint64_t count_classes(const Graph& g) { return SwitchingSpace(g).class_count(); }

/// Owning variant of SwitchingSpace::classes().
class ClassEnumeration {
 public:
  explicit ClassEnumeration(const Graph& g) : space_(g), range_(space_.class_count()) {}
  ClassEnumeration(const ClassEnumeration&) = delete;
  ClassEnumeration& operator=(const ClassEnumeration&) = delete;

  SwitchingSpace::ClassRange::iterator begin() const { return {&space_, 0}; }
  SwitchingSpace::ClassRange::iterator end() const { return {&space_, range_}; }
  std::uint64_t size() const noexcept { return range_; }
  const SwitchingSpace& space() const noexcept { return space_; }

 private:
  SwitchingSpace space_;
  std::uint64_t range_;
};

inline ClassEnumeration enumerate_classes(const Graph& g) { return ClassEnumeration(g); }

/// Fewest negative edges over all signings in the class.
inline std::size_t mu(const SwitchingClass& c) {
  if (c.graph == nullptr) throw std::invalid_argument("switching class has no graph");
  return min_weight_coset_member(cut_space_basis(*c.graph), c.canonical).weight;
}

/// Graph on the same vertices whose edges are the negative edges of `s`.
inline Graph negative_subgraph(const SignedGraph& s) {
  return Graph(s.graph().order(), s.negative_edges());
}

struct SignedDegree {
  std::size_t positive = 0;
  std::size_t negative = 0;

  friend bool operator==(const SignedDegree&, const SignedDegree&) = default;
};

inline SignedDegree signed_degrees(const SignedGraph& s, Vertex v) {
  const Graph& g = s.graph();
  if (v >= g.order()) throw std::out_of_range("vertex out of range");
  SignedDegree d;
  for (Vertex w = 0; w < g.order(); ++w) {
    if (auto e = g.edge_index(v, w)) {
      if (s.negative(*e)) {
        ++d.negative;
      } else {
        ++d.positive;
      }
    }
  }
  return d;
}

/// A switching function taking `a` to `b`, or nullopt when none exists.
///
/// Solved by propagation along a spanning forest, so it is independent of
/// the cut-space basis. The smallest vertex of every component is left
/// unflipped, which fixes the choice between a set and its complement.
inline std::optional<SwitchingFunction> switching_witness(const SignedGraph& a,
                                                          const SignedGraph& b) {
  const Graph& g = a.graph();
  if (!(g == b.graph())) {
    throw std::invalid_argument("switching witness needs a common underlying graph");
  }
  const BitVector diff = a.signs() ^ b.signs();
  std::vector<int> side(g.order(), -1);
  std::vector<Vertex> stack;
  for (Vertex root = 0; root < g.order(); ++root) {
    if (side[root] != -1) continue;
    side[root] = 0;
    stack.push_back(root);
    while (!stack.empty()) {
      const Vertex u = stack.back();
      stack.pop_back();
      for (Vertex w = 0; w < g.order(); ++w) {
        const auto e = g.edge_index(u, w);
        if (!e) continue;
        const int expected = side[u] ^ (diff.get(*e) ? 1 : 0);
        if (side[w] == -1) {
          side[w] = expected;
          stack.push_back(w);
        } else if (side[w] != expected) {
          return std::nullopt;
        }
      }
    }
  }
  SwitchingFunction t = SwitchingFunction::identity(g.order());
  for (std::size_t v = 0; v < g.order(); ++v) t.flipped[v] = side[v] == 1;
  return t;
}

}  // namespace sigswitch
