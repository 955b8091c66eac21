#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "sigswitch/bitvector.hpp"
#include "sigswitch/error.hpp"

namespace sigswitch {

using Vertex = std::uint32_t;
using EdgeIndex = std::uint32_t;

struct Edge {
  Vertex u;
  Vertex v;

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Simple undirected graph on vertices 0..n-1.
///
/// Edges are stored with u < v in lexicographic order; the position of an
/// edge in that order is its index, and every sign vector in the library
/// is laid out against it. Immutable once built.
class Graph {
 public:
  static constexpr std::size_t kNoEdge = static_cast<std::size_t>(-1);

  Graph() = default;

  /// Throws ParseError on loops, repeated edges or out-of-range endpoints.
  Graph(std::size_t n, std::vector<Edge> edges) : n_(n), edges_(std::move(edges)) {
    for (auto& e : edges_) {
      if (e.u == e.v) throw ParseError("loop at vertex " + std::to_string(e.u));
      if (e.u >= n_ || e.v >= n_) {
        throw ParseError("edge endpoint out of range for " + std::to_string(n_) + " vertices");
      }
      if (e.u > e.v) std::swap(e.u, e.v);
    }
    std::sort(edges_.begin(), edges_.end());
    if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end()) {
      throw ParseError("repeated edge; multigraphs are not supported");
    }
    index_.assign(n_ * n_, kNoEdge);
    degree_.assign(n_, 0);
    for (std::size_t i = 0; i < edges_.size(); ++i) {
      const auto [u, v] = edges_[i];
      index_[u * n_ + v] = i;
      index_[v * n_ + u] = i;
      ++degree_[u];
      ++degree_[v];
    }
  }

  std::size_t order() const noexcept { return n_; }
  std::size_t size() const noexcept { return edges_.size(); }
  std::span<const Edge> edges() const noexcept { return edges_; }
  const Edge& edge(std::size_t i) const { return edges_[i]; }

  bool adjacent(Vertex u, Vertex v) const { return index_[u * n_ + v] != kNoEdge; }

  /// Edge index of {u,v}, symmetric in its arguments; nullopt when absent.
  std::optional<std::size_t> edge_index(Vertex u, Vertex v) const {
    if (u >= n_ || v >= n_) return std::nullopt;
    const auto i = index_[u * n_ + v];
    if (i == kNoEdge) return std::nullopt;
    return i;
  }

  std::size_t degree(Vertex v) const { return degree_[v]; }
  std::size_t max_degree() const {
    return degree_.empty() ? 0 : *std::max_element(degree_.begin(), degree_.end());
  }

  std::vector<Vertex> neighbors(Vertex v) const {
    std::vector<Vertex> out;
    for (Vertex w = 0; w < n_; ++w) {
      if (w != v && adjacent(v, w)) out.push_back(w);
    }
    return out;
  }

  friend bool operator==(const Graph& a, const Graph& b) noexcept {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }

 private:
  std::size_t n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::size_t> index_;
  std::vector<std::size_t> degree_;
};

inline Graph complete_graph(std::size_t n) {
  if (n == 0) throw std::invalid_argument("complete graph needs at least one vertex");
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) edges.push_back({u, v});
  }
  return Graph(n, std::move(edges));
}

inline Graph path_graph(std::size_t n) {
  std::vector<Edge> edges;
  for (Vertex v = 1; v < n; ++v) edges.push_back({v - 1, v});
  return Graph(n, std::move(edges));
}

inline Graph cycle_graph(std::size_t n) {
  if (n < 3) throw std::invalid_argument("cycle needs at least three vertices");
  std::vector<Edge> edges;
  for (Vertex v = 0; v < n; ++v) edges.push_back({v, static_cast<Vertex>((v + 1) % n)});
  return Graph(n, std::move(edges));
}

inline Graph empty_graph(std::size_t n) { return Graph(n, {}); }

/// Vertex of GP(n,k): layer 0 is the outer cycle, layer 1 the inner star.
struct GpVertex {
  std::uint32_t layer;
  std::uint32_t position;

  Vertex flat(std::size_t n) const { return static_cast<Vertex>(layer * n + position); }
  static GpVertex from_flat(Vertex id, std::size_t n) {
    return {static_cast<std::uint32_t>(id / n), static_cast<std::uint32_t>(id % n)};
  }
  friend auto operator<=>(const GpVertex&, const GpVertex&) = default;
};

inline bool valid_gp_parameters(std::size_t n, std::size_t k) {
  return n >= 3 && k >= 1 && k <= (n - 1) / 2;
}

/// GP(n,k) with vertex (layer, j) flattened to layer*n + j.
inline Graph generalized_petersen(std::size_t n, std::size_t k) {
  if (!valid_gp_parameters(n, k)) {
    throw std::invalid_argument("GP(" + std::to_string(n) + "," + std::to_string(k) +
                                ") needs n >= 3 and 1 <= k <= (n-1)/2");
  }
  std::vector<Edge> edges;
  edges.reserve(3 * n);
  auto id = [n](std::uint32_t layer, std::size_t j) {
    return GpVertex{layer, static_cast<std::uint32_t>(j % n)}.flat(n);
  };
  for (std::size_t j = 0; j < n; ++j) {
    edges.push_back({id(0, j), id(0, j + 1)});
    edges.push_back({id(0, j), id(1, j)});
    edges.push_back({id(1, j), id(1, j + k)});
  }
  return Graph(2 * n, std::move(edges));
}

/// Decodes the short (n <= 62) graph6 form. Surrounding whitespace and an
/// optional ">>graph6<<" header are accepted.
inline Graph parse_graph6(std::string_view text) {
  constexpr std::string_view kHeader = ">>graph6<<";
  auto is_space = [](char c) { return c == ' ' || c == '\n' || c == '\r' || c == '\t'; };
  while (!text.empty() && is_space(text.front())) text.remove_prefix(1);
  while (!text.empty() && is_space(text.back())) text.remove_suffix(1);
  if (text.starts_with(kHeader)) text.remove_prefix(kHeader.size());
  if (text.empty()) throw ParseError("graph6: empty input");

  for (char c : text) {
    if (c < 63 || c > 126) {
      throw ParseError(std::string("graph6: character out of range: '") + c + "'");
    }
  }
  if (text.front() == 126) {
    throw ParseError("graph6: only the short form (n <= 62) is supported");
  }
  const std::size_t n = static_cast<std::size_t>(text.front() - 63);
  const std::size_t bits = n * (n - (n > 0 ? 1 : 0)) / 2;
  const std::size_t needed = (bits + 5) / 6;
  const std::string_view body = text.substr(1);
  if (body.size() < needed) {
    throw ParseError("graph6: truncated adjacency field (" + std::to_string(body.size()) +
                     " of " + std::to_string(needed) + " bytes)");
  }
  if (body.size() > needed) throw ParseError("graph6: trailing bytes after adjacency field");

  std::vector<Edge> edges;
  std::size_t k = 0;
  // Upper triangle in column order: (0,1), (0,2), (1,2), (0,3), ...
  for (Vertex v = 1; v < n; ++v) {
    for (Vertex u = 0; u < v; ++u, ++k) {
      const int byte = body[k / 6] - 63;
      if ((byte >> (5 - k % 6)) & 1) edges.push_back({u, v});
    }
  }
  if (bits % 6 != 0) {
    const int last = body.back() - 63;
    if ((last & ((1 << (6 - bits % 6)) - 1)) != 0) {
      throw ParseError("graph6: nonzero padding bits");
    }
  }
  return Graph(n, std::move(edges));
}

struct Components {
  std::size_t count = 0;
  std::vector<std::size_t> labels;
};

/// Labels are assigned in order of each component's smallest vertex.
inline Components connected_components(const Graph& g) {
  constexpr std::size_t kUnset = static_cast<std::size_t>(-1);
  Components out{0, std::vector<std::size_t>(g.order(), kUnset)};
  std::vector<Vertex> stack;
  for (Vertex start = 0; start < g.order(); ++start) {
    if (out.labels[start] != kUnset) continue;
    out.labels[start] = out.count;
    stack.push_back(start);
    while (!stack.empty()) {
      const Vertex u = stack.back();
      stack.pop_back();
      for (Vertex w = 0; w < g.order(); ++w) {
        if (out.labels[w] == kUnset && g.adjacent(u, w)) {
          out.labels[w] = out.count;
          stack.push_back(w);
        }
      }
    }
    ++out.count;
  }
  return out;
}

/// Characteristic vector (over edge indices) of the cut between `side`
/// and its complement. `side` is a membership mask of length n.
inline BitVector vertex_cut_edges(const Graph& g, const std::vector<bool>& side) {
  if (side.size() != g.order()) {
    throw std::invalid_argument("vertex set mask has wrong length");
  }
  BitVector cut(g.size());
  for (std::size_t i = 0; i < g.size(); ++i) {
    const auto [u, v] = g.edge(i);
    if (side[u] != side[v]) cut.set(i);
  }
  return cut;
}

inline BitVector vertex_cut_edges(const Graph& g, std::span<const Vertex> vertices) {
  std::vector<bool> side(g.order(), false);
  for (auto v : vertices) {
    if (v >= g.order()) throw std::out_of_range("vertex out of range");
    side[v] = true;
  }
  return vertex_cut_edges(g, side);
}

inline BitVector vertex_cut_edges(const Graph& g, std::initializer_list<Vertex> vertices) {
  return vertex_cut_edges(g, std::span<const Vertex>(vertices.begin(), vertices.size()));
}

}  // namespace sigswitch
