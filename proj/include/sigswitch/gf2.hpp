#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "sigswitch/bitvector.hpp"
#include "sigswitch/error.hpp"
#include "sigswitch/graph.hpp"

namespace sigswitch {

/// Row-reduced echelon basis of a subspace of GF(2)^m.
///
/// Row i has its lowest set bit at pivots()[i]; pivots are strictly
/// increasing and every pivot column is zero in all other rows. The
/// canonical representative of a coset v + span is the unique member that
/// is zero on every pivot column.
class Gf2Basis {
 public:
  explicit Gf2Basis(std::size_t length = 0) : length_(length) {}

  /// Row-reduces `vectors`; dependent inputs are dropped.
  static Gf2Basis span_of(std::size_t length, std::span<const BitVector> vectors) {
    Gf2Basis basis(length);
    for (const auto& v : vectors) basis.insert(v);
    return basis;
  }

  /// Adds `v` to the spanning set. Returns false if it was already in the span.
  bool insert(BitVector v) {
    check_length(v);
    v = reduce(v);
    const std::size_t pivot = v.first_set();
    if (pivot == v.size()) return false;
    // Clear the new pivot column from existing rows to keep the form reduced.
    for (auto& row : rows_) {
      if (row.get(pivot)) row ^= v;
    }
    std::size_t at = 0;
    while (at < pivots_.size() && pivots_[at] < pivot) ++at;
    rows_.insert(rows_.begin() + static_cast<std::ptrdiff_t>(at), std::move(v));
    pivots_.insert(pivots_.begin() + static_cast<std::ptrdiff_t>(at), pivot);
    return true;
  }

  std::size_t length() const noexcept { return length_; }
  std::size_t rank() const noexcept { return rows_.size(); }
  std::span<const BitVector> rows() const noexcept { return rows_; }
  std::span<const std::size_t> pivots() const noexcept { return pivots_; }

  /// Coordinates that are not pivots, ascending. These carry the identity
  /// of a coset.
  std::vector<std::size_t> free_coordinates() const {
    std::vector<std::size_t> out;
    std::size_t p = 0;
    for (std::size_t i = 0; i < length_; ++i) {
      if (p < pivots_.size() && pivots_[p] == i) {
        ++p;
      } else {
        out.push_back(i);
      }
    }
    return out;
  }

  BitVector reduce(BitVector v) const {
    check_length(v);
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      if (v.get(pivots_[r])) v ^= rows_[r];
    }
    return v;
  }

  bool in_span(const BitVector& v) const { return reduce(v).none(); }

 private:
  void check_length(const BitVector& v) const {
    if (v.size() != length_) {
      throw std::invalid_argument("vector of length " + std::to_string(v.size()) +
                                  " does not match basis length " + std::to_string(length_));
    }
  }

  std::size_t length_ = 0;
  std::vector<BitVector> rows_;
  std::vector<std::size_t> pivots_;
};

inline BitVector reduce(const Gf2Basis& basis, const BitVector& v) { return basis.reduce(v); }
inline bool in_span(const Gf2Basis& basis, const BitVector& v) { return basis.in_span(v); }

/// Basis of the cut space of `g`: the span of all vertex stars. Its rank is
/// n - c.
inline Gf2Basis cut_space_basis(const Graph& g) {
  Gf2Basis basis(g.size());
  std::vector<bool> side(g.order(), false);
  for (Vertex v = 0; v < g.order(); ++v) {
    side[v] = true;
    basis.insert(vertex_cut_edges(g, side));
    side[v] = false;
  }
  return basis;
}

inline constexpr std::size_t kMaxExhaustiveRank = 20;

struct CosetMinimum {
  std::size_t weight = 0;
  BitVector witness;
};

/// Minimum-weight member of v + span(basis) by exhausting all 2^rank
/// members in Gray-code order. Ties go to the lexicographically smallest
/// vector. Throws GuardError past kMaxExhaustiveRank.
inline CosetMinimum min_weight_coset_member(const Gf2Basis& basis, const BitVector& v) {
  if (basis.rank() > kMaxExhaustiveRank) {
    throw GuardError("coset exhaustion rank", kMaxExhaustiveRank, basis.rank());
  }
  if (v.size() != basis.length()) {
    throw std::invalid_argument("vector length does not match basis length");
  }
  const auto rows = basis.rows();
  BitVector current = v;
  CosetMinimum best{current.popcount(), current};
  const std::uint64_t members = std::uint64_t{1} << rows.size();
  for (std::uint64_t step = 1; step < members; ++step) {
    current ^= rows[static_cast<std::size_t>(std::countr_zero(step))];
    const std::size_t weight = current.popcount();
    if (weight < best.weight || (weight == best.weight && current < best.witness)) {
      best.weight = weight;
      best.witness = current;
    }
  }
  return best;
}

}  // namespace sigswitch
