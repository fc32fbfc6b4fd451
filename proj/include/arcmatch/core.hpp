#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "arcmatch/error.hpp"

namespace arcmatch {

// Vertices are 1-based: a matching with n edges lives on {1, ..., 2n}.
using Vertex = std::int32_t;

struct Edge {
  Vertex left = 0;
  Vertex right = 0;

  bool touches(Vertex v) const noexcept { return left == v || right == v; }
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

// Contiguous vertex range [lo, hi]. The empty segment is a dedicated
// sentinel and never encoded as lo > hi.
class Segment {
 public:
  Segment() = default;  // empty
  Segment(Vertex lo, Vertex hi);

  static Segment empty() noexcept { return {}; }

  bool is_empty() const noexcept { return lo_ == 0; }
  Vertex lo() const noexcept { return lo_; }
  Vertex hi() const noexcept { return hi_; }
  Vertex length() const noexcept { return is_empty() ? 0 : hi_ - lo_ + 1; }
  bool contains(Vertex v) const noexcept { return !is_empty() && lo_ <= v && v <= hi_; }
  bool contains(const Segment& other) const noexcept;

  // Smallest segment covering this one and both endpoints of `e`.
  Segment hull(const Edge& e) const noexcept;

  friend bool operator==(const Segment&, const Segment&) = default;
  friend auto operator<=>(const Segment&, const Segment&) = default;

 private:
  Vertex lo_ = 0;
  Vertex hi_ = 0;
};

// Perfect matching on [2n], held as a fixed-point-free involution.
// Immutable once constructed.
class Matching {
 public:
  Matching() = default;

  // Validating constructor; pairs may be given in either orientation.
  static Matching from_pairs(std::span<const std::pair<Vertex, Vertex>> pairs);
  static Matching from_edges(std::span<const Edge> edges);

  std::size_t edge_count() const noexcept { return edges_.size(); }
  Vertex vertex_count() const noexcept { return static_cast<Vertex>(partner_.size()); }
  bool empty() const noexcept { return edges_.empty(); }

  Vertex partner(Vertex v) const;
  Edge edge_at(Vertex v) const;
  bool has_edge(const Edge& e) const noexcept;

  // Sorted by left endpoint.
  const std::vector<Edge>& edges() const noexcept { return edges_; }

  // The image under v -> 2n + 1 - v.
  Matching reversed() const;

  friend bool operator==(const Matching& a, const Matching& b) { return a.partner_ == b.partner_; }

 private:
  explicit Matching(std::vector<Vertex> partner);

  std::vector<Vertex> partner_;  // partner_[v - 1]
  std::vector<Edge> edges_;
};

Matching make_matching(std::span<const std::pair<Vertex, Vertex>> pairs);
Matching make_matching(std::initializer_list<std::pair<Vertex, Vertex>> pairs);

enum class EdgeRelation { Crossing, Nested, Disjoint };

EdgeRelation edge_relation(const Edge& e, const Edge& f);

inline bool crosses(const Edge& e, const Edge& f) noexcept {
  return (e.left < f.left && f.left < e.right && e.right < f.right) ||
         (f.left < e.left && e.left < f.right && f.right < e.right);
}

// Nontrivial intervals sorted by (lo, hi). The full vertex set and the
// empty set are never reported.
std::vector<Segment> find_intervals(const Matching& m);

// Direct O(n^3) evaluation of the interval definition; kept as the
// reference the linear-sweep version is tested against.
std::vector<Segment> find_intervals_reference(const Matching& m);

bool is_indecomposable(const Matching& m);

// Restriction to `keep` with order-preserving relabeling onto [2|keep|].
Matching subpattern(const Matching& m, std::span<const Edge> keep);

// Exhaustive embedding search. Subsets of m's edges are tried in
// lexicographic order of their (sorted) edge lists; the first hit wins.
std::optional<std::vector<Edge>> contains(const Matching& m, const Matching& pattern);

}  // namespace arcmatch
