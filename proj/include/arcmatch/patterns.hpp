#pragma once

#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "arcmatch/core.hpp"

namespace arcmatch {

enum class PatternKind { Interleaving, RightBrokenNesting, LeftBrokenNesting, Nesting };

std::string_view to_string(PatternKind kind) noexcept;
std::optional<PatternKind> pattern_kind_from_string(std::string_view name);

// Smallest k for which canonical(kind, k) is defined.
inline std::size_t min_pattern_size(PatternKind kind) noexcept {
  return kind == PatternKind::Interleaving || kind == PatternKind::Nesting ? 1 : 2;
}

// Canonical k-edge member of the family, on [2k].
Matching canonical(PatternKind kind, std::size_t k);

// Edges of canonical(kind, k) in their semantic order (interleaving left to
// right, broken nestings breaker first then outermost to innermost).
std::vector<Edge> canonical_edges(PatternKind kind, std::size_t k);

enum class Side { Left, Right };
enum class WitnessKind { Interleaving, BrokenNesting, ProperPinSequence };

std::string_view to_string(Side side) noexcept;
std::string_view to_string(WitnessKind kind) noexcept;

// A self-validating certificate. The constructor functions below verify the
// edge set against its definition and throw Internal if it does not hold.
class Witness {
 public:
  static Witness interleaving(const Matching& host, std::vector<Edge> edges);
  // `nest` is ordered outermost first.
  static Witness broken_nesting(const Matching& host, Edge breaker, std::vector<Edge> nest, Side side);
  static Witness proper_pin_sequence(const Matching& host, std::vector<Edge> pins);

  WitnessKind kind() const noexcept { return kind_; }
  std::optional<Side> side() const noexcept { return side_; }
  std::optional<Edge> breaker() const noexcept { return breaker_; }
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  std::size_t size() const noexcept { return edges_.size(); }

  // The canonical family the sub-matching must equal, when there is one.
  std::optional<PatternKind> pattern() const noexcept;

  // Re-run the definition check against `host`.
  bool verify(const Matching& host) const;

 private:
  Witness(WitnessKind kind, std::vector<Edge> edges, std::optional<Side> side, std::optional<Edge> breaker)
      : kind_(kind), side_(side), breaker_(breaker), edges_(std::move(edges)) {}

  WitnessKind kind_;
  std::optional<Side> side_;
  std::optional<Edge> breaker_;
  std::vector<Edge> edges_;
};

struct MonotoneRuns {
  std::vector<std::size_t> increasing;  // indices into the input
  std::vector<std::size_t> decreasing;
};

// A longest strictly increasing and a longest strictly decreasing
// subsequence, as index lists.
MonotoneRuns longest_monotone(std::span<const long> values);

struct Crossers {
  std::vector<Edge> left;   // f.left < e.left < f.right < e.right
  std::vector<Edge> right;  // e.left < f.left < e.right < f.right
};

// Both lists sorted by left endpoint.
Crossers crossers(const Matching& m, const Edge& e);

// Given an edge crossed on one side by at least (k-1)^2 + 1 edges, extract a
// k-edge interleaving among those crossers, or k-1 nested crossers that `e`
// breaks. Fewer crossers are fine as long as one side has such a run;
// otherwise InsufficientCrossers.
Witness extract_from_crossed_edge(const Matching& m, const Edge& e, std::size_t k);

struct PatternMatch {
  std::size_t size = 0;
  std::vector<Edge> edges;  // semantic order, as in canonical_edges
};

// Largest k with canonical(kind, k) contained in m. Broken nestings report 0
// when no size-2 member is present.
PatternMatch max_pattern(const Matching& m, PatternKind kind);

}  // namespace arcmatch
