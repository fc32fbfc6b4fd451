#include "arcmatch/patterns.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "arcmatch/pins.hpp"

namespace arcmatch {

std::string_view to_string(PatternKind kind) noexcept {
  switch (kind) {
    case PatternKind::Interleaving: return "interleaving";
    case PatternKind::RightBrokenNesting: return "right_broken_nesting";
    case PatternKind::LeftBrokenNesting: return "left_broken_nesting";
    case PatternKind::Nesting: return "nesting";
  }
  return "unknown";
}

std::optional<PatternKind> pattern_kind_from_string(std::string_view name) {
  for (auto kind : {PatternKind::Interleaving, PatternKind::RightBrokenNesting, PatternKind::LeftBrokenNesting,
                    PatternKind::Nesting}) {
    if (to_string(kind) == name) return kind;
  }
  return std::nullopt;
}

std::string_view to_string(Side side) noexcept { return side == Side::Left ? "left" : "right"; }

std::string_view to_string(WitnessKind kind) noexcept {
  switch (kind) {
    case WitnessKind::Interleaving: return "interleaving";
    case WitnessKind::BrokenNesting: return "broken_nesting";
    case WitnessKind::ProperPinSequence: return "proper_pin_sequence";
  }
  return "unknown";
}

std::vector<Edge> canonical_edges(PatternKind kind, std::size_t k) {
  if (k < min_pattern_size(kind)) {
    throw Error(ErrorCode::SizeTooSmall,
                std::string(to_string(kind)) + " needs at least " + std::to_string(min_pattern_size(kind)) + " edges",
                static_cast<long>(k));
  }
  const auto n = static_cast<Vertex>(k);
  std::vector<Edge> out;
  out.reserve(k);
  switch (kind) {
    case PatternKind::Interleaving:
      for (Vertex i = 1; i <= n; ++i) out.push_back({i, i + n});
      break;
    case PatternKind::RightBrokenNesting:
      out.push_back({n, 2 * n});
      for (Vertex i = 1; i < n; ++i) out.push_back({i, 2 * n - i});
      break;
    case PatternKind::LeftBrokenNesting:
      out.push_back({1, n + 1});
      for (Vertex i = 1; i < n; ++i) out.push_back({i + 1, 2 * n - i + 1});
      break;
    case PatternKind::Nesting:
      for (Vertex i = 1; i <= n; ++i) out.push_back({i, 2 * n + 1 - i});
      break;
  }
  return out;
}

Matching canonical(PatternKind kind, std::size_t k) { return Matching::from_edges(canonical_edges(kind, k)); }

// ---------------------------------------------------------------------------
// Witness

Witness Witness::interleaving(const Matching& host, std::vector<Edge> edges) {
  std::sort(edges.begin(), edges.end());
  Witness w(WitnessKind::Interleaving, std::move(edges), std::nullopt, std::nullopt);
  if (!w.verify(host)) throw Error(ErrorCode::Internal, "edges do not form an interleaving");
  return w;
}

Witness Witness::broken_nesting(const Matching& host, Edge breaker, std::vector<Edge> nest, Side side) {
  std::vector<Edge> edges{breaker};
  edges.insert(edges.end(), nest.begin(), nest.end());
  Witness w(WitnessKind::BrokenNesting, std::move(edges), side, breaker);
  if (!w.verify(host)) throw Error(ErrorCode::Internal, "edges do not form a broken nesting");
  return w;
}

Witness Witness::proper_pin_sequence(const Matching& host, std::vector<Edge> pins) {
  Witness w(WitnessKind::ProperPinSequence, std::move(pins), std::nullopt, std::nullopt);
  if (!w.verify(host)) throw Error(ErrorCode::Internal, "edges do not form a proper pin sequence");
  return w;
}

std::optional<PatternKind> Witness::pattern() const noexcept {
  switch (kind_) {
    case WitnessKind::Interleaving: return PatternKind::Interleaving;
    case WitnessKind::BrokenNesting:
      return side_ == Side::Right ? PatternKind::RightBrokenNesting : PatternKind::LeftBrokenNesting;
    case WitnessKind::ProperPinSequence: return std::nullopt;
  }
  return std::nullopt;
}

bool Witness::verify(const Matching& host) const {
  if (edges_.empty()) return false;
  for (const auto& e : edges_) {
    if (!host.has_edge(e)) return false;
  }
  if (std::set<Edge>(edges_.begin(), edges_.end()).size() != edges_.size()) return false;

  if (auto kind = pattern()) {
    if (edges_.size() < min_pattern_size(*kind)) return false;
    // Position-wise agreement with the canonical edge order.
    const auto expected = canonical_edges(*kind, edges_.size());
    std::vector<Vertex> vertices;
    for (const auto& e : edges_) {
      vertices.push_back(e.left);
      vertices.push_back(e.right);
    }
    std::sort(vertices.begin(), vertices.end());
    auto rank = [&](Vertex v) {
      return static_cast<Vertex>(std::lower_bound(vertices.begin(), vertices.end(), v) - vertices.begin()) + 1;
    };
    for (std::size_t i = 0; i < edges_.size(); ++i) {
      if (Edge{rank(edges_[i].left), rank(edges_[i].right)} != expected[i]) return false;
    }
    return true;
  }

  auto in_host = classify_sequence(host, edges_);
  if (!in_host.is_proper) return false;
  // The same pins, relabelled as a stand-alone matching.
  const Matching sub = subpattern(host, edges_);
  std::vector<Vertex> vertices;
  for (const auto& e : edges_) {
    vertices.push_back(e.left);
    vertices.push_back(e.right);
  }
  std::sort(vertices.begin(), vertices.end());
  std::vector<Edge> relabelled;
  for (const auto& e : edges_) {
    auto rank = [&](Vertex v) {
      return static_cast<Vertex>(std::lower_bound(vertices.begin(), vertices.end(), v) - vertices.begin()) + 1;
    };
    relabelled.push_back({rank(e.left), rank(e.right)});
  }
  return classify_sequence(sub, relabelled).is_proper;
}

// ---------------------------------------------------------------------------
// Monotone subsequences

namespace {

// Patience sorting with predecessor links; returns indices of a longest
// strictly increasing subsequence of `values`.
std::vector<std::size_t> longest_increasing(std::span<const long> values) {
  std::vector<std::size_t> tails;  // index of smallest tail for each length
  std::vector<std::optional<std::size_t>> prev(values.size());
  for (std::size_t i = 0; i < values.size(); ++i) {
    auto pos = std::lower_bound(tails.begin(), tails.end(), values[i],
                                [&](std::size_t t, long v) { return values[t] < v; });
    if (pos != tails.begin()) prev[i] = *(pos - 1);
    if (pos == tails.end()) {
      tails.push_back(i);
    } else {
      *pos = i;
    }
  }
  std::vector<std::size_t> run;
  if (tails.empty()) return run;
  for (std::optional<std::size_t> at = tails.back(); at; at = prev[*at]) run.push_back(*at);
  std::reverse(run.begin(), run.end());
  return run;
}

}  // namespace

MonotoneRuns longest_monotone(std::span<const long> values) {
  std::vector<long> sorted(values.begin(), values.end());
  std::sort(sorted.begin(), sorted.end());
  if (auto dup = std::adjacent_find(sorted.begin(), sorted.end()); dup != sorted.end()) {
    throw Error(ErrorCode::DuplicateValue, "duplicate value " + std::to_string(*dup), *dup);
  }
  std::vector<long> negated(values.size());
  std::transform(values.begin(), values.end(), negated.begin(), [](long v) { return -v; });
  return {longest_increasing(values), longest_increasing(negated)};
}

Crossers crossers(const Matching& m, const Edge& e) {
  if (!m.has_edge(e)) {
    throw Error(ErrorCode::UnknownEdge,
                "edge " + std::to_string(e.left) + "-" + std::to_string(e.right) + " is not in the matching",
                e.left);
  }
  Crossers out;
  for (const auto& f : m.edges()) {
    if (f.left < e.left && e.left < f.right && f.right < e.right) out.left.push_back(f);
    if (e.left < f.left && f.left < e.right && e.right < f.right) out.right.push_back(f);
  }
  return out;
}

Witness extract_from_crossed_edge(const Matching& m, const Edge& e, std::size_t k) {
  if (k < 1) throw Error(ErrorCode::SizeTooSmall, "k must be positive");
  const auto sides = crossers(m, e);
  const bool left_first = sides.left.size() >= sides.right.size();
  const auto& busier = left_first ? sides.left : sides.right;
  const auto& quieter = left_first ? sides.right : sides.left;
  const std::size_t needed = (k - 1) * (k - 1) + 1;

  auto attempt = [&](const std::vector<Edge>& group) -> std::optional<Witness> {
    // Right endpoints in order of left endpoint.
    std::vector<long> rights;
    rights.reserve(group.size());
    for (const auto& f : group) rights.push_back(f.right);
    const auto runs = longest_monotone(rights);
    if (runs.increasing.size() >= k) {
      std::vector<Edge> chosen;
      for (std::size_t i = 0; i < k; ++i) chosen.push_back(group[runs.increasing[i]]);
      return Witness::interleaving(m, std::move(chosen));
    }
    if (k >= 2 && runs.decreasing.size() >= k - 1 && !group.empty()) {
      std::vector<Edge> nest;
      for (std::size_t i = 0; i + 1 < k; ++i) nest.push_back(group[runs.decreasing[i]]);
      // e breaks on the side where its outer endpoint lies beyond the nest.
      const Side side = e.right > nest.front().right ? Side::Right : Side::Left;
      return Witness::broken_nesting(m, e, std::move(nest), side);
    }
    return std::nullopt;
  };

  // Below the guaranteed count a run may still exist; only report failure
  // when neither side has one.
  if (auto w = attempt(busier)) return std::move(*w);
  if (busier.size() >= needed) throw Error(ErrorCode::Internal, "no monotone run of the guaranteed length");
  if (auto w = attempt(quieter)) return std::move(*w);
  throw Error(ErrorCode::InsufficientCrossers,
              "edge is crossed by " + std::to_string(busier.size()) + " edges on its busier side, need " +
                  std::to_string(needed),
              static_cast<long>(busier.size()));
}

// ---------------------------------------------------------------------------
// Exact maxima

namespace {

// Longest run with increasing lefts and decreasing rights among `edges`
// (sorted by left); outermost first.
std::vector<Edge> longest_chain(const std::vector<Edge>& edges) {
  std::vector<long> rights;
  for (const auto& e : edges) rights.push_back(e.right);
  const auto runs = longest_monotone(rights);
  std::vector<Edge> out;
  for (auto i : runs.decreasing) out.push_back(edges[i]);
  return out;
}

}  // namespace

PatternMatch max_pattern(const Matching& m, PatternKind kind) {
  PatternMatch best;
  switch (kind) {
    case PatternKind::Interleaving: {
      // Pairwise crossing edges a1 < ... < ak < b1 < ... < bk all straddle a
      // common gap between t and t + 1.
      for (Vertex t = 1; t < m.vertex_count(); ++t) {
        std::vector<Edge> straddling;
        for (const auto& e : m.edges()) {
          if (e.left <= t && t < e.right) straddling.push_back(e);
        }
        if (straddling.size() <= best.size) continue;
        std::vector<long> rights;
        for (const auto& e : straddling) rights.push_back(e.right);
        const auto runs = longest_monotone(rights);
        if (runs.increasing.size() > best.size) {
          best.size = runs.increasing.size();
          best.edges.clear();
          for (auto i : runs.increasing) best.edges.push_back(straddling[i]);
        }
      }
      break;
    }
    case PatternKind::Nesting:
      best.edges = longest_chain(m.edges());
      best.size = best.edges.size();
      break;
    case PatternKind::RightBrokenNesting:
    case PatternKind::LeftBrokenNesting:
      for (const auto& e : m.edges()) {
        const auto sides = crossers(m, e);
        const auto nest = longest_chain(kind == PatternKind::RightBrokenNesting ? sides.left : sides.right);
        if (!nest.empty() && nest.size() + 1 > best.size) {
          best.size = nest.size() + 1;
          best.edges.assign(1, e);
          best.edges.insert(best.edges.end(), nest.begin(), nest.end());
        }
      }
      break;
  }
  return best;
}

}  // namespace arcmatch
