#include "arcmatch/core.hpp"

#include <algorithm>
#include <string>

namespace arcmatch {

const char* to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::DuplicateVertex: return "DuplicateVertex";
    case ErrorCode::SelfLoop: return "SelfLoop";
    case ErrorCode::GapInVertexSet: return "GapInVertexSet";
    case ErrorCode::VertexOutOfRange: return "VertexOutOfRange";
    case ErrorCode::SharedVertex: return "SharedVertex";
    case ErrorCode::UnknownEdge: return "UnknownEdge";
    case ErrorCode::EmptySegment: return "EmptySegment";
    case ErrorCode::DuplicatePin: return "DuplicatePin";
    case ErrorCode::NotIndecomposable: return "NotIndecomposable";
    case ErrorCode::NotRightReaching: return "NotRightReaching";
    case ErrorCode::SizeTooSmall: return "SizeTooSmall";
    case ErrorCode::DuplicateValue: return "DuplicateValue";
    case ErrorCode::InsufficientCrossers: return "InsufficientCrossers";
    case ErrorCode::SizeCapExceeded: return "SizeCapExceeded";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::EmptyMatching: return "EmptyMatching";
    case ErrorCode::InvalidCertificate: return "InvalidCertificate";
    case ErrorCode::Internal: return "Internal";
  }
  return "Unknown";
}

// ---------------------------------------------------------------------------
// Segment

Segment::Segment(Vertex lo, Vertex hi) : lo_(lo), hi_(hi) {
  if (lo < 1 || hi < lo) {
    throw Error(ErrorCode::VertexOutOfRange,
                "invalid segment [" + std::to_string(lo) + "," + std::to_string(hi) + "]", lo);
  }
}

bool Segment::contains(const Segment& other) const noexcept {
  if (other.is_empty()) return true;
  return !is_empty() && lo_ <= other.lo_ && other.hi_ <= hi_;
}

Segment Segment::hull(const Edge& e) const noexcept {
  Segment out;
  out.lo_ = is_empty() ? e.left : std::min(lo_, e.left);
  out.hi_ = is_empty() ? e.right : std::max(hi_, e.right);
  return out;
}

// ---------------------------------------------------------------------------
// Matching

Matching::Matching(std::vector<Vertex> partner) : partner_(std::move(partner)) {
  edges_.reserve(partner_.size() / 2);
  for (Vertex v = 1; v <= vertex_count(); ++v) {
    Vertex w = partner_[v - 1];
    if (v < w) edges_.push_back({v, w});
  }
}

Matching Matching::from_pairs(std::span<const std::pair<Vertex, Vertex>> pairs) {
  const auto n = static_cast<Vertex>(pairs.size());
  std::vector<Vertex> all;
  all.reserve(2 * pairs.size());
  for (const auto& [a, b] : pairs) {
    for (Vertex v : {a, b}) {
      if (v < 1) {
        throw Error(ErrorCode::VertexOutOfRange, "vertex " + std::to_string(v) + " out of range", v);
      }
    }
    if (a == b) throw Error(ErrorCode::SelfLoop, "self-loop at vertex " + std::to_string(a), a);
    all.push_back(a);
    all.push_back(b);
  }
  std::sort(all.begin(), all.end());
  if (auto dup = std::adjacent_find(all.begin(), all.end()); dup != all.end()) {
    throw Error(ErrorCode::DuplicateVertex, "duplicate vertex " + std::to_string(*dup), *dup);
  }
  // 2n distinct positive vertices: they cover [1, 2n] unless one is missing.
  for (Vertex i = 0; i < 2 * n; ++i) {
    if (all[i] != i + 1) {
      throw Error(ErrorCode::GapInVertexSet, "vertex " + std::to_string(i + 1) + " is not covered", i + 1);
    }
  }
  std::vector<Vertex> partner(2 * pairs.size());
  for (const auto& [a, b] : pairs) {
    partner[a - 1] = b;
    partner[b - 1] = a;
  }
  return Matching(std::move(partner));
}

Matching Matching::from_edges(std::span<const Edge> edges) {
  std::vector<std::pair<Vertex, Vertex>> pairs;
  pairs.reserve(edges.size());
  for (const auto& e : edges) pairs.emplace_back(e.left, e.right);
  return from_pairs(pairs);
}

Vertex Matching::partner(Vertex v) const {
  if (v < 1 || v > vertex_count()) {
    throw Error(ErrorCode::VertexOutOfRange, "vertex " + std::to_string(v) + " out of range", v);
  }
  return partner_[v - 1];
}

Edge Matching::edge_at(Vertex v) const {
  Vertex w = partner(v);
  return v < w ? Edge{v, w} : Edge{w, v};
}

bool Matching::has_edge(const Edge& e) const noexcept {
  return e.left >= 1 && e.left < e.right && e.right <= vertex_count() && partner_[e.left - 1] == e.right;
}

Matching Matching::reversed() const {
  const Vertex top = vertex_count() + 1;
  std::vector<Vertex> partner(partner_.size());
  for (Vertex v = 1; v <= vertex_count(); ++v) partner[top - v - 1] = top - partner_[v - 1];
  return Matching(std::move(partner));
}

Matching make_matching(std::span<const std::pair<Vertex, Vertex>> pairs) {
  return Matching::from_pairs(pairs);
}

Matching make_matching(std::initializer_list<std::pair<Vertex, Vertex>> pairs) {
  return Matching::from_pairs(std::span(pairs.begin(), pairs.size()));
}

// ---------------------------------------------------------------------------
// Relations and intervals

EdgeRelation edge_relation(const Edge& e, const Edge& f) {
  if (e.left == f.left || e.left == f.right || e.right == f.left || e.right == f.right) {
    throw Error(ErrorCode::SharedVertex, "edges share a vertex");
  }
  if (crosses(e, f)) return EdgeRelation::Crossing;
  if ((e.left < f.left && f.right < e.right) || (f.left < e.left && e.right < f.right)) {
    return EdgeRelation::Nested;
  }
  return EdgeRelation::Disjoint;
}

std::vector<Segment> find_intervals(const Matching& m) {
  std::vector<Segment> out;
  const Vertex top = m.vertex_count();
  for (Vertex lo = 1; lo <= top; ++lo) {
    Vertex min_partner = m.partner(lo);
    Vertex max_partner = min_partner;
    if (min_partner < lo) continue;  // no segment starting here can close
    for (Vertex hi = lo + 1; hi <= top; ++hi) {
      const Vertex p = m.partner(hi);
      min_partner = std::min(min_partner, p);
      max_partner = std::max(max_partner, p);
      if (min_partner < lo) break;
      if (max_partner <= hi && !(lo == 1 && hi == top)) out.emplace_back(lo, hi);
    }
  }
  return out;
}

std::vector<Segment> find_intervals_reference(const Matching& m) {
  std::vector<Segment> out;
  const Vertex top = m.vertex_count();
  for (Vertex lo = 1; lo <= top; ++lo) {
    for (Vertex hi = lo + 1; hi <= top; ++hi) {
      if (lo == 1 && hi == top) continue;
      bool closed = true;
      for (Vertex v = lo; v <= hi && closed; ++v) {
        const Vertex p = m.partner(v);
        closed = lo <= p && p <= hi;
      }
      if (closed) out.emplace_back(lo, hi);
    }
  }
  return out;
}

bool is_indecomposable(const Matching& m) {
  const Vertex top = m.vertex_count();
  for (Vertex lo = 1; lo <= top; ++lo) {
    Vertex min_partner = m.partner(lo);
    Vertex max_partner = min_partner;
    if (min_partner < lo) continue;
    for (Vertex hi = lo + 1; hi <= top; ++hi) {
      const Vertex p = m.partner(hi);
      min_partner = std::min(min_partner, p);
      max_partner = std::max(max_partner, p);
      if (min_partner < lo) break;
      if (max_partner <= hi && !(lo == 1 && hi == top)) return false;
    }
  }
  return true;
}

// ---------------------------------------------------------------------------
// Containment

Matching subpattern(const Matching& m, std::span<const Edge> keep) {
  std::vector<char> kept(m.vertex_count() + 1, 0);
  for (const auto& e : keep) {
    if (!m.has_edge(e)) {
      throw Error(ErrorCode::UnknownEdge,
                  "edge " + std::to_string(e.left) + "-" + std::to_string(e.right) + " is not in the matching",
                  e.left);
    }
    kept[e.left] = kept[e.right] = 1;
  }
  std::vector<Vertex> relabel(m.vertex_count() + 1, 0);
  Vertex next = 0;
  for (Vertex v = 1; v <= m.vertex_count(); ++v) {
    if (kept[v]) relabel[v] = ++next;
  }
  std::vector<std::pair<Vertex, Vertex>> pairs;
  for (const auto& e : m.edges()) {
    if (kept[e.left]) pairs.emplace_back(relabel[e.left], relabel[e.right]);
  }
  return Matching::from_pairs(pairs);
}

std::optional<std::vector<Edge>> contains(const Matching& m, const Matching& pattern) {
  const std::size_t k = pattern.edge_count();
  const std::size_t n = m.edge_count();
  if (k > n) return std::nullopt;
  if (k == 0) return std::vector<Edge>{};

  const auto& edges = m.edges();
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  std::vector<Edge> chosen(k);
  while (true) {
    for (std::size_t i = 0; i < k; ++i) chosen[i] = edges[idx[i]];
    if (subpattern(m, chosen) == pattern) return chosen;
    // next k-combination in lexicographic order
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + (i - 1)) --i;
    if (i == 0) return std::nullopt;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace arcmatch
