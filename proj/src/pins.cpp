#include "arcmatch/pins.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <map>
#include <set>
#include <string>

namespace arcmatch {
namespace {

void require_edge(const Matching& m, const Edge& e) {
  if (!m.has_edge(e)) {
    throw Error(ErrorCode::UnknownEdge,
                "edge " + std::to_string(e.left) + "-" + std::to_string(e.right) + " is not in the matching",
                e.left);
  }
}

void require_indecomposable(const Matching& m) {
  if (!is_indecomposable(m)) throw Error(ErrorCode::NotIndecomposable, "matching is decomposable");
}

bool splits_unchecked(const Edge& e, const Segment& s) noexcept {
  return s.contains(e.left) != s.contains(e.right);
}

// Whether `next` may follow a proper sequence whose last two shadows are
// `before` (possibly empty) and `current`.
bool extends_properly(const Edge& next, const Segment& before, const Segment& current) noexcept {
  return splits_unchecked(next, current) && (before.is_empty() || !splits_unchecked(next, before));
}

bool is_proper_unchecked(std::span<const Edge> seq) {
  Segment before, current;
  for (std::size_t i = 0; i < seq.size(); ++i) {
    if (i > 0 && !extends_properly(seq[i], before, current)) return false;
    before = current;
    current = current.hull(seq[i]);
  }
  return true;
}

}  // namespace

Segment shadow(const Matching& m, std::span<const Edge> edges) {
  Segment s;
  for (const auto& e : edges) {
    require_edge(m, e);
    s = s.hull(e);
  }
  return s;
}

bool splits(const Matching& m, const Edge& e, const Segment& s) {
  require_edge(m, e);
  if (s.is_empty()) throw Error(ErrorCode::EmptySegment, "cannot split the empty segment");
  return splits_unchecked(e, s);
}

PinSequence classify_sequence(const Matching& m, std::span<const Edge> pins) {
  if (pins.empty()) throw Error(ErrorCode::UnknownEdge, "pin sequence is empty");
  std::set<Edge> seen;
  for (const auto& e : pins) {
    require_edge(m, e);
    if (!seen.insert(e).second) {
      throw Error(ErrorCode::DuplicatePin,
                  "pin " + std::to_string(e.left) + "-" + std::to_string(e.right) + " repeats", e.left);
    }
  }

  PinSequence out{m, {pins.begin(), pins.end()}, true, true, false};
  Segment before, current = Segment{}.hull(pins[0]);
  for (std::size_t i = 1; i < pins.size(); ++i) {
    if (!splits_unchecked(pins[i], current)) out.is_pin_sequence = false;
    if (i >= 2 && splits_unchecked(pins[i], before)) out.is_proper = false;
    before = current;
    current = current.hull(pins[i]);
  }
  out.is_proper = out.is_proper && out.is_pin_sequence;
  out.is_right_reaching = pins.back().touches(m.vertex_count());
  return out;
}

std::vector<Edge> grow_right_reaching(const Matching& m, const Edge& start) {
  require_edge(m, start);
  require_indecomposable(m);

  const Vertex top = m.vertex_count();
  std::vector<Edge> seq{start};
  Segment current = Segment{}.hull(start);
  while (!seq.back().touches(top)) {
    std::optional<Edge> best;
    Vertex best_out = 0, best_in = 0;
    for (const auto& e : m.edges()) {
      if (!splits_unchecked(e, current)) continue;
      if (e.touches(top)) {
        best = e;
        break;
      }
      const Vertex out = current.contains(e.left) ? e.right : e.left;
      const Vertex in = current.contains(e.left) ? e.left : e.right;
      if (!best || out > best_out || (out == best_out && in > best_in)) {
        best = e;
        best_out = out;
        best_in = in;
      }
    }
    if (!best) {
      throw Error(ErrorCode::NotIndecomposable,
                  "shadow [" + std::to_string(current.lo()) + "," + std::to_string(current.hi()) +
                      "] is a nontrivial interval");
    }
    seq.push_back(*best);
    current = current.hull(*best);
  }
  return seq;
}

PinSequence properize(const Matching& m, std::span<const Edge> pins) {
  if (pins.empty()) throw Error(ErrorCode::NotRightReaching, "empty pin sequence");
  auto input = classify_sequence(m, pins);
  if (!input.is_pin_sequence || !input.is_right_reaching) {
    throw Error(ErrorCode::NotRightReaching, "input is not a right-reaching pin sequence");
  }
  const Vertex top = m.vertex_count();

  // Greedy rule: the next pin is the latest input pin crossing the previous
  // choice. It can revisit pins or break properness on some inputs, so the
  // result is checked and replaced by a search when it fails.
  std::vector<Edge> q{pins[0]};
  while (!q.back().touches(top) && q.size() <= pins.size()) {
    std::optional<Edge> pick;
    for (const auto& p : pins) {
      if (crosses(p, q.back())) pick = p;
    }
    if (!pick) break;
    q.push_back(*pick);
  }
  if (q.back().touches(top) && q.size() <= pins.size()) {
    std::set<Edge> uniq(q.begin(), q.end());
    if (uniq.size() == q.size() && is_proper_unchecked(q)) {
      return classify_sequence(m, q);
    }
  }

  // Breadth-first search over proper extensions drawn from the input pins.
  // Whether a pin may come next depends only on the last two shadows, so
  // those pairs are the search states.
  struct State {
    Segment before, current;
    Edge last;
    std::optional<std::size_t> parent;
  };
  std::vector<State> states{{Segment{}, Segment{}.hull(pins[0]), pins[0], std::nullopt}};
  std::set<std::pair<Segment, Segment>> visited{{states[0].before, states[0].current}};
  std::optional<std::size_t> goal;
  if (pins[0].touches(top)) goal = 0;
  for (std::size_t head = 0; head < states.size() && !goal; ++head) {
    const State s = states[head];
    for (const auto& p : pins) {
      if (!extends_properly(p, s.before, s.current)) continue;
      State next{s.current, s.current.hull(p), p, head};
      if (!visited.insert({next.before, next.current}).second) continue;
      states.push_back(next);
      if (p.touches(top)) {
        goal = states.size() - 1;
        break;
      }
    }
  }
  if (!goal) throw Error(ErrorCode::Internal, "no proper right-reaching subsequence found");
  std::vector<Edge> path;
  for (std::optional<std::size_t> at = goal; at; at = states[*at].parent) path.push_back(states[*at].last);
  std::reverse(path.begin(), path.end());
  auto out = classify_sequence(m, path);
  if (!out.is_proper || !out.is_right_reaching) {
    throw Error(ErrorCode::Internal, "properize produced an improper sequence");
  }
  return out;
}

// ---------------------------------------------------------------------------
// Pin tree

std::size_t PinTree::height() const noexcept {
  std::size_t h = 0;
  for (const auto& node : nodes_) h = std::max(h, node.pins.size());
  return h;
}

std::size_t PinTree::max_children() const noexcept {
  std::size_t c = 0;
  for (const auto& node : nodes_) c = std::max(c, node.children.size());
  return c;
}

std::vector<Edge> proper_prepend_candidates(const Matching& m, std::span<const Edge> seq) {
  std::vector<Edge> out;
  std::vector<Edge> candidate(seq.size() + 1);
  std::copy(seq.begin(), seq.end(), candidate.begin() + 1);
  for (const auto& e : m.edges()) {
    // The new first pin must be crossed by the old one.
    if (!crosses(e, seq.front())) continue;
    if (std::find(seq.begin(), seq.end(), e) != seq.end()) continue;
    candidate[0] = e;
    if (is_proper_unchecked(candidate)) out.push_back(e);
  }
  return out;
}

namespace {

const Edge* root_edge(const Matching& m, std::vector<Edge>& storage) {
  if (m.empty()) return nullptr;
  storage.assign(1, m.edge_at(m.vertex_count()));
  return storage.data();
}

}  // namespace

PinTree build_pin_tree(const Matching& m, std::size_t depth_cap) {
  if (depth_cap < 1) throw Error(ErrorCode::SizeTooSmall, "depth cap must be at least 1");
  require_indecomposable(m);
  std::vector<PinTree::Node> nodes;
  std::vector<Edge> root;
  if (!root_edge(m, root)) return PinTree(m, {});

  std::function<void(std::size_t)> expand = [&](std::size_t at) {
    if (nodes[at].pins.size() >= depth_cap) return;
    for (const auto& e : proper_prepend_candidates(m, nodes[at].pins)) {
      PinTree::Node child;
      child.pins.reserve(nodes[at].pins.size() + 1);
      child.pins.push_back(e);
      child.pins.insert(child.pins.end(), nodes[at].pins.begin(), nodes[at].pins.end());
      child.parent = at;
      nodes.push_back(std::move(child));
      const std::size_t id = nodes.size() - 1;
      nodes[at].children.push_back(id);
      expand(id);
    }
  };
  nodes.push_back({root, std::nullopt, {}});
  expand(0);
  return PinTree(m, std::move(nodes));
}

std::uint64_t count_proper_rr_sequences(const Matching& m) {
  require_indecomposable(m);
  std::vector<Edge> seq;
  if (!root_edge(m, seq)) return 0;
  std::uint64_t count = 0;
  std::function<void()> walk = [&] {
    ++count;
    for (const auto& e : proper_prepend_candidates(m, seq)) {
      seq.insert(seq.begin(), e);
      walk();
      seq.erase(seq.begin());
    }
  };
  walk();
  return count;
}

std::vector<Edge> longest_proper_pin_sequence(const Matching& m) {
  // Memoised over (previous shadow, current shadow), which determines the
  // admissible continuations.
  using Key = std::pair<Segment, Segment>;
  std::map<Key, std::pair<std::size_t, std::optional<Edge>>> memo;
  std::function<std::size_t(const Segment&, const Segment&)> best_from = [&](const Segment& before,
                                                                              const Segment& current) {
    const Key key{before, current};
    if (auto it = memo.find(key); it != memo.end()) return it->second.first;
    std::size_t best = 0;
    std::optional<Edge> step;
    for (const auto& e : m.edges()) {
      if (!extends_properly(e, before, current)) continue;
      const std::size_t len = 1 + best_from(current, current.hull(e));
      if (len > best) {
        best = len;
        step = e;
      }
    }
    memo[key] = {best, step};
    return best;
  };

  std::vector<Edge> out;
  std::size_t best = 0;
  for (const auto& e : m.edges()) {
    const std::size_t len = 1 + best_from(Segment{}, Segment{}.hull(e));
    if (len > best) {
      best = len;
      out.assign(1, e);
    }
  }
  if (out.empty()) return out;
  Segment before, current = Segment{}.hull(out[0]);
  while (true) {
    const auto& step = memo.at({before, current}).second;
    if (!step) break;
    out.push_back(*step);
    before = current;
    current = current.hull(*step);
  }
  return out;
}

}  // namespace arcmatch
