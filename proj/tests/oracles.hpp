#pragma once

// Brute-force reference implementations used only by the tests. Nothing in
// here calls the optimised library paths it is compared against.

#include <algorithm>
#include <functional>
#include <random>
#include <set>
#include <vector>

#include "arcmatch/core.hpp"

namespace oracle {

using arcmatch::Edge;
using arcmatch::Matching;
using arcmatch::Vertex;

// Every matching on [2n], by direct recursion over the smallest free vertex.
inline std::vector<Matching> all_matchings(std::size_t n) {
  std::vector<Matching> out;
  std::vector<std::pair<Vertex, Vertex>> pairs;
  std::function<void(std::vector<Vertex>)> rec = [&](std::vector<Vertex> free) {
    if (free.empty()) {
      out.push_back(arcmatch::make_matching(pairs));
      return;
    }
    for (std::size_t i = 1; i < free.size(); ++i) {
      std::vector<Vertex> rest;
      for (std::size_t j = 1; j < free.size(); ++j) {
        if (j != i) rest.push_back(free[j]);
      }
      pairs.emplace_back(free[0], free[i]);
      rec(rest);
      pairs.pop_back();
    }
  };
  std::vector<Vertex> free(2 * n);
  for (std::size_t i = 0; i < free.size(); ++i) free[i] = static_cast<Vertex>(i + 1);
  rec(free);
  return out;
}

inline std::vector<Matching> all_matchings_up_to(std::size_t n_max) {
  std::vector<Matching> out;
  for (std::size_t n = 0; n <= n_max; ++n) {
    auto batch = all_matchings(n);
    out.insert(out.end(), batch.begin(), batch.end());
  }
  return out;
}

// Interval test straight from the definition: the set of vertices in
// [lo, hi] equals the set of their partners.
inline bool is_interval(const Matching& m, Vertex lo, Vertex hi) {
  std::set<Vertex> inside, partners;
  for (Vertex v = lo; v <= hi; ++v) {
    inside.insert(v);
    partners.insert(m.partner(v));
  }
  return inside == partners;
}

inline std::vector<std::pair<Vertex, Vertex>> intervals(const Matching& m) {
  std::vector<std::pair<Vertex, Vertex>> out;
  for (Vertex lo = 1; lo <= m.vertex_count(); ++lo) {
    for (Vertex hi = lo; hi <= m.vertex_count(); ++hi) {
      if (lo == 1 && hi == m.vertex_count()) continue;
      if (is_interval(m, lo, hi)) out.emplace_back(lo, hi);
    }
  }
  return out;
}

inline bool indecomposable(const Matching& m) { return intervals(m).empty(); }

// Shadow as (min, max) over explicit endpoint lists.
inline std::pair<Vertex, Vertex> shadow_of(const std::vector<Edge>& edges) {
  Vertex lo = edges.front().left, hi = edges.front().right;
  for (const auto& e : edges) {
    lo = std::min({lo, e.left, e.right});
    hi = std::max({hi, e.left, e.right});
  }
  return {lo, hi};
}

inline bool splits(const Edge& e, std::pair<Vertex, Vertex> s) {
  const int inside = (s.first <= e.left && e.left <= s.second) + (s.first <= e.right && e.right <= s.second);
  return inside == 1;
}

inline bool is_pin_sequence(const std::vector<Edge>& seq) {
  for (std::size_t i = 1; i < seq.size(); ++i) {
    std::vector<Edge> head(seq.begin(), seq.begin() + static_cast<std::ptrdiff_t>(i));
    if (!splits(seq[i], shadow_of(head))) return false;
  }
  return true;
}

inline bool is_proper(const std::vector<Edge>& seq) {
  if (!is_pin_sequence(seq)) return false;
  for (std::size_t i = 2; i < seq.size(); ++i) {
    std::vector<Edge> head(seq.begin(), seq.begin() + static_cast<std::ptrdiff_t>(i - 1));
    if (splits(seq[i], shadow_of(head))) return false;
  }
  return true;
}

// Every pin sequence (any length >= 1) of m.
inline void for_each_pin_sequence(const Matching& m, const std::function<void(const std::vector<Edge>&)>& fn) {
  std::vector<Edge> seq;
  std::function<void()> rec = [&] {
    fn(seq);
    const auto s = shadow_of(seq);
    for (const auto& e : m.edges()) {
      if (std::find(seq.begin(), seq.end(), e) != seq.end()) continue;
      if (!splits(e, s)) continue;
      seq.push_back(e);
      rec();
      seq.pop_back();
    }
  };
  for (const auto& e : m.edges()) {
    seq.assign(1, e);
    rec();
  }
}

// All proper right-reaching pin sequences, by exhaustive ordered search.
inline std::set<std::vector<Edge>> proper_rr_sequences(const Matching& m) {
  std::set<std::vector<Edge>> out;
  std::vector<Edge> seq;
  const Vertex top = m.vertex_count();
  std::function<void()> rec = [&] {
    if (!is_proper(seq)) return;
    if (seq.back().touches(top)) {
      out.insert(seq);
      return;
    }
    for (const auto& e : m.edges()) {
      if (std::find(seq.begin(), seq.end(), e) != seq.end()) continue;
      seq.push_back(e);
      rec();
      seq.pop_back();
    }
  };
  for (const auto& e : m.edges()) {
    seq.assign(1, e);
    rec();
  }
  return out;
}

// Longest proper pin sequence over all orderings of all subsets.
inline std::size_t longest_proper_brute(const Matching& m) {
  std::size_t best = 0;
  std::vector<Edge> seq;
  std::function<void()> rec = [&] {
    if (!is_proper(seq)) return;
    best = std::max(best, seq.size());
    for (const auto& e : m.edges()) {
      if (std::find(seq.begin(), seq.end(), e) != seq.end()) continue;
      seq.push_back(e);
      rec();
      seq.pop_back();
    }
  };
  for (const auto& e : m.edges()) {
    seq.assign(1, e);
    rec();
  }
  return best;
}

inline bool crosses(const Edge& e, const Edge& f) {
  return (e.left < f.left && f.left < e.right && e.right < f.right) ||
         (f.left < e.left && e.left < f.right && f.right < e.right);
}

// Longest monotone subsequence lengths by enumerating all subsets.
inline std::pair<std::size_t, std::size_t> monotone_lengths(const std::vector<long>& v) {
  std::size_t inc = 0, dec = 0;
  const std::size_t n = v.size();
  for (std::size_t mask = 1; mask < (std::size_t{1} << n); ++mask) {
    std::vector<long> sub;
    for (std::size_t i = 0; i < n; ++i) {
      if (mask >> i & 1) sub.push_back(v[i]);
    }
    if (std::is_sorted(sub.begin(), sub.end(), std::less<>()) &&
        std::adjacent_find(sub.begin(), sub.end()) == sub.end()) {
      inc = std::max(inc, sub.size());
    }
    if (std::is_sorted(sub.begin(), sub.end(), std::greater<>()) &&
        std::adjacent_find(sub.begin(), sub.end()) == sub.end()) {
      dec = std::max(dec, sub.size());
    }
  }
  return {inc, dec};
}

inline Matching random_matching(std::size_t n, std::mt19937_64& rng) {
  std::vector<Vertex> order(2 * n);
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = static_cast<Vertex>(i + 1);
  std::shuffle(order.begin(), order.end(), rng);
  std::vector<std::pair<Vertex, Vertex>> pairs;
  for (std::size_t i = 0; i < n; ++i) pairs.emplace_back(order[2 * i], order[2 * i + 1]);
  return arcmatch::make_matching(pairs);
}

inline Matching random_indecomposable(std::size_t n, std::mt19937_64& rng) {
  while (true) {
    auto m = random_matching(n, rng);
    if (arcmatch::is_indecomposable(m)) return m;
  }
}

// A random pin sequence: random start, then random splitters until none
// remain or a coin flip stops the walk.
inline std::vector<Edge> random_pin_sequence(const Matching& m, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::size_t> pick_start(0, m.edge_count() - 1);
  std::vector<Edge> seq{m.edges()[pick_start(rng)]};
  std::bernoulli_distribution stop(0.15);
  while (!stop(rng)) {
    const auto s = shadow_of(seq);
    std::vector<Edge> options;
    for (const auto& e : m.edges()) {
      if (splits(e, s)) options.push_back(e);
    }
    if (options.empty()) break;
    std::uniform_int_distribution<std::size_t> pick(0, options.size() - 1);
    seq.push_back(options[pick(rng)]);
  }
  return seq;
}

// Matching on [2n] whose first vertex-ordered edge labelled `e` is crossed
// by `left` edges from the left and `right` from the right, plus `extra`
// edges that do not cross it. Returns the matching and e.
inline std::pair<Matching, Edge> with_heavy_edge(std::size_t left, std::size_t right, std::size_t extra,
                                                 std::mt19937_64& rng) {
  // Regions: 0 = left of e, 1 = inside e, 2 = right of e. Tokens are edge ids.
  std::vector<std::vector<int>> region(3);
  int id = 1;
  for (std::size_t i = 0; i < left; ++i, ++id) {
    region[0].push_back(id);
    region[1].push_back(id);
  }
  for (std::size_t i = 0; i < right; ++i, ++id) {
    region[1].push_back(id);
    region[2].push_back(id);
  }
  std::uniform_int_distribution<int> where(0, 2);
  for (std::size_t i = 0; i < extra; ++i, ++id) {
    const int r = where(rng);
    region[r].push_back(id);
    region[r].push_back(id);
  }
  for (auto& r : region) std::shuffle(r.begin(), r.end(), rng);
  std::vector<int> word = region[0];
  word.push_back(0);
  word.insert(word.end(), region[1].begin(), region[1].end());
  word.push_back(0);
  word.insert(word.end(), region[2].begin(), region[2].end());

  std::vector<Vertex> first(id, 0);
  std::vector<std::pair<Vertex, Vertex>> pairs;
  for (std::size_t i = 0; i < word.size(); ++i) {
    const auto v = static_cast<Vertex>(i + 1);
    if (first[word[i]] == 0) {
      first[word[i]] = v;
    } else {
      pairs.emplace_back(first[word[i]], v);
    }
  }
  const Edge e{first[0], static_cast<Vertex>(region[0].size() + region[1].size() + 2)};
  return {arcmatch::make_matching(pairs), e};
}

}  // namespace oracle
