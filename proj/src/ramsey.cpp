#include "arcmatch/ramsey.hpp"

#include <functional>
#include <sstream>

#include "arcmatch/enumeration.hpp"
#include "arcmatch/pins.hpp"
#include "arcmatch/text.hpp"

namespace arcmatch {

Bounds bounds(std::size_t k) {
  if (k < 2) throw Error(ErrorCode::SizeTooSmall, "k must be at least 2", static_cast<long>(k));
  Bounds b;
  b.k = k;
  b.stated = boost::multiprecision::pow(BigInt(2 * k), static_cast<unsigned>(2 * k));
  const BigInt branching = BigInt(2) * (k - 1) * (k - 1) + 1;
  b.crossing_threshold = branching + 1;
  BigInt term = 1;
  for (std::size_t i = 0; i < k; ++i) {
    b.tree_bound += term;
    term *= branching;
  }
  return b;
}

BigInt tree_bound_closed_form(std::size_t k) {
  if (k < 2) throw Error(ErrorCode::SizeTooSmall, "k must be at least 2", static_cast<long>(k));
  const BigInt d = BigInt(2) * (k - 1) * (k - 1);
  return (boost::multiprecision::pow(d + 1, static_cast<unsigned>(k)) - 1) / d;
}

namespace {

// Depth-first search of the pin tree for a node with k pins. `best` tracks
// the longest node visited.
std::optional<std::vector<Edge>> search_pin_tree(const Matching& m, std::size_t k, std::vector<Edge>& best) {
  std::vector<Edge> seq{m.edge_at(m.vertex_count())};
  best = seq;
  std::function<bool()> descend = [&]() -> bool {
    if (seq.size() > best.size()) best = seq;
    if (seq.size() >= k) return true;
    for (const auto& e : proper_prepend_candidates(m, seq)) {
      seq.insert(seq.begin(), e);
      if (descend()) return true;
      seq.erase(seq.begin());
    }
    return false;
  };
  if (descend()) return seq;
  return std::nullopt;
}

std::size_t crossing_count(const Matching& m, const Edge& e) {
  const auto c = crossers(m, e);
  return c.left.size() + c.right.size();
}

}  // namespace

WitnessReport witness(const Matching& m, std::size_t k) {
  WitnessReport report;
  report.bounds = bounds(k);
  report.edge_count = m.edge_count();
  if (!is_indecomposable(m)) throw Error(ErrorCode::NotIndecomposable, "matching is decomposable");
  if (m.empty()) return report;

  const std::size_t threshold = report.bounds.crossing_threshold.convert_to<std::size_t>();
  for (const auto& e : m.edges()) {
    if (crossing_count(m, e) >= threshold) {
      report.outcome = WitnessReport::Outcome::Found;
      report.witness = extract_from_crossed_edge(m, e, k);
      return report;
    }
  }

  std::vector<Edge> best;
  if (auto pins = search_pin_tree(m, k, best)) {
    report.outcome = WitnessReport::Outcome::Found;
    report.witness = Witness::proper_pin_sequence(m, std::move(*pins));
    return report;
  }
  report.witness = Witness::proper_pin_sequence(m, std::move(best));
  if (BigInt(report.edge_count) >= report.bounds.tree_bound) {
    throw Error(ErrorCode::Internal, "no witness although the edge count reaches the tree bound");
  }
  return report;
}

std::optional<std::string> check_witness_consistency(const Matching& m, std::size_t k, const WitnessReport& report) {
  std::ostringstream why;
  if (report.found()) {
    if (!report.witness) return "Found without a witness";
    const auto& w = *report.witness;
    if (w.size() < k) why << "witness has " << w.size() << " edges, need " << k;
    else if (!w.verify(m)) why << "witness fails verification";
    else if (auto kind = w.pattern()) {
      if (!contains(subpattern(m, w.edges()), canonical(*kind, w.size()))) {
        why << "containment oracle rejects the " << to_string(*kind) << " witness";
      }
    } else {
      const auto cls = classify_sequence(m, w.edges());
      if (!cls.is_pin_sequence || !cls.is_proper) why << "pin witness is not proper";
    }
  } else {
    const auto& b = report.bounds;
    const std::size_t threshold = b.crossing_threshold.convert_to<std::size_t>();
    if (BigInt(m.edge_count()) >= b.tree_bound) why << "edge count reaches tree bound";
    for (const auto& e : m.edges()) {
      if (crossing_count(m, e) >= threshold) {
        why << "edge " << e.left << "-" << e.right << " is heavy but no witness was extracted";
        break;
      }
    }
    if (why.str().empty()) {
      const auto tree = build_pin_tree(m, k);
      const auto nodes = count_proper_rr_sequences(m);
      if (tree.height() + 1 > k) why << "pin tree reaches height " << tree.height();
      else if (BigInt(nodes) > b.tree_bound) why << "pin tree has " << nodes << " nodes, above the bound";
      else if (nodes < m.edge_count()) why << "pin tree has fewer nodes (" << nodes << ") than edges";
    }
  }
  if (why.str().empty()) return std::nullopt;
  return format_edge_list(m) + ": " + why.str();
}

TheoremReport verify_theorem(std::size_t n_max, std::size_t k, std::size_t jobs, bool allow_large) {
  TheoremReport report;
  report.n_max = n_max;
  report.k = k;
  report.bounds = bounds(k);
  check_size_cap(n_max, allow_large);

  for (std::size_t n = 1; n <= n_max; ++n) {
    const std::size_t shards = MatchingStream::shard_count(n);
    std::vector<TheoremRow> rows(shards);
    std::vector<std::vector<std::string>> failures(shards);
    run_sharded(n, jobs, [&](std::size_t s) {
      auto stream = MatchingStream::shard(n, s, true);
      while (auto m = stream.next()) {
        if (!is_indecomposable(*m)) continue;
        ++rows[s].indecomposable;
        try {
          const auto r = witness(*m, k);
          if (auto bad = check_witness_consistency(*m, k, r)) failures[s].push_back(*bad);
          if (!r.found()) {
            ++rows[s].below_threshold;
          } else if (r.witness->kind() == WitnessKind::Interleaving) {
            ++rows[s].interleavings;
          } else if (r.witness->kind() == WitnessKind::BrokenNesting) {
            ++rows[s].broken_nestings;
          } else {
            ++rows[s].pin_sequences;
          }
        } catch (const Error& e) {
          failures[s].push_back(format_edge_list(*m) + ": " + e.what());
        }
      }
    });
    TheoremRow row;
    row.n = n;
    for (std::size_t s = 0; s < shards; ++s) {
      row.indecomposable += rows[s].indecomposable;
      row.interleavings += rows[s].interleavings;
      row.broken_nestings += rows[s].broken_nestings;
      row.pin_sequences += rows[s].pin_sequences;
      row.below_threshold += rows[s].below_threshold;
      report.failures.insert(report.failures.end(), failures[s].begin(), failures[s].end());
    }
    report.rows.push_back(row);
  }
  return report;
}

}  // namespace arcmatch
