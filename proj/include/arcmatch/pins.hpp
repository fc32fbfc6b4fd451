#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "arcmatch/core.hpp"

namespace arcmatch {

// An ordered list of distinct edges of `host` together with the three
// properties checked by classify_sequence.
struct PinSequence {
  Matching host;
  std::vector<Edge> pins;
  bool is_pin_sequence = false;
  bool is_proper = false;
  bool is_right_reaching = false;
};

Segment shadow(const Matching& m, std::span<const Edge> edges);

// True iff exactly one endpoint of `e` lies in `s`.
bool splits(const Matching& m, const Edge& e, const Segment& s);

PinSequence classify_sequence(const Matching& m, std::span<const Edge> pins);

// Starting from `start`, keep appending an edge that splits the current
// shadow until a pin touches vertex 2n. Choice rule: an edge touching 2n
// if one splits, else the splitter reaching furthest outside (ties broken
// by the inside endpoint, larger first).
std::vector<Edge> grow_right_reaching(const Matching& m, const Edge& start);

// Turns a right-reaching pin sequence into a proper right-reaching one
// that starts with the same pin and uses only pins from the input.
PinSequence properize(const Matching& m, std::span<const Edge> pins);

// Tree of proper right-reaching pin sequences ordered by suffix: the parent
// of (p1, ..., pm) is (p2, ..., pm). Node 0 is the root, the single edge
// touching vertex 2n. Nodes are stored in depth-first preorder with
// children sorted by the prepended edge.
class PinTree {
 public:
  struct Node {
    std::vector<Edge> pins;
    std::optional<std::size_t> parent;
    std::vector<std::size_t> children;
  };

  PinTree() = default;
  PinTree(Matching host, std::vector<Node> nodes) : host_(std::move(host)), nodes_(std::move(nodes)) {}

  const Matching& host() const noexcept { return host_; }
  const std::vector<Node>& nodes() const noexcept { return nodes_; }
  std::size_t size() const noexcept { return nodes_.size(); }
  // Length of the longest sequence in the tree (0 for an empty tree).
  std::size_t height() const noexcept;
  std::size_t max_children() const noexcept;

 private:
  Matching host_;
  std::vector<Node> nodes_;
};

PinTree build_pin_tree(const Matching& m, std::size_t depth_cap);

// Node count of the uncapped tree.
std::uint64_t count_proper_rr_sequences(const Matching& m);

// Edges that can be prepended to `seq` keeping it a proper pin sequence,
// sorted by (left, right).
std::vector<Edge> proper_prepend_candidates(const Matching& m, std::span<const Edge> seq);

// A longest proper pin sequence of m with no right-reaching requirement.
std::vector<Edge> longest_proper_pin_sequence(const Matching& m);

}  // namespace arcmatch
