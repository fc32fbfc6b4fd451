#include "doctest.h"

#include <random>

#include "arcmatch/pins.hpp"
#include "oracles.hpp"

using namespace arcmatch;

namespace {

const Matching kPinFigure = make_matching({{3, 5}, {4, 7}, {1, 6}, {2, 8}});
const Matching kFigureOne = make_matching({{1, 3}, {2, 8}, {4, 6}, {5, 7}});
const std::vector<Edge> kPinOrder{{3, 5}, {4, 7}, {1, 6}, {2, 8}};

}  // namespace

TEST_CASE("shadow") {
  CHECK(shadow(kPinFigure, std::vector<Edge>{{3, 5}, {4, 7}}) == Segment(3, 7));
  CHECK(shadow(kPinFigure, {}).is_empty());
  CHECK(shadow(kPinFigure, std::vector<Edge>{{2, 8}}) == Segment(2, 8));
  CHECK_THROWS_AS(shadow(kPinFigure, std::vector<Edge>{{1, 2}}), Error);
}

TEST_CASE("splits") {
  CHECK(splits(kPinFigure, {1, 6}, Segment(3, 7)));
  CHECK_FALSE(splits(kPinFigure, {1, 6}, Segment(3, 5)));
  CHECK_FALSE(splits(kPinFigure, {3, 5}, Segment(3, 5)));
  try {
    splits(kPinFigure, {3, 5}, Segment::empty());
    FAIL("no error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::EmptySegment);
  }
}

TEST_CASE("classify_sequence") {
  const auto full = classify_sequence(kPinFigure, kPinOrder);
  CHECK(full.is_pin_sequence);
  CHECK(full.is_proper);
  CHECK(full.is_right_reaching);

  const auto broken = classify_sequence(kPinFigure, std::vector<Edge>{{3, 5}, {2, 8}});
  CHECK_FALSE(broken.is_pin_sequence);
  CHECK_FALSE(broken.is_proper);

  const auto single = classify_sequence(kPinFigure, std::vector<Edge>{{4, 7}});
  CHECK(single.is_pin_sequence);
  CHECK(single.is_proper);
  CHECK_FALSE(single.is_right_reaching);

  try {
    classify_sequence(kPinFigure, std::vector<Edge>{{3, 5}, {3, 5}});
    FAIL("no error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::DuplicatePin);
  }
  CHECK_THROWS_AS(classify_sequence(kPinFigure, std::vector<Edge>{{3, 4}}), Error);
}

TEST_CASE("classify_sequence agrees with the definitional oracle (n <= 4, all orderings)") {
  for (const auto& m : oracle::all_matchings_up_to(4)) {
    if (m.empty()) continue;
    auto edges = m.edges();
    std::sort(edges.begin(), edges.end());
    do {
      for (std::size_t len = 1; len <= edges.size(); ++len) {
        std::vector<Edge> seq(edges.begin(), edges.begin() + static_cast<std::ptrdiff_t>(len));
        const auto cls = classify_sequence(m, seq);
        REQUIRE(cls.is_pin_sequence == oracle::is_pin_sequence(seq));
        REQUIRE(cls.is_proper == oracle::is_proper(seq));
      }
    } while (std::next_permutation(edges.begin(), edges.end()));
  }
}

TEST_CASE("grow_right_reaching") {
  CHECK(grow_right_reaching(kPinFigure, {3, 5}) == kPinOrder);
  CHECK(grow_right_reaching(kPinFigure, {2, 8}) == std::vector<Edge>{{2, 8}});
  try {
    grow_right_reaching(kFigureOne, {1, 3});
    FAIL("no error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotIndecomposable);
  }
  CHECK_THROWS_AS(grow_right_reaching(kPinFigure, {1, 2}), Error);
}

TEST_CASE("properize") {
  const auto q = properize(kPinFigure, kPinOrder);
  CHECK(q.pins == kPinOrder);
  CHECK(q.is_proper);
  CHECK(q.is_right_reaching);

  CHECK(properize(kPinFigure, std::vector<Edge>{{2, 8}}).pins == std::vector<Edge>{{2, 8}});

  try {
    properize(kPinFigure, std::vector<Edge>{{3, 5}, {4, 7}});
    FAIL("no error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotRightReaching);
  }
}

TEST_CASE("properize recovers where the latest-crossing rule cycles") {
  // Choosing the latest pin crossing the previous choice alternates between
  // 2-5 and 1-3 forever here.
  const auto m = make_matching({{1, 3}, {2, 5}, {4, 7}, {6, 8}});
  const std::vector<Edge> pins{{2, 5}, {4, 7}, {1, 3}, {6, 8}};
  REQUIRE(classify_sequence(m, pins).is_pin_sequence);
  const auto q = properize(m, pins);
  CHECK(q.is_proper);
  CHECK(q.is_right_reaching);
  CHECK(q.pins.front() == Edge{2, 5});
  CHECK(q.pins == std::vector<Edge>{{2, 5}, {4, 7}, {6, 8}});
}

TEST_CASE("properize on every right-reaching pin sequence (n <= 5)") {
  for (std::size_t n = 1; n <= 5; ++n) {
    for (const auto& m : oracle::all_matchings(n)) {
      if (!is_indecomposable(m)) continue;
      oracle::for_each_pin_sequence(m, [&](const std::vector<Edge>& seq) {
        if (!seq.back().touches(m.vertex_count())) return;
        const auto q = properize(m, seq);
        REQUIRE(q.is_proper);
        REQUIRE(q.is_right_reaching);
        REQUIRE(oracle::is_proper(q.pins));
        REQUIRE(q.pins.front() == seq.front());
        for (const auto& p : q.pins) REQUIRE(std::find(seq.begin(), seq.end(), p) != seq.end());
      });
    }
  }
}

TEST_CASE("build_pin_tree") {
  const auto crossing = make_matching({{1, 3}, {2, 4}});
  const auto tree = build_pin_tree(crossing, 4);
  REQUIRE(tree.size() == 2);
  CHECK(tree.nodes()[0].pins == std::vector<Edge>{{2, 4}});
  CHECK(tree.nodes()[1].pins == std::vector<Edge>{{1, 3}, {2, 4}});
  CHECK(tree.nodes()[1].parent == 0);

  const auto fig = build_pin_tree(kPinFigure, 4);
  bool found = false;
  for (const auto& node : fig.nodes()) found = found || node.pins == kPinOrder;
  CHECK(found);

  CHECK(build_pin_tree(kPinFigure, 1).size() == 1);
  CHECK_THROWS_AS(build_pin_tree(kFigureOne, 3), Error);
}

TEST_CASE("count_proper_rr_sequences") {
  CHECK(count_proper_rr_sequences(make_matching({{1, 3}, {2, 4}})) == 2);
  CHECK(count_proper_rr_sequences(make_matching({{1, 2}})) == 1);
}

TEST_CASE("pin tree equals the exhaustive set of proper right-reaching sequences (n <= 5)") {
  for (std::size_t n = 1; n <= 5; ++n) {
    for (const auto& m : oracle::all_matchings(n)) {
      if (!is_indecomposable(m)) continue;
      const auto tree = build_pin_tree(m, n);
      std::set<std::vector<Edge>> nodes;
      for (std::size_t i = 0; i < tree.size(); ++i) {
        const auto& node = tree.nodes()[i];
        REQUIRE(nodes.insert(node.pins).second);
        const auto cls = classify_sequence(m, node.pins);
        REQUIRE(cls.is_proper);
        REQUIRE(cls.is_right_reaching);
        if (node.parent) {
          const auto& parent = tree.nodes()[*node.parent].pins;
          REQUIRE(std::equal(parent.begin(), parent.end(), node.pins.begin() + 1, node.pins.end()));
        } else {
          REQUIRE(i == 0);
          REQUIRE(node.pins.size() == 1);
        }
      }
      REQUIRE(nodes == oracle::proper_rr_sequences(m));
      REQUIRE(count_proper_rr_sequences(m) == tree.size());
      REQUIRE(tree.size() >= n);
    }
  }
}

TEST_CASE("shadow is monotone under inclusion") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 500; ++trial) {
    const auto m = oracle::random_matching(1 + trial % 8, rng);
    std::vector<Edge> a, b;
    std::bernoulli_distribution coin(0.5);
    for (const auto& e : m.edges()) {
      const bool in_b = coin(rng);
      if (in_b) b.push_back(e);
      if (in_b && coin(rng)) a.push_back(e);
    }
    REQUIRE(shadow(m, b).contains(shadow(m, a)));
  }
}

TEST_CASE("pin sequences induce indecomposable matchings and keep their flags (n <= 5)") {
  for (std::size_t n = 1; n <= 5; ++n) {
    for (const auto& m : oracle::all_matchings(n)) {
      oracle::for_each_pin_sequence(m, [&](const std::vector<Edge>& seq) {
        const auto sub = subpattern(m, seq);
        REQUIRE(oracle::indecomposable(sub));
        // Relabelled pins in the same order.
        std::vector<Vertex> kept;
        for (const auto& e : seq) {
          kept.push_back(e.left);
          kept.push_back(e.right);
        }
        std::sort(kept.begin(), kept.end());
        std::vector<Edge> relabelled;
        for (const auto& e : seq) {
          auto rank = [&](Vertex v) {
            return static_cast<Vertex>(std::lower_bound(kept.begin(), kept.end(), v) - kept.begin()) + 1;
          };
          relabelled.push_back({rank(e.left), rank(e.right)});
        }
        const auto before = classify_sequence(m, seq);
        const auto after = classify_sequence(sub, relabelled);
        REQUIRE(after.is_pin_sequence);
        REQUIRE(after.is_proper == before.is_proper);
      });
    }
  }
}

TEST_CASE("longest_proper_pin_sequence matches exhaustive search (n <= 5)") {
  for (const auto& m : oracle::all_matchings_up_to(5)) {
    const auto best = longest_proper_pin_sequence(m);
    REQUIRE(best.size() == oracle::longest_proper_brute(m));
    if (!best.empty()) REQUIRE(oracle::is_proper(best));
  }
}
