// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any
// failure.

#include <chrono>
#include <cstdio>
#include <random>
#include <string>

#include "arcmatch/certificate.hpp"
#include "arcmatch/enumeration.hpp"
#include "arcmatch/patterns.hpp"
#include "arcmatch/pins.hpp"
#include "arcmatch/ramsey.hpp"
#include "arcmatch/text.hpp"
#include "oracles.hpp"

using namespace arcmatch;

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
  bool ok = true;
  std::string note;

  void fail(const std::string& why) {
    if (ok) note = why;
    ok = false;
  }
};

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

Outcome ac1_cardinality() {
  Outcome out;
  const auto start = Clock::now();
  const std::uint64_t expected[] = {1, 3, 15, 105, 945, 10395, 135135};
  for (std::size_t n = 1; n <= 7; ++n) {
    MatchingStream stream(n);
    std::uint64_t count = 0;
    while (stream.next()) ++count;
    if (count != expected[n - 1]) out.fail("n=" + std::to_string(n) + " gave " + std::to_string(count));
  }
  const double t = seconds_since(start);
  if (t >= 60) out.fail("took " + std::to_string(t) + " s");
  if (out.ok) out.note = "1..7 exact in " + std::to_string(t) + " s";
  return out;
}

Outcome ac2_census() {
  Outcome out;
  std::string counts;
  for (std::size_t n = 1; n <= 7; ++n) {
    const auto row = census(n, 4);
    if (!row.agrees) out.fail("recurrence disagrees at n=" + std::to_string(n));
    if (row.recurrence_value != row.indecomposable) out.fail("flag inconsistent at n=" + std::to_string(n));
    if (n == 2 && row.indecomposable != 1) out.fail("n=2 gave " + std::to_string(row.indecomposable));
    counts += (n > 1 ? "," : "") + std::to_string(row.indecomposable);
  }
  if (out.ok) out.note = "indecomposable " + counts;
  return out;
}

Outcome ac3_proposition() {
  Outcome out;
  std::uint64_t checked = 0;
  for (std::size_t n = 1; n <= 5; ++n) {
    for (const auto& m : oracle::all_matchings(n)) {
      if (!oracle::indecomposable(m)) continue;
      oracle::for_each_pin_sequence(m, [&](const std::vector<Edge>& seq) {
        ++checked;
        if (!oracle::indecomposable(subpattern(m, seq))) {
          out.fail(format_edge_list(m) + " pins " + format_edges(seq));
        }
      });
    }
  }
  std::mt19937_64 rng(20240601);
  for (int i = 0; i < 10000; ++i) {
    const auto m = oracle::random_indecomposable(1 + i % 10, rng);
    const auto seq = oracle::random_pin_sequence(m, rng);
    ++checked;
    if (!classify_sequence(m, seq).is_pin_sequence) out.fail("generator produced a non-pin sequence");
    if (!oracle::indecomposable(subpattern(m, seq))) out.fail(format_edge_list(m) + " pins " + format_edges(seq));
  }
  if (out.ok) out.note = std::to_string(checked) + " pin sequences";
  return out;
}

Outcome ac4_rrpps() {
  Outcome out;
  const auto start = Clock::now();
  std::uint64_t runs = 0;
  for (std::size_t n = 1; n <= 6; ++n) {
    for (const auto& m : oracle::all_matchings(n)) {
      if (!oracle::indecomposable(m)) continue;
      for (const auto& e : m.edges()) {
        ++runs;
        try {
          const auto grown = grow_right_reaching(m, e);
          const auto q = properize(m, grown);
          const auto cls = classify_sequence(m, q.pins);
          if (!cls.is_proper || !cls.is_right_reaching || q.pins.front() != e) {
            out.fail(format_edge_list(m) + " from " + format_edges(std::span(&e, 1)));
          }
        } catch (const Error& err) {
          out.fail(format_edge_list(m) + ": " + err.what());
        }
      }
      if (count_proper_rr_sequences(m) < n) out.fail(format_edge_list(m) + " has fewer than n sequences");
    }
  }
  const double t = seconds_since(start);
  if (t >= 300) out.fail("took " + std::to_string(t) + " s");
  if (out.ok) out.note = std::to_string(runs) + " starts in " + std::to_string(t) + " s";
  return out;
}

Outcome ac5_conval() {
  Outcome out;
  std::mt19937_64 rng(77);
  std::uint64_t runs = 0;
  for (std::size_t k = 2; k <= 4; ++k) {
    const std::size_t need = 2 * (k - 1) * (k - 1) + 2;
    for (int i = 0; i < 1000; ++i) {
      std::uniform_int_distribution<std::size_t> split(0, need + 2);
      std::uniform_int_distribution<std::size_t> extras(0, 4);
      const std::size_t left = split(rng);
      const std::size_t right = left >= need ? split(rng) % 3 : need - left + split(rng) % 3;
      const auto [m, e] = oracle::with_heavy_edge(left, right, extras(rng), rng);
      ++runs;
      try {
        const auto w = extract_from_crossed_edge(m, e, k);
        const auto kind = w.pattern();
        if (w.size() < k || !kind) {
          out.fail("short or non-pattern witness");
        } else if (!contains(subpattern(m, w.edges()), canonical(*kind, w.size()))) {
          out.fail(format_edge_list(m) + ": containment oracle rejects " + std::string(to_string(*kind)));
        }
      } catch (const Error& err) {
        out.fail(format_edge_list(m) + ": " + err.what());
      }
    }
  }
  if (out.ok) out.note = std::to_string(runs) + " extractions";
  return out;
}

Outcome ac6_theorem() {
  Outcome out;
  if (bounds(2).tree_bound != 4) out.fail("tree_bound(2)");
  if (bounds(3).tree_bound != 91) out.fail("tree_bound(3)");
  for (std::size_t k = 2; k <= 3; ++k) {
    const auto report = verify_theorem(6, k, 4);
    if (!report.passed()) out.fail("k=" + std::to_string(k) + ": " + report.failures.front());
    if (k == 2) {
      for (const auto& row : report.rows) {
        if (row.n >= 2 && row.below_threshold != 0) out.fail("k=2 below threshold at n=" + std::to_string(row.n));
      }
    }
  }
  if (out.ok) out.note = "k=2,3 through n=6";
  return out;
}

std::size_t brute_max(const Matching& m, PatternKind kind) {
  for (std::size_t k = m.edge_count(); k >= min_pattern_size(kind); --k) {
    if (contains(m, canonical(kind, k))) return k;
  }
  return 0;
}

Outcome ac7_oracle() {
  Outcome out;
  std::uint64_t checks = 0;
  for (std::size_t n = 1; n <= 6; ++n) {
    for (const auto& m : oracle::all_matchings(n)) {
      for (const auto kind : {PatternKind::Interleaving, PatternKind::RightBrokenNesting,
                              PatternKind::LeftBrokenNesting, PatternKind::Nesting}) {
        ++checks;
        const auto best = max_pattern(m, kind);
        if (best.size != brute_max(m, kind)) {
          out.fail(format_edge_list(m) + " " + std::string(to_string(kind)));
        } else if (best.size > 0 && !contains(subpattern(m, best.edges), canonical(kind, best.size))) {
          out.fail(format_edge_list(m) + " bad edges for " + std::string(to_string(kind)));
        }
      }
    }
  }
  if (out.ok) out.note = std::to_string(checks) + " comparisons";
  return out;
}

Outcome ac8_round_trips() {
  Outcome out;
  for (const auto& m : oracle::all_matchings_up_to(5)) {
    for (const auto form : {TextForm::EdgeList, TextForm::ChordWord}) {
      if (!(parse_matching(format_matching(m, form)) == m)) out.fail(format_edge_list(m));
    }
  }
  std::mt19937_64 rng(8);
  for (int i = 0; i < 100; ++i) {
    const auto host = oracle::random_indecomposable(2 + i % 9, rng);
    const std::size_t k = 2 + i % 3;
    const auto check = verify_certificate(certificate_json(host, k, witness(host, k)));
    if (!check.ok) out.fail(format_edge_list(host) + ": " + check.reason);
  }
  if (out.ok) out.note = "text n<=5, 100 certificates";
  return out;
}

Outcome ac9_bounds() {
  Outcome out;
  for (std::size_t k = 2; k <= 10; ++k) {
    const auto b = bounds(k);
    BigInt stated = 1;
    for (std::size_t i = 0; i < 2 * k; ++i) stated *= 2 * k;
    const BigInt branching = 2 * (k - 1) * (k - 1) + 1;
    BigInt power = 1;
    for (std::size_t i = 0; i < k; ++i) power *= branching;
    if (b.stated != stated) out.fail("stated k=" + std::to_string(k));
    if (b.crossing_threshold != branching + 1) out.fail("threshold k=" + std::to_string(k));
    if (b.tree_bound != (power - 1) / (branching - 1)) out.fail("tree bound k=" + std::to_string(k));
    if (b.tree_bound != tree_bound_closed_form(k)) out.fail("closed form k=" + std::to_string(k));
  }
  if (bounds(2).stated != 256) out.fail("k=2 stated");
  if (out.ok) out.note = "k=2..10, stated(10)=" + bounds(10).stated.str();
  return out;
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    Outcome (*run)();
  };
  const Criterion criteria[] = {
      {"AC1 enumeration cardinality", ac1_cardinality}, {"AC2 census vs recurrence", ac2_census},
      {"AC3 pin sequences are indecomposable", ac3_proposition},
      {"AC4 right-reaching proper pin sequences", ac4_rrpps}, {"AC5 heavy edge extraction", ac5_conval},
      {"AC6 theorem consistency", ac6_theorem}, {"AC7 max_pattern vs brute force", ac7_oracle},
      {"AC8 round trips", ac8_round_trips}, {"AC9 bound arithmetic", ac9_bounds},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    Outcome out;
    try {
      out = c.run();
    } catch (const std::exception& e) {
      out.fail(std::string("exception: ") + e.what());
    }
    std::printf("%s %s: %s\n", out.ok ? "PASS" : "FAIL", c.name, out.note.c_str());
    std::fflush(stdout);
    failures += !out.ok;
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(std::size(criteria)) - failures, std::size(criteria));
  return failures == 0 ? 0 : 1;
}
