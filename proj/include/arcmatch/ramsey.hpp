#pragma once

#include <optional>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "arcmatch/core.hpp"
#include "arcmatch/patterns.hpp"

namespace arcmatch {

using BigInt = boost::multiprecision::cpp_int;

struct Bounds {
  std::size_t k = 0;
  BigInt stated;              // (2k)^(2k)
  BigInt crossing_threshold;  // 2(k-1)^2 + 2
  BigInt tree_bound;          // sum_{i=0}^{k-1} (2(k-1)^2 + 1)^i
};

Bounds bounds(std::size_t k);

// ((2(k-1)^2 + 1)^k - 1) / (2(k-1)^2), for cross-checking the summation.
BigInt tree_bound_closed_form(std::size_t k);

struct WitnessReport {
  enum class Outcome { Found, BelowThreshold };

  Outcome outcome = Outcome::BelowThreshold;
  // Found: the certificate. BelowThreshold: the longest proper
  // right-reaching pin sequence seen (shorter than k), if any.
  std::optional<Witness> witness;
  std::size_t edge_count = 0;
  Bounds bounds;

  bool found() const noexcept { return outcome == Outcome::Found; }
};

// Heavy edge first: the first edge in (left, right) order with at least
// crossing_threshold crossers yields an interleaving or broken nesting.
// Otherwise the pin tree is searched depth first for k pins. If neither
// succeeds the matching is smaller than tree_bound, which is asserted.
WitnessReport witness(const Matching& m, std::size_t k);

struct TheoremRow {
  std::size_t n = 0;
  std::uint64_t indecomposable = 0;
  std::uint64_t interleavings = 0;
  std::uint64_t broken_nestings = 0;
  std::uint64_t pin_sequences = 0;
  std::uint64_t below_threshold = 0;
};

struct TheoremReport {
  std::size_t n_max = 0;
  std::size_t k = 0;
  Bounds bounds;
  std::vector<TheoremRow> rows;        // n = 1 .. n_max
  std::vector<std::string> failures;   // one line per inconsistent matching

  bool passed() const noexcept { return failures.empty(); }
};

// Checks every indecomposable matching with 1 <= n <= n_max: Found
// witnesses must validate (including an independent containment check),
// and BelowThreshold results must satisfy the counting argument.
TheoremReport verify_theorem(std::size_t n_max, std::size_t k, std::size_t jobs = 1, bool allow_large = false);

// The per-matching check behind verify_theorem; returns a diagnostic on
// failure.
std::optional<std::string> check_witness_consistency(const Matching& m, std::size_t k, const WitnessReport& report);

}  // namespace arcmatch
