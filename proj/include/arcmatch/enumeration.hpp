#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "arcmatch/core.hpp"

namespace arcmatch {

// Sizes above this need `allow_large`.
inline constexpr std::size_t kEnumerationSoftCap = 9;

void check_size_cap(std::size_t n, bool allow_large);

// (2n - 1)!!, the number of matchings on [2n].
std::uint64_t matching_count(std::size_t n);

// All matchings on [2n] in canonical order: the smallest free vertex is
// paired with each remaining free vertex in increasing order, recursively.
// A shard fixes the partner of vertex 1 (shard s pairs 1 with s + 2).
class MatchingStream {
 public:
  explicit MatchingStream(std::size_t n, bool allow_large = false);
  static MatchingStream shard(std::size_t n, std::size_t index, bool allow_large = false);

  std::optional<Matching> next();

  static std::size_t shard_count(std::size_t n) noexcept { return n == 0 ? 1 : 2 * n - 1; }

 private:
  MatchingStream(std::size_t n, std::optional<std::size_t> fixed_first);

  std::size_t n_;
  std::optional<std::size_t> fixed_first_;
  std::vector<std::size_t> digits_;
  bool done_ = false;
};

// Runs `work(shard_index)` for every shard of size n on up to `jobs`
// threads. `work` must only touch per-shard state.
void run_sharded(std::size_t n, std::size_t jobs, const std::function<void(std::size_t)>& work);

struct CensusRow {
  std::size_t n = 0;
  std::uint64_t total = 0;
  std::uint64_t indecomposable = 0;
  std::uint64_t recurrence_value = 0;
  bool agrees = false;
};

// s_1 = 1, s_n = (n - 1) * sum_{i=1}^{n-1} s_i s_{n-i}; entry 0 unused.
std::vector<std::uint64_t> recurrence_values(std::size_t n_max);

CensusRow census(std::size_t n, std::size_t jobs = 1, bool allow_large = false);

struct AvoiderRow {
  std::size_t n = 0;
  std::uint64_t indecomposable = 0;
  std::uint64_t avoiders = 0;
  std::optional<Matching> example;  // first avoider in canonical order
};

struct AvoiderReport {
  std::size_t n_max = 0;
  std::size_t k = 0;
  std::vector<AvoiderRow> rows;  // n = 1 .. n_max
  std::size_t max_avoider_size = 0;
};

// True when m contains no interleaving, broken nesting or proper pin
// sequence with k edges.
bool avoids_all(const Matching& m, std::size_t k);

AvoiderReport scan_avoiders(std::size_t n_max, std::size_t k, std::size_t jobs = 1, bool allow_large = false);

}  // namespace arcmatch
