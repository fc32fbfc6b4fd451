#include "arcmatch/enumeration.hpp"

#include <algorithm>
#include <atomic>
#include <iostream>
#include <mutex>
#include <string>
#include <thread>

#include "arcmatch/patterns.hpp"
#include "arcmatch/pins.hpp"

namespace arcmatch {

void check_size_cap(std::size_t n, bool allow_large) {
  if (n > kEnumerationSoftCap && !allow_large) {
    throw Error(ErrorCode::SizeCapExceeded,
                "n = " + std::to_string(n) + " exceeds the enumeration cap of " +
                    std::to_string(kEnumerationSoftCap),
                static_cast<long>(n));
  }
}

std::uint64_t matching_count(std::size_t n) {
  std::uint64_t out = 1;
  for (std::size_t i = 1; i <= n; ++i) out *= 2 * i - 1;
  return out;
}

MatchingStream::MatchingStream(std::size_t n, std::optional<std::size_t> fixed_first)
    : n_(n), fixed_first_(fixed_first), digits_(n, 0) {
  if (fixed_first_) {
    if (*fixed_first_ >= shard_count(n)) {
      throw Error(ErrorCode::VertexOutOfRange, "shard index out of range", static_cast<long>(*fixed_first_));
    }
    if (n > 0) digits_[0] = *fixed_first_;
  }
}

MatchingStream::MatchingStream(std::size_t n, bool allow_large) : MatchingStream(n, std::nullopt) {
  check_size_cap(n, allow_large);
}

MatchingStream MatchingStream::shard(std::size_t n, std::size_t index, bool allow_large) {
  check_size_cap(n, allow_large);
  return MatchingStream(n, std::optional<std::size_t>(index));
}

std::optional<Matching> MatchingStream::next() {
  if (done_) return std::nullopt;

  std::vector<Vertex> free(2 * n_);
  for (std::size_t i = 0; i < free.size(); ++i) free[i] = static_cast<Vertex>(i + 1);
  std::vector<std::pair<Vertex, Vertex>> pairs;
  pairs.reserve(n_);
  for (std::size_t i = 0; i < n_; ++i) {
    const Vertex a = free[0];
    const Vertex b = free[1 + digits_[i]];
    free.erase(free.begin() + 1 + static_cast<std::ptrdiff_t>(digits_[i]));
    free.erase(free.begin());
    pairs.emplace_back(a, b);
  }
  Matching out = Matching::from_pairs(pairs);

  // Odometer step: digit i ranges over [0, 2(n - i) - 2], last digit fastest.
  const std::size_t lowest = fixed_first_ ? 1 : 0;
  std::size_t i = n_;
  while (i > lowest) {
    --i;
    if (digits_[i] + 1 <= 2 * (n_ - i) - 2) {
      ++digits_[i];
      std::fill(digits_.begin() + static_cast<std::ptrdiff_t>(i) + 1, digits_.end(), 0);
      return out;
    }
  }
  done_ = true;
  return out;
}

void run_sharded(std::size_t n, std::size_t jobs, const std::function<void(std::size_t)>& work) {
  const std::size_t shards = MatchingStream::shard_count(n);
  jobs = std::clamp<std::size_t>(jobs, 1, shards);
  if (jobs == 1) {
    for (std::size_t s = 0; s < shards; ++s) work(s);
    return;
  }
  std::atomic<std::size_t> next_shard{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  std::vector<std::jthread> workers;
  for (std::size_t j = 0; j < jobs; ++j) {
    workers.emplace_back([&] {
      for (std::size_t s = next_shard++; s < shards; s = next_shard++) {
        try {
          work(s);
        } catch (...) {
          std::lock_guard lock(failure_mutex);
          if (!failure) failure = std::current_exception();
        }
      }
    });
  }
  workers.clear();
  if (failure) std::rethrow_exception(failure);
}

std::vector<std::uint64_t> recurrence_values(std::size_t n_max) {
  std::vector<std::uint64_t> s(n_max + 1, 0);
  if (n_max >= 1) s[1] = 1;
  for (std::size_t n = 2; n <= n_max; ++n) {
    std::uint64_t sum = 0;
    for (std::size_t i = 1; i < n; ++i) sum += s[i] * s[n - i];
    s[n] = (n - 1) * sum;
  }
  return s;
}

CensusRow census(std::size_t n, std::size_t jobs, bool allow_large) {
  if (n < 1) throw Error(ErrorCode::SizeTooSmall, "census needs n >= 1", static_cast<long>(n));
  check_size_cap(n, allow_large);

  std::vector<std::uint64_t> total(MatchingStream::shard_count(n), 0);
  std::vector<std::uint64_t> good(total.size(), 0);
  run_sharded(n, jobs, [&](std::size_t s) {
    auto stream = MatchingStream::shard(n, s, true);
    while (auto m = stream.next()) {
      ++total[s];
      if (is_indecomposable(*m)) ++good[s];
    }
  });

  CensusRow row;
  row.n = n;
  for (std::size_t s = 0; s < total.size(); ++s) {
    row.total += total[s];
    row.indecomposable += good[s];
  }
  row.recurrence_value = recurrence_values(n)[n];
  row.agrees = row.recurrence_value == row.indecomposable;
  return row;
}

bool avoids_all(const Matching& m, std::size_t k) {
  for (auto kind : {PatternKind::Interleaving, PatternKind::RightBrokenNesting, PatternKind::LeftBrokenNesting}) {
    if (max_pattern(m, kind).size >= k) return false;
  }
  return longest_proper_pin_sequence(m).size() < k;
}

AvoiderReport scan_avoiders(std::size_t n_max, std::size_t k, std::size_t jobs, bool allow_large) {
  if (k < 2) throw Error(ErrorCode::SizeTooSmall, "k must be at least 2", static_cast<long>(k));
  check_size_cap(n_max, allow_large);

  AvoiderReport report;
  report.n_max = n_max;
  report.k = k;
  for (std::size_t n = 1; n <= n_max; ++n) {
    const std::size_t shards = MatchingStream::shard_count(n);
    std::vector<AvoiderRow> partial(shards);
    run_sharded(n, jobs, [&](std::size_t s) {
      auto stream = MatchingStream::shard(n, s, true);
      while (auto m = stream.next()) {
        if (!is_indecomposable(*m)) continue;
        ++partial[s].indecomposable;
        if (avoids_all(*m, k)) {
          ++partial[s].avoiders;
          if (!partial[s].example) partial[s].example = *m;
        }
      }
    });
    AvoiderRow row;
    row.n = n;
    for (auto& p : partial) {  // shard order keeps the example canonical
      row.indecomposable += p.indecomposable;
      row.avoiders += p.avoiders;
      if (!row.example && p.example) row.example = std::move(p.example);
    }
    if (row.avoiders > 0) report.max_avoider_size = n;
    report.rows.push_back(std::move(row));
  }
  return report;
}

}  // namespace arcmatch
