#pragma once

#include <algorithm>
#include <array>
#include <cstddef>
#include <cstdint>
#include <unordered_map>
#include <vector>

#include "pprev/truth_table.hpp"

namespace pprev::detail {

/// Per-(output pattern, parity class) occurrence counters.
///
/// Dense arrays when 2^width is no larger than the row count (or small),
/// otherwise a hash map.
class PatternCounter {
 public:
  PatternCounter(unsigned pattern_width, std::size_t rows)
      : dense_(pattern_width <= 16 || (std::size_t{1} << std::min(pattern_width, 63u)) <= rows) {
    if (dense_) counts_.assign(std::size_t{2} << pattern_width, 0);
  }

  /// Returns the count before incrementing, i.e. the zero-based occurrence index.
  std::uint64_t bump(std::uint64_t pattern, ParityClass cls) {
    const auto c = static_cast<std::size_t>(cls);
    if (dense_) return counts_[2 * pattern + c]++;
    return sparse_[pattern][c]++;
  }

  /// Calls fn(pattern, match, mismatch) for every seen pattern in ascending order.
  template <typename Fn>
  void for_each(Fn&& fn) const {
    if (dense_) {
      for (std::size_t p = 0; 2 * p < counts_.size(); ++p) {
        if (counts_[2 * p] != 0 || counts_[2 * p + 1] != 0) fn(std::uint64_t{p}, counts_[2 * p], counts_[2 * p + 1]);
      }
      return;
    }
    std::vector<std::uint64_t> keys;
    keys.reserve(sparse_.size());
    for (const auto& [key, _] : sparse_) keys.push_back(key);
    std::sort(keys.begin(), keys.end());
    for (auto key : keys) {
      const auto& c = sparse_.at(key);
      fn(key, c[0], c[1]);
    }
  }

 private:
  bool dense_;
  std::vector<std::uint64_t> counts_;
  std::unordered_map<std::uint64_t, std::array<std::uint64_t, 2>> sparse_;
};

}  // namespace pprev::detail
