#include "pprev/parity.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "pattern_counter.hpp"
#include "pprev/errors.hpp"

namespace pprev {

ParityProfile::ParityProfile(unsigned num_inputs, unsigned num_outputs, std::vector<PatternGroup> groups)
    : num_inputs_(num_inputs), num_outputs_(num_outputs), groups_(std::move(groups)) {}

const PatternGroup* ParityProfile::find(const BitRow& pattern) const {
  auto it = std::lower_bound(groups_.begin(), groups_.end(), pattern.value(),
                             [](const PatternGroup& g, std::uint64_t v) { return g.pattern.value() < v; });
  if (it == groups_.end() || it->pattern != pattern) return nullptr;
  return &*it;
}

std::uint64_t ParityProfile::max_class_size() const noexcept {
  std::uint64_t best = 0;
  for (const auto& g : groups_) best = std::max(best, g.largest_class());
  return best;
}

std::uint64_t ParityProfile::total_rows() const noexcept {
  return std::accumulate(groups_.begin(), groups_.end(), std::uint64_t{0},
                         [](std::uint64_t acc, const PatternGroup& g) { return acc + g.size(); });
}

bool ParityProfile::all_match() const noexcept {
  return std::all_of(groups_.begin(), groups_.end(), [](const PatternGroup& g) { return g.mismatch_count == 0; });
}

ParityProfile profile(const TruthTable& table) {
  detail::PatternCounter counter(table.num_outputs(), table.num_rows());
  const auto outputs = table.output_values();
  for (std::size_t i = 0; i < outputs.size(); ++i) {
    counter.bump(outputs[i], parity_class(i, outputs[i]));
  }
  std::vector<PatternGroup> groups;
  counter.for_each([&](std::uint64_t pattern, std::uint64_t match, std::uint64_t mismatch) {
    groups.push_back({BitRow(pattern, table.num_outputs()), match, mismatch});
  });
  return ParityProfile(table.num_inputs(), table.num_outputs(), std::move(groups));
}

unsigned extra_bit_bound(const ParityProfile& profile) {
  if (profile.groups().empty()) {
    throw PreconditionViolated("empty parity profile");
  }
  unsigned bound = 0;
  for (const auto& g : profile.groups()) {
    // An empty class needs no distinguishing bits and contributes no term.
    if (g.match_count > 0) bound = std::max(bound, ceil_log2(g.match_count) + 1);
    if (g.mismatch_count > 0) bound = std::max(bound, ceil_log2(g.mismatch_count) + 1);
  }
  return bound;
}

mpz_class count_parity_preserving(unsigned n, unsigned max_n) {
  if (n == 0) {
    throw PreconditionViolated("n must be at least 1");
  }
  if (n > max_n) {
    throw TooLarge("n = " + std::to_string(n) + " exceeds the cap of " + std::to_string(max_n));
  }
  mpz_class half_factorial;
  mpz_fac_ui(half_factorial.get_mpz_t(), 1ul << (n - 1));
  return half_factorial * half_factorial;
}

std::uint64_t enumerate_parity_preserving(unsigned n) {
  if (n == 0) {
    throw PreconditionViolated("n must be at least 1");
  }
  if (n > 3) {
    throw TooLarge("enumeration is limited to n <= 3");
  }
  std::vector<std::uint64_t> perm(std::size_t{1} << n);
  std::iota(perm.begin(), perm.end(), 0);
  std::uint64_t count = 0;
  do {
    TruthTable candidate(n, n, perm);
    if (is_reversible(candidate) && is_parity_preserving(candidate)) ++count;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return count;
}

namespace {

template <typename RowFn>
FlipCoverage count_flips(std::size_t rows, unsigned width, unsigned flips, RowFn&& row) {
  if (flips != 1 && flips != 2) {
    throw PreconditionViolated("flip count must be 1 or 2");
  }
  FlipCoverage cov{flips, 0, 0};
  for (std::size_t k = 0; k < rows; ++k) {
    const auto [input, output] = row(k);
    const bool expected = parity(input);
    for (unsigned i = 0; i < width; ++i) {
      const std::uint64_t bit_i = std::uint64_t{1} << i;
      if (flips == 1) {
        ++cov.injected;
        if (parity(output ^ bit_i) != expected) ++cov.detected;
        continue;
      }
      for (unsigned j = i + 1; j < width; ++j) {
        ++cov.injected;
        if (parity(output ^ bit_i ^ (std::uint64_t{1} << j)) != expected) ++cov.detected;
      }
    }
  }
  return cov;
}

}  // namespace

FlipCoverage flip_coverage(const TruthTable& table, unsigned flips) {
  return count_flips(table.num_rows(), table.num_outputs(), flips, [&](std::size_t k) {
    return std::pair<std::uint64_t, std::uint64_t>{k, table.output_value(k)};
  });
}

FlipCoverage flip_coverage(const AnnotatedTable& table, unsigned flips) {
  return count_flips(table.defined_row_count(), table.lines(), flips, [&](std::size_t k) {
    return std::pair<std::uint64_t, std::uint64_t>{table.input_value(k), table.output_value(k)};
  });
}

bool single_bitflip_detectable(const TruthTable& table) {
  if (table.num_inputs() != table.num_outputs() || !is_parity_preserving(table)) {
    throw PreconditionViolated("table is not parity-preserving");
  }
  return flip_coverage(table, 1).complete();
}

}  // namespace pprev
