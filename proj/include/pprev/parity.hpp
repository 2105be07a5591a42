#pragma once

#include <cstdint>
#include <vector>

#include <gmpxx.h>

#include "pprev/annotated_table.hpp"
#include "pprev/bit_row.hpp"
#include "pprev/truth_table.hpp"

namespace pprev {

/// Rows sharing one output pattern, split by parity class.
struct PatternGroup {
  BitRow pattern;
  std::uint64_t match_count = 0;
  std::uint64_t mismatch_count = 0;

  std::uint64_t size() const noexcept { return match_count + mismatch_count; }
  std::uint64_t largest_class() const noexcept { return match_count > mismatch_count ? match_count : mismatch_count; }
};

/// Parity structure of a table: one group per distinct output row, ordered
/// by ascending pattern value.
class ParityProfile {
 public:
  ParityProfile(unsigned num_inputs, unsigned num_outputs, std::vector<PatternGroup> groups);

  unsigned num_inputs() const noexcept { return num_inputs_; }
  unsigned num_outputs() const noexcept { return num_outputs_; }
  const std::vector<PatternGroup>& groups() const noexcept { return groups_; }

  /// nullptr when no row produces `pattern`.
  const PatternGroup* find(const BitRow& pattern) const;

  /// Largest single-class group size over all patterns.
  std::uint64_t max_class_size() const noexcept;
  std::uint64_t total_rows() const noexcept;
  bool all_match() const noexcept;

 private:
  unsigned num_inputs_;
  unsigned num_outputs_;
  std::vector<PatternGroup> groups_;
};

ParityProfile profile(const TruthTable& table);

/// Minimum number of extra output bits for a parity-preserving reversible
/// version: the maximum over every non-empty class of ceil(log2 count) + 1.
/// Throws PreconditionViolated on an empty profile.
unsigned extra_bit_bound(const ParityProfile& profile);

/// Exact count (2^(n-1)!)^2 of n-variable parity-preserving reversible functions.
/// Throws PreconditionViolated for n == 0 and TooLarge above `max_n`.
mpz_class count_parity_preserving(unsigned n, unsigned max_n = kDefaultMaxInputs);

/// Exhaustive oracle for the count above: walks every permutation of the
/// 2^n rows and counts the parity-preserving ones. Throws TooLarge for n > 3.
std::uint64_t enumerate_parity_preserving(unsigned n);

/// True iff flipping any single output bit of any row breaks parity
/// agreement with the input. Throws PreconditionViolated unless the table is
/// parity-preserving.
bool single_bitflip_detectable(const TruthTable& table);

/// Outcome of flipping every combination of `flips` output bits on every row.
struct FlipCoverage {
  unsigned flips = 0;
  std::uint64_t injected = 0;
  std::uint64_t detected = 0;

  bool complete() const noexcept { return injected == detected; }
  bool none() const noexcept { return detected == 0; }
};

/// `flips` must be 1 or 2.
FlipCoverage flip_coverage(const TruthTable& table, unsigned flips);
/// Defined rows only.
FlipCoverage flip_coverage(const AnnotatedTable& table, unsigned flips);

}  // namespace pprev
