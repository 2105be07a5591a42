#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "pprev/annotated_table.hpp"
#include "pprev/parity.hpp"
#include "pprev/truth_table.hpp"

namespace pprev {

/// Line budget for one conversion.
///
/// Garbage is the distinguishing bits plus one parity bit; ancilla fills the
/// input side up to the same width. A plan with zero garbage means the input
/// is already a parity-preserving bijection and is left as is.
struct ConversionPlan {
  unsigned distinguishing_bits = 0;
  unsigned garbage = 0;
  unsigned ancilla = 0;
  std::uint64_t max_group = 0;

  bool unchanged() const noexcept { return garbage == 0; }
  friend bool operator==(const ConversionPlan&, const ConversionPlan&) = default;
};

/// d = max(ceil(log2 max_group), n - m - 1, 0), g = d + 1, a = m + g - n.
ConversionPlan plan(const ParityProfile& profile, unsigned num_inputs, unsigned num_outputs);

/// Irreversible (or reversible) table to a Partial parity-preserving
/// specification. Each row's output is extended with its zero-based
/// occurrence index within its (pattern, parity class) group, MSB first,
/// followed by one bit restoring the input row's parity.
AnnotatedTable convert_irreversible(const TruthTable& table);

/// Reversible table: unchanged when already parity-preserving, otherwise one
/// ancilla and one garbage line carrying the parity-mismatch indicator.
/// Throws NotReversible.
AnnotatedTable convert_reversible(const TruthTable& table);

/// convert_reversible for square bijections, convert_irreversible otherwise.
AnnotatedTable convert(const TruthTable& table);

/// Extends a Partial table to a parity-preserving permutation of all 2^L
/// rows. Undefined inputs receive unused outputs of the same parity in
/// ascending order. Completed tables are returned unchanged.
/// Throws InfeasibleCompletion when the defined rows are not a parity-
/// preserving injection, TooLarge when L exceeds `max_lines`.
AnnotatedTable complete_permutation(const AnnotatedTable& table, unsigned max_lines = kDefaultMaxInputs);

/// Input-weight function: N inputs, floor(log2 N) + 1 outputs holding the
/// number of ones in the input. Throws TooLarge above `max_inputs`.
TruthTable rd_generate(unsigned num_inputs, unsigned max_inputs = kDefaultMaxInputs);

/// Benchmark-style name: rd53, rd84, rd10_4, rd20_5.
std::string rd_name(unsigned num_inputs);

/// Verification verdict for an annotated table. Failures are fields, not errors.
struct ParityReport {
  bool injective = false;
  bool parity_preserving = false;
  bool width_balanced = false;
  bool ancilla_zero = false;
  bool single_flip_detectable = false;
  /// Set only for Completed tables.
  std::optional<bool> bijective;

  /// Defined-row indices (original minterms for Partial tables) that break
  /// parity, capped at kMaxListed.
  std::vector<std::size_t> parity_violations;
  /// Defined-row indices whose output repeats an earlier row, capped likewise.
  std::vector<std::size_t> duplicate_rows;
  std::size_t parity_violation_count = 0;
  std::size_t duplicate_count = 0;

  static constexpr std::size_t kMaxListed = 32;

  bool ok() const noexcept {
    return injective && parity_preserving && width_balanced && ancilla_zero && single_flip_detectable &&
           bijective.value_or(true);
  }
};

ParityReport verify(const AnnotatedTable& table);

}  // namespace pprev
