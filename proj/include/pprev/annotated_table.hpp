#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "pprev/bit_row.hpp"
#include "pprev/truth_table.hpp"

namespace pprev {

enum class CompletionState : std::uint8_t { Partial, Completed };

/// Reversible specification over L = n + a lines, with ancilla inputs
/// appended after the original inputs and garbage outputs appended after the
/// original outputs.
///
/// A Partial table defines only the 2^n rows whose ancilla inputs are all 0;
/// row k then has input value `k << a`. A Completed table defines all 2^L
/// rows. A table without ancilla has no undefined rows and is always stored
/// as Completed.
///
/// Construction checks shape only (widths, line balance, row count). Parity
/// and injectivity are checked by `verify`.
class AnnotatedTable {
 public:
  AnnotatedTable(unsigned original_inputs, unsigned original_outputs, unsigned ancilla, unsigned garbage,
                 std::vector<std::uint64_t> rows, CompletionState state);

  /// Square table with no extra lines.
  static AnnotatedTable unchanged(const TruthTable& table);

  unsigned original_inputs() const noexcept { return original_inputs_; }
  unsigned original_outputs() const noexcept { return original_outputs_; }
  unsigned ancilla_count() const noexcept { return ancilla_; }
  unsigned garbage_count() const noexcept { return garbage_; }
  /// Total line count L; equal on the input and output side.
  unsigned lines() const noexcept { return original_inputs_ + ancilla_; }
  CompletionState completion_state() const noexcept { return state_; }

  std::size_t defined_row_count() const noexcept { return rows_.size(); }
  std::uint64_t input_value(std::size_t k) const noexcept {
    return state_ == CompletionState::Partial ? static_cast<std::uint64_t>(k) << ancilla_ : k;
  }
  std::uint64_t output_value(std::size_t k) const { return rows_.at(k); }
  std::span<const std::uint64_t> output_values() const noexcept { return rows_; }

  BitRow input_row(std::size_t k) const { return BitRow(input_value(k), lines()); }
  BitRow output_row(std::size_t k) const { return BitRow(rows_.at(k), lines()); }

  /// Full L-line table; throws PreconditionViolated while Partial.
  TruthTable base(unsigned max_inputs = kHardMaxInputs) const;

  friend bool operator==(const AnnotatedTable&, const AnnotatedTable&) = default;

 private:
  unsigned original_inputs_;
  unsigned original_outputs_;
  unsigned ancilla_;
  unsigned garbage_;
  CompletionState state_;
  std::vector<std::uint64_t> rows_;
};

}  // namespace pprev
