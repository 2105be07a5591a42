#include "pprev/annotated_table.hpp"

#include <string>

#include "pprev/errors.hpp"

namespace pprev {

AnnotatedTable::AnnotatedTable(unsigned original_inputs, unsigned original_outputs, unsigned ancilla,
                               unsigned garbage, std::vector<std::uint64_t> rows, CompletionState state)
    : original_inputs_(original_inputs),
      original_outputs_(original_outputs),
      ancilla_(ancilla),
      garbage_(garbage),
      state_(ancilla == 0 ? CompletionState::Completed : state),
      rows_(std::move(rows)) {
  if (original_inputs + ancilla != original_outputs + garbage) {
    throw WidthError("unbalanced lines: " + std::to_string(original_inputs) + " + " + std::to_string(ancilla) +
                     " inputs vs " + std::to_string(original_outputs) + " + " + std::to_string(garbage) +
                     " outputs");
  }
  if (lines() > kMaxRowWidth) {
    throw TooLarge(std::to_string(lines()) + " lines exceed " + std::to_string(kMaxRowWidth));
  }
  const unsigned row_bits = state_ == CompletionState::Partial ? original_inputs_ : lines();
  if (row_bits >= 8 * sizeof(std::size_t) || rows_.size() != (std::size_t{1} << row_bits)) {
    throw WidthError("expected 2^" + std::to_string(row_bits) + " rows, got " + std::to_string(rows_.size()));
  }
  const std::uint64_t overflow = ~low_mask(lines());
  for (std::uint64_t out : rows_) {
    if ((out & overflow) != 0) {
      throw WidthError("output row wider than " + std::to_string(lines()) + " bits");
    }
  }
}

AnnotatedTable AnnotatedTable::unchanged(const TruthTable& table) {
  if (table.num_inputs() != table.num_outputs()) {
    throw WidthMismatch("an unchanged annotated table must be square");
  }
  const auto outs = table.output_values();
  return AnnotatedTable(table.num_inputs(), table.num_outputs(), 0, 0, {outs.begin(), outs.end()},
                        CompletionState::Completed);
}

TruthTable AnnotatedTable::base(unsigned max_inputs) const {
  if (state_ != CompletionState::Completed) {
    throw PreconditionViolated("a partial table has undefined rows");
  }
  return TruthTable(lines(), lines(), rows_, max_inputs);
}

}  // namespace pprev
