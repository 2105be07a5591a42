#include "pprev/truth_table.hpp"

#include <string>

#include "pprev/errors.hpp"

namespace pprev {

TruthTable::TruthTable(unsigned num_inputs, unsigned num_outputs, std::vector<std::uint64_t> outputs,
                       unsigned max_inputs)
    : num_inputs_(num_inputs), num_outputs_(num_outputs), outputs_(std::move(outputs)) {
  if (num_inputs == 0) {
    throw WidthError("a truth table needs at least one input");
  }
  if (max_inputs > kHardMaxInputs) max_inputs = kHardMaxInputs;
  if (num_inputs > max_inputs) {
    throw TooLarge(std::to_string(num_inputs) + " inputs exceed the cap of " + std::to_string(max_inputs));
  }
  if (num_outputs > kMaxRowWidth) {
    throw WidthError(std::to_string(num_outputs) + " outputs exceed " + std::to_string(kMaxRowWidth));
  }
  if (outputs_.size() != (std::size_t{1} << num_inputs)) {
    throw WidthError("expected " + std::to_string(std::size_t{1} << num_inputs) + " rows, got " +
                     std::to_string(outputs_.size()));
  }
  const std::uint64_t overflow = ~low_mask(num_outputs);
  for (std::size_t i = 0; i < outputs_.size(); ++i) {
    if ((outputs_[i] & overflow) != 0) {
      throw WidthError("output row " + std::to_string(i) + " is wider than " + std::to_string(num_outputs) + " bits");
    }
  }
}

TruthTable TruthTable::from_strings(unsigned num_inputs, std::initializer_list<std::string_view> rows) {
  if (rows.size() == 0) {
    throw WidthError("no rows given");
  }
  const auto width = static_cast<unsigned>(rows.begin()->size());
  std::vector<std::uint64_t> outputs;
  outputs.reserve(rows.size());
  for (auto text : rows) {
    if (text.size() != width) {
      throw WidthError("rows have differing widths");
    }
    outputs.push_back(BitRow::parse(text).value());
  }
  return TruthTable(num_inputs, width, std::move(outputs));
}

bool is_reversible(const TruthTable& table) {
  if (table.num_inputs() != table.num_outputs()) return false;
  std::vector<bool> seen(table.num_rows(), false);
  for (std::uint64_t out : table.output_values()) {
    if (seen[out]) return false;
    seen[out] = true;
  }
  return true;
}

bool is_parity_preserving(const TruthTable& table) {
  if (table.num_inputs() != table.num_outputs()) {
    throw WidthMismatch("parity preservation needs a square table, got " + std::to_string(table.num_inputs()) +
                        " inputs and " + std::to_string(table.num_outputs()) + " outputs");
  }
  const auto outputs = table.output_values();
  for (std::size_t i = 0; i < outputs.size(); ++i) {
    if (parity(i) != parity(outputs[i])) return false;
  }
  return true;
}

}  // namespace pprev
