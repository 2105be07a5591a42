#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string_view>
#include <vector>

#include "pprev/bit_row.hpp"

namespace pprev {

/// Default cap on input count; 2^24 rows is about 16M.
inline constexpr unsigned kDefaultMaxInputs = 24;
/// Ceiling for the cap override.
inline constexpr unsigned kHardMaxInputs = 32;

/// Whether a row's input parity equals its output parity.
enum class ParityClass : std::uint8_t { Match = 0, Mismatch = 1 };

constexpr ParityClass parity_class(std::uint64_t input, std::uint64_t output) noexcept {
  return parity(input) == parity(output) ? ParityClass::Match : ParityClass::Mismatch;
}

/// Complete Boolean specification: one output row per input minterm.
///
/// Output values are stored densely, position i holding the row for the
/// minterm whose unsigned value is i (most significant bit = leftmost input).
/// Immutable after construction.
class TruthTable {
 public:
  TruthTable(unsigned num_inputs, unsigned num_outputs, std::vector<std::uint64_t> outputs,
             unsigned max_inputs = kDefaultMaxInputs);

  /// Convenience for small tables: rows written as "01", "10", ... in minterm order.
  static TruthTable from_strings(unsigned num_inputs, std::initializer_list<std::string_view> rows);

  unsigned num_inputs() const noexcept { return num_inputs_; }
  unsigned num_outputs() const noexcept { return num_outputs_; }
  std::size_t num_rows() const noexcept { return outputs_.size(); }

  std::uint64_t output_value(std::size_t minterm) const { return outputs_.at(minterm); }
  std::span<const std::uint64_t> output_values() const noexcept { return outputs_; }

  BitRow input(std::size_t minterm) const { return BitRow(minterm, num_inputs_); }
  BitRow output(std::size_t minterm) const { return BitRow(outputs_.at(minterm), num_outputs_); }

  ParityClass row_class(std::size_t minterm) const { return parity_class(minterm, outputs_.at(minterm)); }

  friend bool operator==(const TruthTable&, const TruthTable&) = default;

 private:
  unsigned num_inputs_;
  unsigned num_outputs_;
  std::vector<std::uint64_t> outputs_;
};

/// True iff the table is square and its output rows are pairwise distinct.
bool is_reversible(const TruthTable& table);

/// True iff every row's input parity equals its output parity.
/// Throws WidthMismatch when the table is not square.
bool is_parity_preserving(const TruthTable& table);

}  // namespace pprev
