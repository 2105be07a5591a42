#include "pprev/converter.hpp"

#include <algorithm>
#include <bit>
#include <string>
#include <utility>

#include "pattern_counter.hpp"
#include "pprev/errors.hpp"

namespace pprev {

ConversionPlan plan(const ParityProfile& profile, unsigned num_inputs, unsigned num_outputs) {
  ConversionPlan result;
  result.max_group = profile.max_class_size();
  if (num_inputs == num_outputs && result.max_group <= 1 && profile.all_match()) {
    return result;
  }
  unsigned d = ceil_log2(result.max_group);
  // Raise d until the output side is at least as wide as the input side.
  if (num_inputs > num_outputs + 1) d = std::max(d, num_inputs - num_outputs - 1);
  result.distinguishing_bits = d;
  result.garbage = d + 1;
  result.ancilla = num_outputs + result.garbage - num_inputs;
  return result;
}

AnnotatedTable convert_irreversible(const TruthTable& table) {
  const unsigned n = table.num_inputs();
  const unsigned m = table.num_outputs();
  const ConversionPlan p = plan(profile(table), n, m);
  if (p.unchanged()) {
    return AnnotatedTable::unchanged(table);
  }
  if (m + p.garbage > kMaxRowWidth) {
    throw TooLarge("converted table needs " + std::to_string(m + p.garbage) + " lines");
  }

  const unsigned shift = p.distinguishing_bits + 1;
  const auto outputs = table.output_values();
  std::vector<std::uint64_t> rows(outputs.size());
  detail::PatternCounter occurrences(m, outputs.size());
  for (std::size_t i = 0; i < outputs.size(); ++i) {
    const std::uint64_t out = outputs[i];
    const std::uint64_t index = occurrences.bump(out, parity_class(i, out));
    std::uint64_t extended = (out << shift) | (index << 1);
    extended |= static_cast<std::uint64_t>(parity(extended) != parity(i));
    rows[i] = extended;
  }
  return AnnotatedTable(n, m, p.ancilla, p.garbage, std::move(rows), CompletionState::Partial);
}

AnnotatedTable convert_reversible(const TruthTable& table) {
  if (!is_reversible(table)) {
    throw NotReversible("table is not a bijection");
  }
  if (is_parity_preserving(table)) {
    return AnnotatedTable::unchanged(table);
  }
  const unsigned n = table.num_inputs();
  if (n + 1 > kMaxRowWidth) {
    throw TooLarge("converted table needs " + std::to_string(n + 1) + " lines");
  }
  const auto outputs = table.output_values();
  std::vector<std::uint64_t> rows(outputs.size());
  for (std::size_t i = 0; i < outputs.size(); ++i) {
    rows[i] = (outputs[i] << 1) | static_cast<std::uint64_t>(parity(i) != parity(outputs[i]));
  }
  return AnnotatedTable(n, n, 1, 1, std::move(rows), CompletionState::Partial);
}

AnnotatedTable convert(const TruthTable& table) {
  if (is_reversible(table)) return convert_reversible(table);
  return convert_irreversible(table);
}

AnnotatedTable complete_permutation(const AnnotatedTable& table, unsigned max_lines) {
  if (table.completion_state() == CompletionState::Completed) {
    return table;
  }
  const unsigned lines = table.lines();
  if (lines > std::min(max_lines, kHardMaxInputs)) {
    throw TooLarge("completion over " + std::to_string(lines) + " lines exceeds the cap of " +
                   std::to_string(std::min(max_lines, kHardMaxInputs)));
  }
  const std::size_t size = std::size_t{1} << lines;
  const std::uint64_t ancilla_mask = low_mask(table.ancilla_count());

  std::vector<std::uint64_t> full(size, 0);
  std::vector<bool> used(size, false);
  for (std::size_t k = 0; k < table.defined_row_count(); ++k) {
    const std::uint64_t in = table.input_value(k);
    const std::uint64_t out = table.output_value(k);
    if (used[out]) {
      throw InfeasibleCompletion("output " + BitRow(out, lines).str() + " is defined twice");
    }
    if (parity(in) != parity(out)) {
      throw InfeasibleCompletion("row " + BitRow(in, lines).str() + " does not preserve parity");
    }
    used[out] = true;
    full[in] = out;
  }

  // One ascending cursor per parity class over the output space.
  std::uint64_t cursor[2] = {0, 0};
  for (std::uint64_t in = 0; in < size; ++in) {
    if ((in & ancilla_mask) == 0) continue;
    const int cls = parity(in) ? 1 : 0;
    std::uint64_t& c = cursor[cls];
    while (c < size && (used[c] || (parity(c) ? 1 : 0) != cls)) ++c;
    if (c == size) {
      throw InfeasibleCompletion("no unused output of matching parity for input " + BitRow(in, lines).str());
    }
    full[in] = c;
    used[c] = true;
    ++c;
  }
  return AnnotatedTable(table.original_inputs(), table.original_outputs(), table.ancilla_count(),
                        table.garbage_count(), std::move(full), CompletionState::Completed);
}

TruthTable rd_generate(unsigned num_inputs, unsigned max_inputs) {
  if (num_inputs == 0) {
    throw PreconditionViolated("rd functions need at least one input");
  }
  if (num_inputs > max_inputs) {
    throw TooLarge("rd" + std::to_string(num_inputs) + " exceeds the cap of " + std::to_string(max_inputs));
  }
  const auto outputs_width = static_cast<unsigned>(std::bit_width(num_inputs));
  std::vector<std::uint64_t> outputs(std::size_t{1} << num_inputs);
  for (std::size_t i = 0; i < outputs.size(); ++i) {
    outputs[i] = static_cast<std::uint64_t>(std::popcount(i));
  }
  return TruthTable(num_inputs, outputs_width, std::move(outputs), max_inputs);
}

std::string rd_name(unsigned num_inputs) {
  const auto k = std::to_string(std::bit_width(num_inputs));
  const auto n = std::to_string(num_inputs);
  return num_inputs < 10 ? "rd" + n + k : "rd" + n + "_" + k;
}

namespace {

// Indices k whose output value repeats an earlier one.
void find_duplicates(const AnnotatedTable& table, ParityReport& report) {
  const auto outputs = table.output_values();
  auto note = [&](std::size_t k) {
    if (report.duplicate_rows.size() < ParityReport::kMaxListed) report.duplicate_rows.push_back(k);
    ++report.duplicate_count;
  };
  if (table.lines() <= 28) {
    std::vector<bool> seen(std::size_t{1} << table.lines(), false);
    for (std::size_t k = 0; k < outputs.size(); ++k) {
      if (seen[outputs[k]]) note(k);
      seen[outputs[k]] = true;
    }
    return;
  }
  std::vector<std::pair<std::uint64_t, std::size_t>> sorted;
  sorted.reserve(outputs.size());
  for (std::size_t k = 0; k < outputs.size(); ++k) sorted.emplace_back(outputs[k], k);
  std::sort(sorted.begin(), sorted.end());
  std::vector<std::size_t> dups;
  for (std::size_t i = 1; i < sorted.size(); ++i) {
    if (sorted[i].first == sorted[i - 1].first) dups.push_back(sorted[i].second);
  }
  std::sort(dups.begin(), dups.end());
  for (auto k : dups) note(k);
}

}  // namespace

ParityReport verify(const AnnotatedTable& table) {
  ParityReport report;
  report.width_balanced =
      table.original_inputs() + table.ancilla_count() == table.original_outputs() + table.garbage_count();

  const std::uint64_t ancilla_mask = low_mask(table.ancilla_count());
  const bool partial = table.completion_state() == CompletionState::Partial;
  report.ancilla_zero = true;
  for (std::size_t k = 0; k < table.defined_row_count(); ++k) {
    const std::uint64_t in = table.input_value(k);
    if (partial && (in & ancilla_mask) != 0) report.ancilla_zero = false;
    if (parity(in) != parity(table.output_value(k))) {
      if (report.parity_violations.size() < ParityReport::kMaxListed) report.parity_violations.push_back(k);
      ++report.parity_violation_count;
    }
  }
  report.parity_preserving = report.parity_violation_count == 0;

  find_duplicates(table, report);
  report.injective = report.duplicate_count == 0;
  report.single_flip_detectable = flip_coverage(table, 1).complete();
  if (!partial) {
    report.bijective = report.injective && table.defined_row_count() == (std::size_t{1} << table.lines());
  }
  return report;
}

}  // namespace pprev
