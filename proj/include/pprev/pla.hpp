#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "pprev/annotated_table.hpp"
#include "pprev/truth_table.hpp"

namespace pprev {

struct PlaCube {
  std::string inputs;   // over {0,1,-}
  std::string outputs;  // over {0,1,-,~}
  std::size_t line = 0;
};

/// Syntax-level view of a PLA file, before don't-care expansion.
struct PlaDocument {
  unsigned num_inputs = 0;
  unsigned num_outputs = 0;
  std::optional<std::size_t> declared_cubes;
  std::vector<std::string> input_labels;
  std::vector<std::string> output_labels;
  std::vector<PlaCube> cubes;
  /// From "# ancilla N" / "# garbage N" comment lines.
  std::optional<unsigned> ancilla;
  std::optional<unsigned> garbage;

  bool annotated() const noexcept { return ancilla.has_value() && garbage.has_value(); }
};

struct ParseOptions {
  /// Minterms covered by no cube become a CoverageError instead of zeros.
  bool strict = false;
  unsigned max_inputs = kDefaultMaxInputs;
};

struct ParsedTable {
  TruthTable table;
  std::vector<std::string> warnings;
};

struct ParsedAnnotated {
  AnnotatedTable table;
  std::vector<std::string> warnings;
};

/// Reads directives and cubes. Throws SyntaxError or WidthError.
PlaDocument read_pla_document(std::istream& in);
PlaDocument read_pla_document(std::string_view text);

/// Expands '-' inputs and resolves output don't-cares to 0.
/// Throws ConflictError, CoverageError (strict only) or TooLarge.
ParsedTable expand(const PlaDocument& doc, const ParseOptions& options = {});

/// Rebuilds an annotated table from a document carrying ancilla/garbage
/// comments. The covered minterms must be exactly the ancilla-zero rows
/// (Partial) or all rows (Completed); anything else is a CoverageError.
ParsedAnnotated expand_annotated(const PlaDocument& doc, const ParseOptions& options = {});

ParsedTable parse_pla(std::istream& in, const ParseOptions& options = {});
ParsedTable parse_pla(std::string_view text, const ParseOptions& options = {});

/// Complete-minterm PLA, ancilla and garbage declared in '#' comment lines.
void write_pla(std::ostream& out, const AnnotatedTable& table);
std::string write_pla(const AnnotatedTable& table);

/// Complete-minterm PLA without annotations.
void write_pla(std::ostream& out, const TruthTable& table);
std::string write_pla(const TruthTable& table);

/// One row of the benchmark summary.
struct ConversionReport {
  std::string name;
  unsigned inputs = 0;
  unsigned outputs = 0;
  unsigned garbage = 0;
  unsigned ancilla = 0;
  unsigned bound = 0;
  /// Properties of the source function.
  bool reversible = false;
  bool parity_preserving = false;
  double runtime_ms = 0.0;
};

enum class ReportFormat { KeyValue, Csv };

inline constexpr std::string_view kReportCsvHeader =
    "name,inputs,outputs,garbage,ancilla,runtime_ms,reversible,parity_preserving,bound";

/// One self-describing record; CSV mode writes the header line first.
void write_report(std::ostream& out, const ConversionReport& report, ReportFormat format = ReportFormat::KeyValue);
std::string write_report(const ConversionReport& report, ReportFormat format = ReportFormat::KeyValue);

/// Header plus one line per report.
void write_csv(std::ostream& out, std::span<const ConversionReport> reports);

}  // namespace pprev
