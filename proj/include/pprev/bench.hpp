#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "pprev/annotated_table.hpp"
#include "pprev/pla.hpp"
#include "pprev/truth_table.hpp"

namespace pprev {

/// N from a generator spec "rd:N"; nullopt for anything else.
std::optional<unsigned> parse_generator_spec(std::string_view source);

struct LoadedSource {
  std::string name;
  TruthTable table;
  std::vector<std::string> warnings;
};

/// Loads a generator spec, a PLA file path, or "-" for standard input.
/// Throws pprev::Error subclasses on unreadable or malformed input.
LoadedSource load_source(const std::string& source, const ParseOptions& options = {});

/// Directories become their *.pla files in name order; other entries pass through.
std::vector<std::string> expand_sources(std::span<const std::string> sources);

struct Conversion {
  AnnotatedTable table;
  ConversionReport report;
};

/// Converts (dispatching on reversibility) and fills in the report. Only the
/// conversion itself is timed.
Conversion convert_with_report(const TruthTable& table, std::string name);

struct BenchRecord {
  std::string source;
  ConversionReport report;
  /// Set when the source failed to load or convert.
  std::optional<std::string> error;

  bool ok() const noexcept { return !error.has_value(); }
};

struct BenchOptions {
  ParseOptions parse;
  unsigned jobs = 1;
};

/// One record per source, in source order. Per-source failures are captured
/// in the record.
std::vector<BenchRecord> run_suite(std::span<const std::string> sources, const BenchOptions& options = {});

struct ScalingPoint {
  unsigned num_inputs = 0;
  double runtime_ms = 0.0;
};

inline constexpr unsigned kMaxScalingInputs = 22;

/// Times convert_irreversible on rd_generate(n) for n = min_n..max_n, taking
/// the fastest of several repetitions after a warm-up run.
/// Throws TooLarge above kMaxScalingInputs.
std::vector<ScalingPoint> scaling_check(unsigned max_n, unsigned min_n = 10);

/// Geometric mean of runtime(n + 1) / runtime(n) over consecutive points.
double growth_ratio(std::span<const ScalingPoint> points);

}  // namespace pprev
