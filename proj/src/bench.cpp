#include "pprev/bench.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <thread>

#include "pprev/converter.hpp"
#include "pprev/errors.hpp"
#include "pprev/parity.hpp"

namespace pprev {

namespace fs = std::filesystem;

std::optional<unsigned> parse_generator_spec(std::string_view source) {
  constexpr std::string_view prefix = "rd:";
  if (source.substr(0, prefix.size()) != prefix) return std::nullopt;
  const auto digits = source.substr(prefix.size());
  if (digits.empty() || digits.size() > 9 || digits.find_first_not_of("0123456789") != std::string_view::npos) {
    return std::nullopt;
  }
  return static_cast<unsigned>(std::stoul(std::string(digits)));
}

LoadedSource load_source(const std::string& source, const ParseOptions& options) {
  if (auto n = parse_generator_spec(source)) {
    return {rd_name(*n), rd_generate(*n, std::min(options.max_inputs, kHardMaxInputs)), {}};
  }
  if (source == "-") {
    auto parsed = parse_pla(std::cin, options);
    return {"stdin", std::move(parsed.table), std::move(parsed.warnings)};
  }
  std::ifstream in(source);
  if (!in) {
    throw Error("cannot open " + source);
  }
  auto parsed = parse_pla(in, options);
  return {fs::path(source).filename().string(), std::move(parsed.table), std::move(parsed.warnings)};
}

std::vector<std::string> expand_sources(std::span<const std::string> sources) {
  std::vector<std::string> out;
  for (const auto& source : sources) {
    std::error_code ec;
    if (!parse_generator_spec(source) && fs::is_directory(source, ec)) {
      std::vector<std::string> files;
      for (const auto& entry : fs::directory_iterator(source)) {
        if (entry.is_regular_file() && entry.path().extension() == ".pla") files.push_back(entry.path().string());
      }
      std::sort(files.begin(), files.end());
      out.insert(out.end(), files.begin(), files.end());
    } else {
      out.push_back(source);
    }
  }
  return out;
}

Conversion convert_with_report(const TruthTable& table, std::string name) {
  using clock = std::chrono::steady_clock;
  const auto start = clock::now();
  AnnotatedTable converted = convert(table);
  const auto stop = clock::now();

  ConversionReport report;
  report.name = std::move(name);
  report.inputs = table.num_inputs();
  report.outputs = table.num_outputs();
  report.garbage = converted.garbage_count();
  report.ancilla = converted.ancilla_count();
  report.bound = extra_bit_bound(profile(table));
  report.reversible = is_reversible(table);
  report.parity_preserving = report.reversible && is_parity_preserving(table);
  report.runtime_ms = std::chrono::duration<double, std::milli>(stop - start).count();
  return {std::move(converted), std::move(report)};
}

namespace {

BenchRecord run_one(const std::string& source, const ParseOptions& options) {
  BenchRecord record;
  record.source = source;
  try {
    auto loaded = load_source(source, options);
    auto conversion = convert_with_report(loaded.table, loaded.name);
    record.report = std::move(conversion.report);
    if (!verify(conversion.table).ok()) {
      record.error = "converted table failed verification";
    }
  } catch (const std::exception& e) {
    record.report.name = fs::path(source).filename().string();
    record.error = e.what();
  }
  return record;
}

}  // namespace

std::vector<BenchRecord> run_suite(std::span<const std::string> sources, const BenchOptions& options) {
  std::vector<BenchRecord> records(sources.size());
  const unsigned jobs = std::max(1u, std::min<unsigned>(options.jobs, static_cast<unsigned>(sources.size())));
  if (jobs <= 1) {
    for (std::size_t i = 0; i < sources.size(); ++i) records[i] = run_one(sources[i], options.parse);
    return records;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> workers;
  workers.reserve(jobs);
  for (unsigned w = 0; w < jobs; ++w) {
    workers.emplace_back([&] {
      for (std::size_t i = next++; i < sources.size(); i = next++) records[i] = run_one(sources[i], options.parse);
    });
  }
  for (auto& t : workers) t.join();
  return records;
}

std::vector<ScalingPoint> scaling_check(unsigned max_n, unsigned min_n) {
  if (max_n > kMaxScalingInputs) {
    throw TooLarge("scaling check is limited to n <= " + std::to_string(kMaxScalingInputs));
  }
  using clock = std::chrono::steady_clock;
  constexpr double kBudgetMs = 40.0;
  constexpr int kMinReps = 5;

  std::vector<ScalingPoint> points;
  for (unsigned n = std::max(1u, min_n); n <= max_n; ++n) {
    const TruthTable table = rd_generate(n);
    (void)convert_irreversible(table);
    double best = INFINITY;
    double spent = 0.0;
    for (int rep = 0; rep < kMinReps || spent < kBudgetMs; ++rep) {
      const auto start = clock::now();
      const auto converted = convert_irreversible(table);
      const double ms = std::chrono::duration<double, std::milli>(clock::now() - start).count();
      if (converted.defined_row_count() != table.num_rows()) throw Error("conversion lost rows");
      best = std::min(best, ms);
      spent += ms;
    }
    points.push_back({n, best});
  }
  return points;
}

double growth_ratio(std::span<const ScalingPoint> points) {
  if (points.size() < 2) return 1.0;
  double log_sum = 0.0;
  for (std::size_t i = 1; i < points.size(); ++i) {
    log_sum += std::log(points[i].runtime_ms / points[i - 1].runtime_ms);
  }
  return std::exp(log_sum / static_cast<double>(points.size() - 1));
}

}  // namespace pprev
