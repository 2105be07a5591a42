#include "pprev/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>

#include "pprev/bench.hpp"
#include "pprev/converter.hpp"
#include "pprev/errors.hpp"
#include "pprev/parity.hpp"
#include "pprev/pla.hpp"

namespace pprev::cli {

namespace {

constexpr std::size_t kMaxListedGroups = 64;

struct Options {
  std::string input;
  std::string output = "-";
  std::string report_path;
  bool complete = false;
  bool csv = false;
  bool text = false;
  bool strict = false;
  bool oracle = false;
  unsigned max_n = kDefaultMaxInputs;
  unsigned count_n = 0;
  unsigned rd_n = 0;
  unsigned jobs = 1;
  unsigned scaling = 0;
  std::vector<std::string> sources;

  ParseOptions parse() const { return {strict, std::min(max_n, kHardMaxInputs)}; }
};

/// Writes to `path`, or to `fallback` when the path is "-".
class Sink {
 public:
  Sink(const std::string& path, std::ostream& fallback) : stream_(&fallback) {
    if (path != "-") {
      file_ = std::make_unique<std::ofstream>(path);
      if (!*file_) throw Error("cannot write " + path);
      stream_ = file_.get();
    }
  }
  std::ostream& get() { return *stream_; }

 private:
  std::unique_ptr<std::ofstream> file_;
  std::ostream* stream_;
};

void print_warnings(const std::vector<std::string>& warnings, std::ostream& err) {
  for (const auto& w : warnings) err << "warning: " << w << '\n';
}

int cmd_analyze(const Options& o, std::ostream& out, std::ostream& err) {
  auto src = load_source(o.input, o.parse());
  print_warnings(src.warnings, err);
  const auto& t = src.table;
  const ParityProfile prof = profile(t);
  const ConversionPlan p = plan(prof, t.num_inputs(), t.num_outputs());
  const bool reversible = is_reversible(t);

  out << "function: " << src.name << '\n'
      << "inputs: " << t.num_inputs() << '\n'
      << "outputs: " << t.num_outputs() << '\n'
      << "reversible: " << (reversible ? "yes" : "no") << '\n'
      << "parity_preserving: " << (reversible && is_parity_preserving(t) ? "yes" : "no") << '\n'
      << "groups: " << prof.groups().size() << '\n'
      << "pattern match mismatch\n";
  std::size_t shown = 0;
  for (const auto& g : prof.groups()) {
    if (shown++ == kMaxListedGroups) {
      out << "... " << prof.groups().size() - kMaxListedGroups << " more\n";
      break;
    }
    out << g.pattern.str() << ' ' << g.match_count << ' ' << g.mismatch_count << '\n';
  }
  out << "max_group: " << p.max_group << '\n'
      << "bound: " << extra_bit_bound(prof) << '\n'
      << "garbage: " << p.garbage << '\n'
      << "ancilla: " << p.ancilla << '\n';
  return kOk;
}

int cmd_convert(const Options& o, std::ostream& out, std::ostream& err) {
  auto src = load_source(o.input, o.parse());
  print_warnings(src.warnings, err);
  auto conversion = convert_with_report(src.table, src.name);
  AnnotatedTable result = o.complete ? complete_permutation(conversion.table, o.max_n) : conversion.table;

  const ParityReport check = verify(result);
  if (!check.ok()) {
    err << "internal error: converted table failed verification\n";
    return kInternalError;
  }
  {
    Sink sink(o.output, out);
    write_pla(sink.get(), result);
  }
  if (!o.report_path.empty()) {
    Sink sink(o.report_path, out);
    write_report(sink.get(), conversion.report, o.csv ? ReportFormat::Csv : ReportFormat::KeyValue);
  }
  return kOk;
}

std::string describe_row(const AnnotatedTable& t, std::size_t k) {
  std::string text;
  if (t.completion_state() == CompletionState::Partial) {
    text = "row " + BitRow(k, t.original_inputs()).str() + " (";
  } else {
    text = "row " + t.input_row(k).str() + " (";
  }
  return text + "input " + t.input_row(k).str() + ", output " + t.output_row(k).str() + ")";
}

int cmd_verify(const Options& o, std::ostream& out, std::ostream& err) {
  auto not_square = [&](unsigned inputs, unsigned outputs) {
    err << "error: verification needs a square specification, got " << inputs << " inputs and " << outputs
        << " outputs\n";
    return kInputError;
  };
  std::optional<AnnotatedTable> table;
  if (auto n = parse_generator_spec(o.input)) {
    const TruthTable rd = rd_generate(*n, o.parse().max_inputs);
    if (rd.num_inputs() != rd.num_outputs()) return not_square(rd.num_inputs(), rd.num_outputs());
    table = AnnotatedTable::unchanged(rd);
  } else {
    PlaDocument doc;
    if (o.input == "-") {
      doc = read_pla_document(std::cin);
    } else {
      std::ifstream in(o.input);
      if (!in) throw Error("cannot open " + o.input);
      doc = read_pla_document(in);
    }
    if (doc.num_inputs != doc.num_outputs) return not_square(doc.num_inputs, doc.num_outputs);
    if (doc.annotated()) {
      auto parsed = expand_annotated(doc, o.parse());
      print_warnings(parsed.warnings, err);
      table = std::move(parsed.table);
    } else {
      auto parsed = expand(doc, o.parse());
      print_warnings(parsed.warnings, err);
      table = AnnotatedTable::unchanged(parsed.table);
    }
  }

  const ParityReport r = verify(*table);
  auto yes_no = [](bool b) { return b ? "yes" : "no"; };
  out << "lines: " << table->lines() << '\n'
      << "ancilla: " << table->ancilla_count() << '\n'
      << "garbage: " << table->garbage_count() << '\n'
      << "rows: " << table->defined_row_count()
      << (table->completion_state() == CompletionState::Partial ? " (ancilla-zero rows only)" : "") << '\n'
      << "injective: " << yes_no(r.injective) << '\n'
      << "parity_preserving: " << yes_no(r.parity_preserving) << '\n'
      << "width_balanced: " << yes_no(r.width_balanced) << '\n'
      << "single_flip_detectable: " << yes_no(r.single_flip_detectable) << '\n';
  if (r.bijective) out << "bijective: " << yes_no(*r.bijective) << '\n';

  for (auto k : r.parity_violations) out << "parity violation: " << describe_row(*table, k) << '\n';
  if (r.parity_violation_count > r.parity_violations.size()) {
    out << "... " << r.parity_violation_count - r.parity_violations.size() << " more parity violations\n";
  }
  for (auto k : r.duplicate_rows) out << "duplicate output: " << describe_row(*table, k) << '\n';
  if (r.duplicate_count > r.duplicate_rows.size()) {
    out << "... " << r.duplicate_count - r.duplicate_rows.size() << " more duplicate outputs\n";
  }
  out << (r.ok() ? "verified\n" : "FAILED\n");
  return r.ok() ? kOk : kVerifyFailed;
}

int cmd_count(const Options& o, std::ostream& out, std::ostream& err) {
  if (o.oracle && o.count_n > 3) {
    err << "error: the enumeration oracle is limited to n <= 3\n";
    return kInputError;
  }
  const mpz_class count = count_parity_preserving(o.count_n, o.max_n);
  out << count.get_str() << '\n';
  if (o.oracle) {
    const std::uint64_t enumerated = enumerate_parity_preserving(o.count_n);
    if (mpz_class(static_cast<unsigned long>(enumerated)) != count) {
      err << "internal error: enumeration found " << enumerated << '\n';
      return kInternalError;
    }
    err << "enumeration agrees: " << enumerated << '\n';
  }
  return kOk;
}

int cmd_bench(const Options& o, std::ostream& out, std::ostream& err) {
  if (o.scaling > 0) {
    const auto points = scaling_check(o.scaling);
    Sink sink(o.output, out);
    sink.get() << "inputs,runtime_ms\n";
    for (const auto& p : points) sink.get() << p.num_inputs << ',' << p.runtime_ms << '\n';
    err << "growth ratio: " << growth_ratio(points) << '\n';
    return kOk;
  }
  const auto sources = expand_sources(o.sources);
  const auto records = run_suite(sources, {o.parse(), std::max(1u, o.jobs)});
  std::vector<ConversionReport> reports;
  bool failed = false;
  for (const auto& r : records) {
    if (r.ok()) {
      reports.push_back(r.report);
    } else {
      err << "error: " << r.source << ": " << *r.error << '\n';
      failed = true;
    }
  }
  Sink sink(o.output, out);
  write_csv(sink.get(), reports);
  return failed ? kInputError : kOk;
}

int cmd_rdgen(const Options& o, std::ostream& out, std::ostream&) {
  const TruthTable t = rd_generate(o.rd_n, o.parse().max_inputs);
  Sink sink(o.output, out);
  sink.get() << "# " << rd_name(o.rd_n) << '\n';
  write_pla(sink.get(), t);
  return kOk;
}

}  // namespace

int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Parity-preserving reversible specification tool", "pprev"};
  app.require_subcommand(1);
  Options o;

  auto add_parse_flags = [&](CLI::App* cmd) {
    cmd->add_flag("--strict", o.strict, "Reject PLA files that leave minterms uncovered");
    cmd->add_option("--max-n", o.max_n, "Cap on the number of inputs")->check(CLI::Range(1u, kHardMaxInputs));
  };

  auto* analyze = app.add_subcommand("analyze", "Print the parity profile and the extra-bit bound");
  analyze->add_option("input", o.input, "PLA file, '-' or rd:N")->required();
  add_parse_flags(analyze);

  auto* convert = app.add_subcommand("convert", "Write a parity-preserving reversible specification");
  convert->add_option("input", o.input, "PLA file, '-' or rd:N")->required();
  convert->add_option("-o,--output", o.output, "Output PLA path ('-' for stdout)");
  convert->add_flag("--complete", o.complete, "Extend to a full permutation of all rows");
  convert->add_option("--report", o.report_path, "Write a conversion report to this path ('-' for stdout)");
  auto* csv = convert->add_flag("--csv", o.csv, "CSV report");
  auto* text = convert->add_flag("--text", o.text, "Key-value report (default)");
  csv->excludes(text);
  add_parse_flags(convert);

  auto* verify_cmd = app.add_subcommand("verify", "Check reversibility and parity preservation");
  verify_cmd->add_option("input", o.input, "PLA file, '-' or rd:N")->required();
  add_parse_flags(verify_cmd);

  auto* count = app.add_subcommand("count", "Number of n-variable parity-preserving reversible functions");
  count->add_option("n", o.count_n, "Variable count")->required()->check(CLI::PositiveNumber);
  count->add_flag("--oracle", o.oracle, "Cross-check by exhaustive enumeration (n <= 3)");
  count->add_option("--max-n", o.max_n, "Cap on n")->check(CLI::Range(1u, kHardMaxInputs));

  auto* bench = app.add_subcommand("bench", "Convert many functions and emit a CSV summary");
  bench->add_option("sources", o.sources, "PLA files, directories or rd:N specs");
  bench->add_option("-o,--output", o.output, "CSV path ('-' for stdout)");
  bench->add_option("-j,--jobs", o.jobs, "Worker threads")->check(CLI::Range(1u, 256u));
  bench->add_option("--scaling", o.scaling, "Time rd:10..rd:N instead and print runtimes")
      ->check(CLI::Range(10u, kMaxScalingInputs));
  bench->add_flag("--csv", o.csv, "CSV output (the default and only format)");
  add_parse_flags(bench);

  auto* rdgen = app.add_subcommand("rdgen", "Write the N-input weight function as PLA");
  rdgen->add_option("n", o.rd_n, "Input count")->required()->check(CLI::PositiveNumber);
  rdgen->add_option("-o,--output", o.output, "Output path ('-' for stdout)");
  rdgen->add_option("--max-n", o.max_n, "Cap on N")->check(CLI::Range(1u, kHardMaxInputs));

  try {
    std::reverse(args.begin(), args.end());
    app.parse(args);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  }

  try {
    if (*analyze) return cmd_analyze(o, out, err);
    if (*convert) return cmd_convert(o, out, err);
    if (*verify_cmd) return cmd_verify(o, out, err);
    if (*count) return cmd_count(o, out, err);
    if (*bench) return cmd_bench(o, out, err);
    if (*rdgen) return cmd_rdgen(o, out, err);
  } catch (const InfeasibleCompletion& e) {
    err << "internal error: " << e.what() << '\n';
    return kInternalError;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const std::bad_alloc&) {
    err << "error: out of memory\n";
    return kInputError;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kInternalError;
  }
  return kInputError;
}

}  // namespace pprev::cli
