#include "pprev/pla.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <iomanip>
#include <istream>
#include <ostream>
#include <sstream>

#include "pprev/errors.hpp"

namespace pprev {

namespace {

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> tokens;
  std::size_t pos = 0;
  while (pos < line.size()) {
    while (pos < line.size() && std::isspace(static_cast<unsigned char>(line[pos]))) ++pos;
    const std::size_t start = pos;
    while (pos < line.size() && !std::isspace(static_cast<unsigned char>(line[pos]))) ++pos;
    if (pos > start) tokens.push_back(line.substr(start, pos - start));
  }
  return tokens;
}

std::optional<unsigned> to_unsigned(std::string_view text) {
  unsigned value = 0;
  const auto* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc{} || ptr != end) return std::nullopt;
  return value;
}

unsigned directive_count(const std::vector<std::string_view>& tokens, std::size_t line) {
  if (tokens.size() != 2) {
    throw SyntaxError(line, std::string(tokens[0]) + " takes exactly one argument");
  }
  auto value = to_unsigned(tokens[1]);
  if (!value) {
    throw SyntaxError(line, std::string(tokens[0]) + " argument is not a count: '" + std::string(tokens[1]) + "'");
  }
  return *value;
}

void read_comment(std::string_view body, PlaDocument& doc) {
  const auto tokens = split_ws(body);
  if (tokens.size() != 2) return;
  auto value = to_unsigned(tokens[1]);
  if (!value) return;
  if (tokens[0] == "ancilla") doc.ancilla = *value;
  if (tokens[0] == "garbage") doc.garbage = *value;
}

/// A cube's input pattern split into fixed ones and don't-care positions,
/// and its output pattern split into ones and specified positions.
struct CubeBits {
  std::uint64_t base = 0;
  std::uint64_t dashes = 0;
  std::uint64_t ones = 0;
  std::uint64_t specified = 0;
};

CubeBits decode(const PlaCube& cube) {
  CubeBits bits;
  for (char c : cube.inputs) {
    bits.base = (bits.base << 1) | static_cast<std::uint64_t>(c == '1');
    bits.dashes = (bits.dashes << 1) | static_cast<std::uint64_t>(c == '-');
  }
  for (char c : cube.outputs) {
    bits.ones = (bits.ones << 1) | static_cast<std::uint64_t>(c == '1');
    bits.specified = (bits.specified << 1) | static_cast<std::uint64_t>(c == '0' || c == '1');
  }
  return bits;
}

/// Calls fn(minterm) for every minterm the cube covers.
template <typename Fn>
void for_each_minterm(const CubeBits& bits, Fn&& fn) {
  std::uint64_t sub = 0;
  do {
    fn(bits.base | sub);
    sub = (sub - bits.dashes) & bits.dashes;
  } while (sub != 0);
}

[[noreturn]] void conflict(std::uint64_t minterm, unsigned width, std::size_t line) {
  throw ConflictError("line " + std::to_string(line) + ": minterm " + BitRow(minterm, width).str() +
                      " already has a different output");
}

std::string resolved_warning(std::size_t count) {
  return std::to_string(count) + " minterm(s) had unspecified output bits; resolved to 0";
}

std::string uncovered_message(std::size_t count) {
  return std::to_string(count) + " minterm(s) covered by no cube";
}

}  // namespace

PlaDocument read_pla_document(std::istream& in) {
  PlaDocument doc;
  bool have_inputs = false;
  bool have_outputs = false;
  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string_view line = raw;
    while (!line.empty() && std::isspace(static_cast<unsigned char>(line.back()))) line.remove_suffix(1);
    while (!line.empty() && std::isspace(static_cast<unsigned char>(line.front()))) line.remove_prefix(1);
    if (line.empty()) continue;

    if (line.front() == '#') {
      read_comment(line.substr(1), doc);
      continue;
    }

    const auto tokens = split_ws(line);
    if (line.front() == '.') {
      const auto& key = tokens[0];
      if (key == ".e" || key == ".end") break;
      if (key == ".i") {
        if (have_inputs) throw SyntaxError(line_no, "duplicate .i");
        doc.num_inputs = directive_count(tokens, line_no);
        if (doc.num_inputs == 0) throw SyntaxError(line_no, ".i must be at least 1");
        if (doc.num_inputs > kMaxRowWidth) throw SyntaxError(line_no, ".i exceeds 64");
        have_inputs = true;
      } else if (key == ".o") {
        if (have_outputs) throw SyntaxError(line_no, "duplicate .o");
        doc.num_outputs = directive_count(tokens, line_no);
        if (doc.num_outputs == 0) throw SyntaxError(line_no, ".o must be at least 1");
        if (doc.num_outputs > kMaxRowWidth) throw SyntaxError(line_no, ".o exceeds 64");
        have_outputs = true;
      } else if (key == ".p") {
        if (doc.declared_cubes) throw SyntaxError(line_no, "duplicate .p");
        doc.declared_cubes = directive_count(tokens, line_no);
      } else if (key == ".ilb") {
        doc.input_labels.assign(tokens.begin() + 1, tokens.end());
      } else if (key == ".ob") {
        doc.output_labels.assign(tokens.begin() + 1, tokens.end());
      } else if (key == ".type") {
        if (tokens.size() != 2 || (tokens[1] != "fd" && tokens[1] != "f")) {
          throw SyntaxError(line_no, "unsupported .type (only f and fd are accepted)");
        }
      } else {
        throw SyntaxError(line_no, "unsupported directive " + std::string(key));
      }
      continue;
    }

    if (!have_inputs || !have_outputs) {
      throw SyntaxError(line_no, "cube before .i and .o");
    }
    if (tokens.size() != 2) {
      throw SyntaxError(line_no, "expected '<inputs> <outputs>', got " + std::to_string(tokens.size()) + " fields");
    }
    PlaCube cube{std::string(tokens[0]), std::string(tokens[1]), line_no};
    if (cube.inputs.find_first_not_of("01-") != std::string::npos) {
      throw SyntaxError(line_no, "input pattern may only contain 0, 1 and -");
    }
    if (cube.outputs.find_first_not_of("01-~") != std::string::npos) {
      throw SyntaxError(line_no, "output pattern may only contain 0, 1, - and ~");
    }
    if (cube.inputs.size() != doc.num_inputs) {
      throw WidthError("line " + std::to_string(line_no) + ": input pattern has " +
                       std::to_string(cube.inputs.size()) + " bits, expected " + std::to_string(doc.num_inputs));
    }
    if (cube.outputs.size() != doc.num_outputs) {
      throw WidthError("line " + std::to_string(line_no) + ": output pattern has " +
                       std::to_string(cube.outputs.size()) + " bits, expected " + std::to_string(doc.num_outputs));
    }
    doc.cubes.push_back(std::move(cube));
  }

  if (!have_inputs || !have_outputs) {
    throw SyntaxError(0, "missing .i or .o directive");
  }
  if (doc.declared_cubes && *doc.declared_cubes != doc.cubes.size()) {
    throw SyntaxError(0, ".p declares " + std::to_string(*doc.declared_cubes) + " cubes, found " +
                             std::to_string(doc.cubes.size()));
  }
  if (!doc.input_labels.empty() && doc.input_labels.size() != doc.num_inputs) {
    throw SyntaxError(0, ".ilb has " + std::to_string(doc.input_labels.size()) + " labels for " +
                             std::to_string(doc.num_inputs) + " inputs");
  }
  if (!doc.output_labels.empty() && doc.output_labels.size() != doc.num_outputs) {
    throw SyntaxError(0, ".ob has " + std::to_string(doc.output_labels.size()) + " labels for " +
                             std::to_string(doc.num_outputs) + " outputs");
  }
  return doc;
}

PlaDocument read_pla_document(std::string_view text) {
  std::istringstream in{std::string(text)};
  return read_pla_document(in);
}

ParsedTable expand(const PlaDocument& doc, const ParseOptions& options) {
  const unsigned n = doc.num_inputs;
  const unsigned m = doc.num_outputs;
  if (n > std::min(options.max_inputs, kHardMaxInputs)) {
    throw TooLarge(std::to_string(n) + " inputs exceed the cap of " +
                   std::to_string(std::min(options.max_inputs, kHardMaxInputs)));
  }
  const std::size_t size = std::size_t{1} << n;
  std::vector<std::uint64_t> values(size, 0);
  std::vector<std::uint64_t> specified(size, 0);
  std::vector<bool> covered(size, false);

  for (const auto& cube : doc.cubes) {
    const CubeBits bits = decode(cube);
    for_each_minterm(bits, [&](std::uint64_t minterm) {
      const std::uint64_t both = specified[minterm] & bits.specified;
      if (((values[minterm] ^ bits.ones) & both) != 0) conflict(minterm, n, cube.line);
      values[minterm] |= bits.ones & bits.specified;
      specified[minterm] |= bits.specified;
      covered[minterm] = true;
    });
  }

  const std::uint64_t full = low_mask(m);
  std::size_t uncovered = 0;
  std::size_t resolved = 0;
  for (std::size_t i = 0; i < size; ++i) {
    if (!covered[i]) {
      ++uncovered;
    } else if (specified[i] != full) {
      ++resolved;
    }
  }

  std::vector<std::string> warnings;
  if (uncovered > 0) {
    if (options.strict) throw CoverageError(uncovered_message(uncovered));
    warnings.push_back(uncovered_message(uncovered) + "; defaulted to all-zero outputs");
  }
  if (resolved > 0) warnings.push_back(resolved_warning(resolved));
  return {TruthTable(n, m, std::move(values), options.max_inputs), std::move(warnings)};
}

ParsedAnnotated expand_annotated(const PlaDocument& doc, const ParseOptions& options) {
  if (!doc.annotated()) {
    throw SyntaxError(0, "missing '# ancilla' or '# garbage' annotation");
  }
  const unsigned lines = doc.num_inputs;
  const unsigned a = *doc.ancilla;
  const unsigned g = *doc.garbage;
  if (doc.num_outputs != lines) {
    throw WidthError("an annotated table must be square");
  }
  if (a >= lines || g >= lines) {
    throw WidthError("ancilla/garbage counts leave no original lines");
  }
  const unsigned n = lines - a;
  const unsigned m = lines - g;
  const unsigned cap = std::min(options.max_inputs, kHardMaxInputs);
  if (n > cap) {
    throw TooLarge(std::to_string(n) + " original inputs exceed the cap of " + std::to_string(cap));
  }

  struct Entry {
    std::uint64_t input;
    std::uint64_t ones;
    std::uint64_t specified;
    std::size_t line;
  };
  std::vector<Entry> entries;
  const std::size_t limit = std::size_t{1} << cap;
  for (const auto& cube : doc.cubes) {
    const CubeBits bits = decode(cube);
    for_each_minterm(bits, [&](std::uint64_t minterm) {
      if (entries.size() >= limit) throw TooLarge("annotated table covers more than 2^" + std::to_string(cap) + " rows");
      entries.push_back({minterm, bits.ones & bits.specified, bits.specified, cube.line});
    });
  }
  auto by_input = [](const Entry& l, const Entry& r) { return l.input < r.input; };
  if (!std::is_sorted(entries.begin(), entries.end(), by_input)) {
    std::stable_sort(entries.begin(), entries.end(), by_input);
  }

  std::vector<Entry> merged;
  merged.reserve(entries.size());
  for (const auto& e : entries) {
    if (!merged.empty() && merged.back().input == e.input) {
      auto& prev = merged.back();
      if (((prev.ones ^ e.ones) & prev.specified & e.specified) != 0) conflict(e.input, lines, e.line);
      prev.ones |= e.ones;
      prev.specified |= e.specified;
    } else {
      merged.push_back(e);
    }
  }

  const std::uint64_t full = low_mask(lines);
  std::vector<std::string> warnings;
  const auto resolved = static_cast<std::size_t>(
      std::count_if(merged.begin(), merged.end(), [&](const Entry& e) { return e.specified != full; }));
  if (resolved > 0) warnings.push_back(resolved_warning(resolved));

  std::vector<std::uint64_t> rows;
  rows.reserve(merged.size());
  for (const auto& e : merged) rows.push_back(e.ones);

  if (lines < 64 && merged.size() == (std::size_t{1} << lines)) {
    return {AnnotatedTable(n, m, a, g, std::move(rows), CompletionState::Completed), std::move(warnings)};
  }
  const std::uint64_t ancilla_mask = low_mask(a);
  const bool ancilla_zero =
      std::all_of(merged.begin(), merged.end(), [&](const Entry& e) { return (e.input & ancilla_mask) == 0; });
  if (ancilla_zero && merged.size() == (std::size_t{1} << n)) {
    return {AnnotatedTable(n, m, a, g, std::move(rows), CompletionState::Partial), std::move(warnings)};
  }
  throw CoverageError("annotated table defines " + std::to_string(merged.size()) +
                      " rows; expected every ancilla-zero row or every row");
}

ParsedTable parse_pla(std::istream& in, const ParseOptions& options) {
  return expand(read_pla_document(in), options);
}

ParsedTable parse_pla(std::string_view text, const ParseOptions& options) {
  return expand(read_pla_document(text), options);
}

namespace {

void write_rows(std::ostream& out, std::size_t count, unsigned in_width, unsigned out_width, auto&& row) {
  std::string buf(in_width + out_width + 2, ' ');
  buf.back() = '\n';
  for (std::size_t k = 0; k < count; ++k) {
    const auto [input, output] = row(k);
    for (unsigned b = 0; b < in_width; ++b) buf[b] = ((input >> (in_width - 1 - b)) & 1) ? '1' : '0';
    for (unsigned b = 0; b < out_width; ++b) {
      buf[in_width + 1 + b] = ((output >> (out_width - 1 - b)) & 1) ? '1' : '0';
    }
    out.write(buf.data(), static_cast<std::streamsize>(buf.size()));
  }
}

}  // namespace

void write_pla(std::ostream& out, const AnnotatedTable& table) {
  out << "# parity-preserving reversible specification\n"
      << "# source " << table.original_inputs() << " inputs, " << table.original_outputs() << " outputs\n"
      << "# ancilla " << table.ancilla_count() << '\n'
      << "# garbage " << table.garbage_count() << '\n';
  if (table.ancilla_count() > 0) {
    out << "# constant-0 ancilla inputs follow the source inputs\n";
  }
  if (table.garbage_count() > 0) {
    out << "# garbage outputs follow the source outputs, parity bit last\n";
  }
  out << ".i " << table.lines() << '\n' << ".o " << table.lines() << '\n';
  write_rows(out, table.defined_row_count(), table.lines(), table.lines(), [&](std::size_t k) {
    return std::pair<std::uint64_t, std::uint64_t>{table.input_value(k), table.output_value(k)};
  });
  out << ".e\n";
}

std::string write_pla(const AnnotatedTable& table) {
  std::ostringstream out;
  write_pla(out, table);
  return out.str();
}

void write_pla(std::ostream& out, const TruthTable& table) {
  out << ".i " << table.num_inputs() << '\n' << ".o " << table.num_outputs() << '\n';
  write_rows(out, table.num_rows(), table.num_inputs(), table.num_outputs(), [&](std::size_t k) {
    return std::pair<std::uint64_t, std::uint64_t>{k, table.output_value(k)};
  });
  out << ".e\n";
}

std::string write_pla(const TruthTable& table) {
  std::ostringstream out;
  write_pla(out, table);
  return out.str();
}

namespace {

std::string csv_field(const std::string& text) {
  if (text.find_first_of(",\"\n") == std::string::npos) return text;
  std::string quoted = "\"";
  for (char c : text) {
    if (c == '"') quoted += '"';
    quoted += c;
  }
  return quoted + '"';
}

std::string runtime_text(double ms) {
  std::ostringstream s;
  s << std::fixed << std::setprecision(3) << ms;
  return s.str();
}

void write_csv_row(std::ostream& out, const ConversionReport& r) {
  out << csv_field(r.name) << ',' << r.inputs << ',' << r.outputs << ',' << r.garbage << ',' << r.ancilla << ','
      << runtime_text(r.runtime_ms) << ',' << std::boolalpha << r.reversible << ',' << r.parity_preserving << ','
      << std::noboolalpha << r.bound << '\n';
}

}  // namespace

void write_report(std::ostream& out, const ConversionReport& r, ReportFormat format) {
  if (format == ReportFormat::Csv) {
    out << kReportCsvHeader << '\n';
    write_csv_row(out, r);
    return;
  }
  out << "name=" << r.name << '\n'
      << "inputs=" << r.inputs << '\n'
      << "outputs=" << r.outputs << '\n'
      << "garbage=" << r.garbage << '\n'
      << "ancilla=" << r.ancilla << '\n'
      << "runtime_ms=" << runtime_text(r.runtime_ms) << '\n'
      << std::boolalpha << "reversible=" << r.reversible << '\n'
      << "parity_preserving=" << r.parity_preserving << '\n'
      << std::noboolalpha << "bound=" << r.bound << '\n';
}

std::string write_report(const ConversionReport& report, ReportFormat format) {
  std::ostringstream out;
  write_report(out, report, format);
  return out.str();
}

void write_csv(std::ostream& out, std::span<const ConversionReport> reports) {
  out << kReportCsvHeader << '\n';
  for (const auto& r : reports) write_csv_row(out, r);
}

}  // namespace pprev
