#include "rwind/io.hpp"

#include <charconv>
#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>

#include <json.hpp>

#include "rwind/error.hpp"

namespace rwind {

namespace {

std::int64_t parse_int(std::string_view text, const char* what) {
  std::int64_t value = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size() || text.empty())
    throw Error(ErrorKind::ParseError, std::string("bad ") + what + " '" + std::string(text) + "'");
  return value;
}

double parse_double(const std::string& text) {
  std::size_t used = 0;
  double value = 0.0;
  try {
    value = std::stod(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != text.size() || text.empty()) throw Error(ErrorKind::ParseError, "bad length '" + text + "'");
  return value;
}

GeodesicRecord checked_record(const std::vector<std::int64_t>& entries, std::int64_t trace, double length, std::int64_t psi) {
  try {
    validate_word(entries);
  } catch (const Error& e) {
    throw Error(ErrorKind::ParseError, e.what());
  }
  CyclicWord word = canonical_form(entries);
  if (word.entries() != entries) throw Error(ErrorKind::ParseError, "word " + word.str() + " not in canonical rotation");
  GeodesicRecord expected = make_record(word);
  if (expected.trace != trace || expected.psi != psi)
    throw Error(ErrorKind::ParseError, "trace or psi inconsistent with word " + word.str());
  expected.length = length;
  return expected;
}

}  // namespace

std::string format_real(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

void write_csv(std::ostream& out, std::span<const GeodesicRecord> records) {
  out << kCsvHeader << '\n';
  for (const auto& rec : records)
    out << rec.word.str() << ',' << rec.trace << ',' << format_real(rec.length) << ',' << rec.psi << '\n';
}

void write_json(std::ostream& out, std::span<const GeodesicRecord> records) {
  // Assembled by hand so the length keeps the CSV formatting.
  out << '[';
  for (std::size_t i = 0; i < records.size(); ++i) {
    const auto& rec = records[i];
    out << (i ? ",\n" : "\n") << "{\"word\":" << nlohmann::json(rec.word.entries()).dump() << ",\"trace\":" << rec.trace
        << ",\"length\":" << format_real(rec.length) << ",\"psi\":" << rec.psi << '}';
  }
  out << (records.empty() ? "]\n" : "\n]\n");
}

std::vector<std::int64_t> parse_word(const std::string& text) {
  std::vector<std::int64_t> entries;
  std::size_t start = 0;
  while (true) {
    const std::size_t dash = text.find('-', start);
    entries.push_back(parse_int(std::string_view(text).substr(start, dash - start), "word entry"));
    if (dash == std::string::npos) break;
    start = dash + 1;
  }
  return entries;
}

std::vector<GeodesicRecord> read_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line) || line != kCsvHeader) throw Error(ErrorKind::ParseError, "missing CSV header");
  std::vector<GeodesicRecord> records;
  while (std::getline(in, line)) {
    std::vector<std::string> cells;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) cells.push_back(cell);
    if (cells.size() != 4) throw Error(ErrorKind::ParseError, "expected 4 cells in '" + line + "'");
    records.push_back(checked_record(parse_word(cells[0]), parse_int(cells[1], "trace"), parse_double(cells[2]),
                                     parse_int(cells[3], "psi")));
  }
  return records;
}

std::vector<GeodesicRecord> read_json(std::istream& in) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::ParseError, e.what());
  }
  if (!doc.is_array()) throw Error(ErrorKind::ParseError, "expected a top-level array");
  std::vector<GeodesicRecord> records;
  for (const auto& item : doc) {
    try {
      if (!item.is_object() || item.size() != 4) throw Error(ErrorKind::ParseError, "expected object with 4 keys");
      records.push_back(checked_record(item.at("word").get<std::vector<std::int64_t>>(), item.at("trace").get<std::int64_t>(),
                                       item.at("length").get<double>(), item.at("psi").get<std::int64_t>()));
    } catch (const nlohmann::json::exception& e) {
      throw Error(ErrorKind::ParseError, e.what());
    }
  }
  return records;
}

}  // namespace rwind
