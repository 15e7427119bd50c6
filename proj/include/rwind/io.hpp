#pragma once

// CSV and JSON serialization of geodesic records.
//
// CSV: header "word,trace,length,psi", words dash-joined, lengths with 12
// significant digits, LF line endings. JSON: top-level array of objects with
// keys word (array of integers), trace, length, psi.

#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "rwind/geodesics.hpp"

namespace rwind {

inline constexpr const char* kCsvHeader = "word,trace,length,psi";

std::string format_real(double x);

void write_csv(std::ostream& out, std::span<const GeodesicRecord> records);
void write_json(std::ostream& out, std::span<const GeodesicRecord> records);

// Parsers check that every word is canonical and consistent with its trace
// and psi. Throw ParseError.
std::vector<GeodesicRecord> read_csv(std::istream& in);
std::vector<GeodesicRecord> read_json(std::istream& in);

// "3-7" -> {3, 7}. Throws ParseError.
std::vector<std::int64_t> parse_word(const std::string& text);

}  // namespace rwind
