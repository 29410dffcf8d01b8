#pragma once

#include <optional>
#include <string>

#include "sympyr/pyramid.hpp"
#include "sympyr/validate.hpp"

namespace sympyr {

// Parses a table document:
//   {"variables":[{"name","kind","domain"}...],
//    "rows":[{"id",,"cells":[...]}...]}
// kind is "interval" | "categorical" | "modal"; domain is [lo,hi] for
// intervals and a label list otherwise; cells are [a,b], ["label",...] or
// {"label": weight}. Throws ParseError/DataError with the offending row,
// variable and label named.
SymbolicDataTable parse_table(const std::string& text);

struct PyramidMeta {
  std::string algorithm;  // "caps" | "capso"
  int iterations = 0;
  std::optional<double> alpha;  // when set, nodes carry modal extents too
};

// Serializes a pyramid document: {"meta","order","nodes"} with one node
// object per quadruple. Real numbers are rounded to 12 significant digits,
// so emitting a parsed document is byte-stable.
std::string emit_pyramid(const PyramidStructure& result, const SymbolicDataTable& table,
                         const PyramidMeta& meta);

struct ParsedPyramid {
  PyramidStructure structure;
  PyramidMeta meta;
};

// Inverse of emit_pyramid; needs the table for the schema.
ParsedPyramid parse_pyramid(const std::string& text, const SymbolicDataTable& table);

// DOT rendering: terminal nodes share one rank listed in final order; each
// internal node points at its two children with edges labeled f(p) to four
// decimals.
std::string emit_dot(const PyramidStructure& result);

// Machine-readable form of a validation report.
std::string emit_validation_json(const ValidationReport& report);

}  // namespace sympyr
