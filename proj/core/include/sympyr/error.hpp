#pragma once

#include <stdexcept>
#include <string>

namespace sympyr {

// Caller misuse: bad arguments, out-of-range parameters, malformed orders.
class UsageError : public std::invalid_argument {
 public:
  explicit UsageError(const std::string& what) : std::invalid_argument(what) {}
};

// Malformed or inconsistent data: schema violations, cells that do not
// conform, documents that fail structural checks.
class DataError : public std::runtime_error {
 public:
  explicit DataError(const std::string& what) : std::runtime_error(what) {}
};

// Document-level syntax error with a position hint (line/field).
class ParseError : public DataError {
 public:
  explicit ParseError(const std::string& what) : DataError(what) {}
};

}  // namespace sympyr
