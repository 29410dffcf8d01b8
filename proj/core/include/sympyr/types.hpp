#pragma once

#include <memory>
#include <string>
#include <variant>
#include <vector>

namespace sympyr {

// Absolute tolerance for all real comparisons (weights, interval ends,
// generality values). Input data carries at most a few decimals; 1e-9 is far
// below data resolution.
inline constexpr double kTol = 1e-9;

enum class VariableKind { Interval, Categorical, Modal };

const char* to_string(VariableKind kind);

// Per-variable description space: a closed real interval for interval
// variables, a finite ordered label list for categorical and modal ones.
struct VariableSchema {
  std::string name;
  VariableKind kind = VariableKind::Interval;
  double lo = 0.0;                  // interval kind only, lo < hi
  double hi = 0.0;
  std::vector<std::string> labels;  // categorical/modal kinds, unique

  int category_count() const { return static_cast<int>(labels.size()); }
  double length() const { return hi - lo; }
  // Index of a label in the domain, -1 if absent.
  int label_index(const std::string& label) const;
};

struct Schema {
  std::vector<VariableSchema> variables;

  int variable_count() const { return static_cast<int>(variables.size()); }
  // Throws DataError when a domain is ill-formed (zero-length interval,
  // duplicate or empty label list, no variables).
  void validate() const;
};

// One value of an interval variable, [lo, hi] with lo <= hi. Point intervals
// [a, a] are legal and have length 0.
struct IntervalCell {
  double lo = 0.0;
  double hi = 0.0;

  bool operator==(const IntervalCell&) const = default;
};

// Non-empty set of categories, stored as sorted unique indices into the
// variable's label list.
struct CategoryCell {
  std::vector<int> labels;

  bool operator==(const CategoryCell&) const = default;
};

// Weight distribution over the variable's label list; dense, one weight per
// domain label, each in [0, 1].
struct ModalCell {
  std::vector<double> weights;

  bool operator==(const ModalCell&) const = default;
};

using Cell = std::variant<IntervalCell, CategoryCell, ModalCell>;

// A row vector: one cell per variable, in schema order.
struct Description {
  std::vector<Cell> cells;

  bool operator==(const Description&) const = default;
};

// Componentwise equality under kTol (exact on category sets).
bool approx_equal(const Schema& schema, const Description& a, const Description& b);

// Throws DataError unless the cell conforms to the variable's kind and
// domain. `context` prefixes the error message (e.g. "row 3").
void validate_cell(const VariableSchema& var, const Cell& cell, const std::string& context);

// Throws DataError unless the description has one conforming cell per
// variable.
void validate_description(const Schema& schema, const Description& d, const std::string& context);

// The algorithm input: a schema plus N rows of descriptions. Immutable after
// construction; rows are addressed by 1-based ids.
class SymbolicDataTable {
 public:
  SymbolicDataTable(Schema schema, std::vector<Description> rows);

  const Schema& schema() const { return *schema_; }
  std::shared_ptr<const Schema> schema_ptr() const { return schema_; }
  int row_count() const { return static_cast<int>(rows_.size()); }
  const Description& row(int id) const;  // id in 1..N
  const std::vector<Description>& rows() const { return rows_; }

 private:
  std::shared_ptr<const Schema> schema_;
  std::vector<Description> rows_;
};

}  // namespace sympyr
