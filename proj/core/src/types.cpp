#include "sympyr/types.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "sympyr/error.hpp"

namespace sympyr {

const char* to_string(VariableKind kind) {
  switch (kind) {
    case VariableKind::Interval:
      return "interval";
    case VariableKind::Categorical:
      return "categorical";
    case VariableKind::Modal:
      return "modal";
  }
  return "?";
}

int VariableSchema::label_index(const std::string& label) const {
  for (int i = 0; i < static_cast<int>(labels.size()); ++i) {
    if (labels[i] == label) return i;
  }
  return -1;
}

void Schema::validate() const {
  if (variables.empty()) {
    throw DataError("schema must declare at least one variable");
  }
  for (const auto& var : variables) {
    if (var.kind == VariableKind::Interval) {
      if (!(var.lo < var.hi) || !std::isfinite(var.lo) || !std::isfinite(var.hi)) {
        throw DataError("variable '" + var.name + "': interval domain must satisfy lo < hi");
      }
    } else {
      if (var.labels.empty()) {
        throw DataError("variable '" + var.name + "': domain must list at least one category");
      }
      std::set<std::string> seen;
      for (const auto& label : var.labels) {
        if (!seen.insert(label).second) {
          throw DataError("variable '" + var.name + "': duplicate category '" + label + "'");
        }
      }
    }
  }
}

bool approx_equal(const Schema& schema, const Description& a, const Description& b) {
  if (a.cells.size() != b.cells.size()) return false;
  for (int j = 0; j < schema.variable_count(); ++j) {
    switch (schema.variables[j].kind) {
      case VariableKind::Interval: {
        const auto& x = std::get<IntervalCell>(a.cells[j]);
        const auto& y = std::get<IntervalCell>(b.cells[j]);
        if (std::abs(x.lo - y.lo) > kTol || std::abs(x.hi - y.hi) > kTol) return false;
        break;
      }
      case VariableKind::Categorical: {
        if (std::get<CategoryCell>(a.cells[j]).labels != std::get<CategoryCell>(b.cells[j]).labels)
          return false;
        break;
      }
      case VariableKind::Modal: {
        const auto& x = std::get<ModalCell>(a.cells[j]).weights;
        const auto& y = std::get<ModalCell>(b.cells[j]).weights;
        if (x.size() != y.size()) return false;
        for (size_t q = 0; q < x.size(); ++q) {
          if (std::abs(x[q] - y[q]) > kTol) return false;
        }
        break;
      }
    }
  }
  return true;
}

void validate_cell(const VariableSchema& var, const Cell& cell, const std::string& context) {
  const std::string where = context + ", variable '" + var.name + "'";
  switch (var.kind) {
    case VariableKind::Interval: {
      const auto* iv = std::get_if<IntervalCell>(&cell);
      if (!iv) throw DataError(where + ": expected an interval cell");
      if (!(iv->lo <= iv->hi)) throw DataError(where + ": interval reversed (lo > hi)");
      if (iv->lo < var.lo - kTol || iv->hi > var.hi + kTol) {
        throw DataError(where + ": interval outside the domain");
      }
      break;
    }
    case VariableKind::Categorical: {
      const auto* cs = std::get_if<CategoryCell>(&cell);
      if (!cs) throw DataError(where + ": expected a category-set cell");
      if (cs->labels.empty()) throw DataError(where + ": category set must be non-empty");
      if (!std::is_sorted(cs->labels.begin(), cs->labels.end())) {
        throw DataError(where + ": category indices must be sorted");
      }
      if (std::adjacent_find(cs->labels.begin(), cs->labels.end()) != cs->labels.end()) {
        throw DataError(where + ": duplicate category index");
      }
      for (int idx : cs->labels) {
        if (idx < 0 || idx >= var.category_count()) {
          throw DataError(where + ": category index outside the domain");
        }
      }
      break;
    }
    case VariableKind::Modal: {
      const auto* md = std::get_if<ModalCell>(&cell);
      if (!md) throw DataError(where + ": expected a modal cell");
      if (static_cast<int>(md->weights.size()) != var.category_count()) {
        throw DataError(where + ": modal cell must carry one weight per domain category");
      }
      for (size_t q = 0; q < md->weights.size(); ++q) {
        const double w = md->weights[q];
        if (!(w >= 0.0 && w <= 1.0)) {
          throw DataError(where + ", label '" + var.labels[q] + "': weight " +
                          std::to_string(w) + " outside [0,1]");
        }
      }
      break;
    }
  }
}

void validate_description(const Schema& schema, const Description& d, const std::string& context) {
  if (static_cast<int>(d.cells.size()) != schema.variable_count()) {
    throw DataError(context + ": expected " + std::to_string(schema.variable_count()) +
                    " cells, got " + std::to_string(d.cells.size()));
  }
  for (int j = 0; j < schema.variable_count(); ++j) {
    validate_cell(schema.variables[j], d.cells[j], context);
  }
}

SymbolicDataTable::SymbolicDataTable(Schema schema, std::vector<Description> rows) {
  schema.validate();
  if (rows.empty()) {
    throw DataError("table must contain at least one row");
  }
  schema_ = std::make_shared<const Schema>(std::move(schema));
  for (size_t i = 0; i < rows.size(); ++i) {
    validate_description(*schema_, rows[i], "row " + std::to_string(i + 1));
  }
  rows_ = std::move(rows);
}

const Description& SymbolicDataTable::row(int id) const {
  if (id < 1 || id > row_count()) {
    throw UsageError("row id " + std::to_string(id) + " outside 1.." + std::to_string(row_count()));
  }
  return rows_[static_cast<size_t>(id - 1)];
}

}  // namespace sympyr
