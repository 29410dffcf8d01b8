#include "sympyr/symbolic.hpp"

#include <algorithm>
#include <cmath>

#include "sympyr/error.hpp"

namespace sympyr {

SymbolicObject::SymbolicObject(std::shared_ptr<const Schema> schema, Description description)
    : schema_(std::move(schema)), description_(std::move(description)) {
  if (!schema_) throw UsageError("symbolic object requires a schema");
  validate_description(*schema_, description_, "symbolic object");
}

namespace {

std::vector<int> union_sorted(const std::vector<int>& a, const std::vector<int>& b) {
  std::vector<int> out;
  out.reserve(a.size() + b.size());
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

void check_conforms(const Schema& schema, const Description& d, const char* what) {
  if (static_cast<int>(d.cells.size()) != schema.variable_count()) {
    throw DataError(std::string(what) + ": description does not match the schema");
  }
}

}  // namespace

Description generalize(const Schema& schema, const std::vector<Description>& descriptions) {
  if (descriptions.empty()) {
    throw UsageError("generalize: need at least one description");
  }
  for (const auto& d : descriptions) check_conforms(schema, d, "generalize");

  Description out = descriptions.front();
  for (size_t i = 1; i < descriptions.size(); ++i) {
    const Description& d = descriptions[i];
    for (int j = 0; j < schema.variable_count(); ++j) {
      switch (schema.variables[j].kind) {
        case VariableKind::Interval: {
          auto& acc = std::get<IntervalCell>(out.cells[j]);
          const auto& next = std::get<IntervalCell>(d.cells[j]);
          acc.lo = std::min(acc.lo, next.lo);
          acc.hi = std::max(acc.hi, next.hi);
          break;
        }
        case VariableKind::Categorical: {
          auto& acc = std::get<CategoryCell>(out.cells[j]);
          acc.labels = union_sorted(acc.labels, std::get<CategoryCell>(d.cells[j]).labels);
          break;
        }
        case VariableKind::Modal: {
          auto& acc = std::get<ModalCell>(out.cells[j]).weights;
          const auto& next = std::get<ModalCell>(d.cells[j]).weights;
          for (size_t q = 0; q < acc.size(); ++q) acc[q] = std::max(acc[q], next[q]);
          break;
        }
      }
    }
  }
  return out;
}

bool contains(const Schema& schema, const Description& outer, const Description& inner) {
  check_conforms(schema, outer, "contains");
  check_conforms(schema, inner, "contains");
  for (int j = 0; j < schema.variable_count(); ++j) {
    switch (schema.variables[j].kind) {
      case VariableKind::Interval: {
        const auto& o = std::get<IntervalCell>(outer.cells[j]);
        const auto& i = std::get<IntervalCell>(inner.cells[j]);
        if (i.lo < o.lo - kTol || i.hi > o.hi + kTol) return false;
        break;
      }
      case VariableKind::Categorical: {
        const auto& o = std::get<CategoryCell>(outer.cells[j]).labels;
        const auto& i = std::get<CategoryCell>(inner.cells[j]).labels;
        if (!std::includes(o.begin(), o.end(), i.begin(), i.end())) return false;
        break;
      }
      case VariableKind::Modal: {
        const auto& o = std::get<ModalCell>(outer.cells[j]).weights;
        const auto& i = std::get<ModalCell>(inner.cells[j]).weights;
        for (size_t q = 0; q < o.size(); ++q) {
          if (i[q] > o[q] + kTol) return false;
        }
        break;
      }
    }
  }
  return true;
}

double degree_of_generality(const Schema& schema, const Description& d) {
  check_conforms(schema, d, "degree_of_generality");
  double g = 1.0;
  for (int j = 0; j < schema.variable_count(); ++j) {
    const auto& var = schema.variables[j];
    switch (var.kind) {
      case VariableKind::Interval: {
        const auto& cell = std::get<IntervalCell>(d.cells[j]);
        g *= (cell.hi - cell.lo) / var.length();
        break;
      }
      case VariableKind::Categorical: {
        const auto& cell = std::get<CategoryCell>(d.cells[j]);
        g *= static_cast<double>(cell.labels.size()) / var.category_count();
        break;
      }
      case VariableKind::Modal: {
        const auto& cell = std::get<ModalCell>(d.cells[j]);
        double sum = 0.0;
        for (double w : cell.weights) sum += w;
        g *= sum / var.category_count();
        break;
      }
    }
  }
  return g;
}

double degree_of_generality(const SymbolicObject& s) {
  return degree_of_generality(s.schema(), s.description());
}

double match_degree(const Schema& schema, const Description& s, const Description& w) {
  check_conforms(schema, s, "match_degree");
  check_conforms(schema, w, "match_degree");
  double score = 1.0;
  for (int j = 0; j < schema.variable_count(); ++j) {
    double var_score = 1.0;
    switch (schema.variables[j].kind) {
      case VariableKind::Interval: {
        const auto& o = std::get<IntervalCell>(s.cells[j]);
        const auto& i = std::get<IntervalCell>(w.cells[j]);
        var_score = (i.lo >= o.lo - kTol && i.hi <= o.hi + kTol) ? 1.0 : 0.0;
        break;
      }
      case VariableKind::Categorical: {
        const auto& o = std::get<CategoryCell>(s.cells[j]).labels;
        const auto& i = std::get<CategoryCell>(w.cells[j]).labels;
        var_score = std::includes(o.begin(), o.end(), i.begin(), i.end()) ? 1.0 : 0.0;
        break;
      }
      case VariableKind::Modal: {
        const auto& o = std::get<ModalCell>(s.cells[j]).weights;
        const auto& i = std::get<ModalCell>(w.cells[j]).weights;
        bool dominated = true;
        double sum_w = 0.0;
        double sum_min = 0.0;
        for (size_t q = 0; q < o.size(); ++q) {
          if (i[q] > o[q] + kTol) dominated = false;
          sum_w += i[q];
          sum_min += std::min(i[q], o[q]);
        }
        if (dominated || sum_w == 0.0) {
          var_score = 1.0;
        } else {
          var_score = sum_min / sum_w;
        }
        break;
      }
    }
    score = std::min(score, var_score);
    if (score == 0.0) break;
  }
  return score;
}

double match_degree(const SymbolicObject& s, const Description& w) {
  return match_degree(s.schema(), s.description(), w);
}

SymbolicObject generalize_rows(const SymbolicDataTable& table, const std::set<int>& row_ids) {
  if (row_ids.empty()) throw UsageError("generalize_rows: need at least one row id");
  std::vector<Description> ds;
  ds.reserve(row_ids.size());
  for (int id : row_ids) ds.push_back(table.row(id));
  return SymbolicObject(table.schema_ptr(), generalize(table.schema(), ds));
}

std::set<int> extent_boolean(const SymbolicObject& s, const SymbolicDataTable& table) {
  std::set<int> out;
  for (int id = 1; id <= table.row_count(); ++id) {
    if (contains(table.schema(), s.description(), table.row(id))) out.insert(id);
  }
  return out;
}

std::set<int> extent_modal(const SymbolicObject& s, const SymbolicDataTable& table, double alpha) {
  if (!(alpha >= 0.0 && alpha <= 1.0)) {
    throw UsageError("extent_modal: alpha must lie in [0,1]");
  }
  std::set<int> out;
  for (int id = 1; id <= table.row_count(); ++id) {
    if (match_degree(s, table.row(id)) >= alpha) out.insert(id);
  }
  return out;
}

bool is_complete(const SymbolicObject& s, const SymbolicDataTable& table) {
  const std::set<int> ext = extent_boolean(s, table);
  if (ext.empty()) return false;
  std::vector<Description> ds;
  ds.reserve(ext.size());
  for (int id : ext) ds.push_back(table.row(id));
  return approx_equal(table.schema(), s.description(), generalize(table.schema(), ds));
}

}  // namespace sympyr
