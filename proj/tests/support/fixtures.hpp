#pragma once

// Shared test fixtures: the six-row example table and small cell builders.

#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "sympyr/types.hpp"

namespace fixtures {

inline sympyr::Cell iv(double lo, double hi) { return sympyr::IntervalCell{lo, hi}; }

// category cell from 1-based label numbers (labels are "1".."k")
inline sympyr::Cell cats(std::initializer_list<int> labels) {
  sympyr::CategoryCell c;
  for (int l : labels) c.labels.push_back(l - 1);
  return c;
}

// modal cell over a k-label domain from 1-based (label, weight) pairs
inline sympyr::Cell modal(int k, std::initializer_list<std::pair<int, double>> weights) {
  sympyr::ModalCell c;
  c.weights.assign(static_cast<size_t>(k), 0.0);
  for (const auto& [label, w] : weights) c.weights[static_cast<size_t>(label - 1)] = w;
  return c;
}

inline std::vector<std::string> numbered_labels(int k) {
  std::vector<std::string> out;
  for (int i = 1; i <= k; ++i) out.push_back(std::to_string(i));
  return out;
}

// The six-row, five-variable example table: y1 interval on [1,6], y2
// categorical on {1,2,3}, y3 modal on {1..7}, y4/y5 modal on {1,2}.
inline sympyr::SymbolicDataTable example_table() {
  sympyr::Schema schema;
  schema.variables.push_back({"y1", sympyr::VariableKind::Interval, 1.0, 6.0, {}});
  schema.variables.push_back({"y2", sympyr::VariableKind::Categorical, 0, 0, numbered_labels(3)});
  schema.variables.push_back({"y3", sympyr::VariableKind::Modal, 0, 0, numbered_labels(7)});
  schema.variables.push_back({"y4", sympyr::VariableKind::Modal, 0, 0, numbered_labels(2)});
  schema.variables.push_back({"y5", sympyr::VariableKind::Modal, 0, 0, numbered_labels(2)});

  std::vector<sympyr::Description> rows;
  rows.push_back({{iv(1, 4), cats({2}),
                   modal(7, {{1, 0.4}, {2, 0.1}, {3, 0.2}, {4, 0.07}, {5, 0.02}}),
                   modal(2, {{1, 0.1}, {2, 0.9}}), modal(2, {{1, 0.7}, {2, 0.2}})}});
  rows.push_back({{iv(1, 4), cats({3}), modal(7, {{1, 0.6}, {2, 0.1}, {3, 0.1}, {5, 0.0}}),
                   modal(2, {{1, 0.1}, {2, 0.9}}), modal(2, {{1, 0.7}, {2, 0.2}})}});
  rows.push_back({{iv(1, 5), cats({2}), modal(7, {{1, 0.7}, {2, 0.2}}),
                   modal(2, {{2, 0.9}}), modal(2, {{1, 0.7}, {2, 0.2}})}});
  rows.push_back({{iv(1, 4), cats({1}), modal(7, {{1, 0.7}, {3, 0.1}}),
                   modal(2, {{2, 0.9}}), modal(2, {{1, 0.7}, {2, 0.2}})}});
  rows.push_back({{iv(1, 4), cats({1}), modal(7, {{1, 0.4}, {3, 0.4}}),
                   modal(2, {{2, 0.9}}), modal(2, {{1, 0.8}, {2, 0.1}})}});
  rows.push_back({{iv(1, 6), cats({2}), modal(7, {{2, 0.4}, {3, 0.1}, {4, 0.3}}),
                   modal(2, {{2, 0.9}}), modal(2, {{1, 0.7}, {2, 0.2}})}});

  return sympyr::SymbolicDataTable(std::move(schema), std::move(rows));
}

// Three rows over one categorical variable on {1,2,3}: every pairwise union
// covers all three rows, so no merge is ever extent-additive and both
// algorithms must fail cleanly.
inline sympyr::SymbolicDataTable unmergeable_table() {
  sympyr::Schema schema;
  schema.variables.push_back({"y", sympyr::VariableKind::Categorical, 0, 0, numbered_labels(3)});
  std::vector<sympyr::Description> rows;
  rows.push_back({{cats({1, 2})}});
  rows.push_back({{cats({2, 3})}});
  rows.push_back({{cats({1, 3})}});
  return sympyr::SymbolicDataTable(std::move(schema), std::move(rows));
}

}  // namespace fixtures
