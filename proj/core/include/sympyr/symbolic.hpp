#pragma once

#include <memory>
#include <set>
#include <vector>

#include "sympyr/types.hpp"

namespace sympyr {

// An assertion object: a description vector with the per-variable relation
// fixed to containment. All operations are pure; objects are immutable and
// safe to share across threads.
class SymbolicObject {
 public:
  SymbolicObject(std::shared_ptr<const Schema> schema, Description description);

  const Schema& schema() const { return *schema_; }
  std::shared_ptr<const Schema> schema_ptr() const { return schema_; }
  const Description& description() const { return description_; }

 private:
  std::shared_ptr<const Schema> schema_;
  Description description_;
};

// Componentwise least general description covering all inputs: convex hull
// for intervals, set union for category sets, per-category maximum for modal
// weights. Associative, commutative, idempotent. Throws UsageError on an
// empty input list.
Description generalize(const Schema& schema, const std::vector<Description>& descriptions);

// true iff inner lies within outer on every variable: interval inclusion,
// category subset, per-category weight dominance.
bool contains(const Schema& schema, const Description& outer, const Description& inner);

// Degree of generality: product over variables of the coverage ratio
// (|V|/|Y| for category sets, length(V)/length(Y) for intervals, mean weight
// for modal cells). Always in [0, 1].
double degree_of_generality(const Schema& schema, const Description& d);
double degree_of_generality(const SymbolicObject& s);

// Matching degree a(w) in [0, 1]: boolean kinds score 1 on containment and 0
// otherwise; modal cells score the overlap ratio sum(min(w,s))/sum(w) when
// not dominated (1 when sum(w)=0). Aggregated by minimum across variables,
// so the result is 1 exactly when contains(s, w) holds.
double match_degree(const Schema& schema, const Description& s, const Description& w);
double match_degree(const SymbolicObject& s, const Description& w);

// Object covering the given rows: generalize of their descriptions.
SymbolicObject generalize_rows(const SymbolicDataTable& table, const std::set<int>& row_ids);

// Row ids whose description is contained in s.
std::set<int> extent_boolean(const SymbolicObject& s, const SymbolicDataTable& table);

// Row ids matching s to degree >= alpha. Throws UsageError unless alpha is
// in [0, 1].
std::set<int> extent_modal(const SymbolicObject& s, const SymbolicDataTable& table, double alpha);

// true iff s describes its extent exhaustively: s equals the generalization
// of the rows it contains (false on an empty extent).
bool is_complete(const SymbolicObject& s, const SymbolicDataTable& table);

}  // namespace sympyr
