#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "sympyr/pyramid.hpp"

namespace sympyr {

struct PyramidResult {
  std::optional<PyramidStructure> pyramid;  // engaged on success
  std::string error;                        // non-empty on failure
  int iterations = 0;                       // final value of h

  bool ok() const { return pyramid.has_value(); }
};

// Full working state of one construction run. Exposed so the phases can be
// driven and inspected individually; run_caps/run_capso wrap the loop.
struct EngineState {
  SymbolicDataTable table;
  int h = 1;   // iteration counter
  int NG = 0;  // nodes created so far
  int NC = 0;  // component count
  int NP = 0;  // active node count
  int M = 0;   // iteration budget
  std::vector<ActiveNode> G;
  std::vector<ConnectedComponent> C;
  std::vector<std::vector<double>> D;  // NP x NP, D[i][j] = G(s_i U s_j)
  std::vector<std::vector<char>> B;    // NP x NP aggregability
  PyramidStructure out;                // grows as nodes are accepted
  std::vector<MemberSet> members;      // member set per created node, beta-1
  std::map<std::pair<int, int>, double> pair_cache;  // beta pair -> G(union)
  int next_component_id = 0;

  ConnectedComponent& component(int id);
  const ConnectedComponent& component(int id) const;
};

// Iteration budget that can never cut a run short: one merge per pair plus
// one per row.
int default_max_iterations(int n);

// CAPS initialization: N terminal quadruples, N singleton components, N
// active nodes, D filled with pairwise union generalities.
EngineState initialize(const SymbolicDataTable& table, int max_iterations);

// CAPSO initialization: identical except a single component whose sequence
// is the given order. Throws UsageError unless order is a permutation of
// 1..N.
EngineState initialize(const SymbolicDataTable& table, const std::vector<int>& order,
                       int max_iterations);

// Recomputes B from the aggregation conditions (with interior-node zeroing)
// and drops every active node whose row is all zero, shrinking D/B in step.
void elimination_phase(EngineState& st);

struct MergeSelection {
  int i_alpha = 0;  // positions in G at selection time, 1-based
  int j_alpha = 0;
  int left_beta = 0;
  int right_beta = 0;
  int new_beta = 0;
  double index_value = 0.0;
};

// Picks the aggregable pair with minimal dissimilarity (ties broken by
// global node ids), accepts it when its union is complete and extent-
// additive, and appends the new node to the output. Rejected pairs have
// their B entry zeroed and selection repeats; nullopt when B is exhausted.
std::optional<MergeSelection> formation_phase(EngineState& st);

// Advances h, merges/orients components when the parents lived in different
// ones, installs the new active node, bumps the parents' aggregation counts
// (removing those that reach two), and refills D.
void update_phase(EngineState& st, const MergeSelection& sel);

PyramidResult run_caps(const SymbolicDataTable& table, int max_iterations);
PyramidResult run_capso(const SymbolicDataTable& table, const std::vector<int>& order,
                        int max_iterations);

}  // namespace sympyr
