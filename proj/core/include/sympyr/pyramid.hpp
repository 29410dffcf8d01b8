#pragma once

#include <optional>
#include <set>
#include <unordered_map>
#include <vector>

#include "sympyr/symbolic.hpp"

namespace sympyr {

// A cluster as a subset of the base row ids.
using MemberSet = std::set<int>;

// One output record: node id, its two children (0 for terminal nodes) and
// the index value f (generality of the node's object; 0 for terminals).
struct NodeQuadruple {
  int id = 0;
  int left = 0;
  int right = 0;
  double f = 0.0;

  bool terminal() const { return left == 0 && right == 0; }
};

// A block of base rows carrying a total order, stored as an explicit
// arrangement. `nodes` lists the global ids of every node created so far
// whose member set lies inside this block.
class ConnectedComponent {
 public:
  ConnectedComponent(int id, std::vector<int> sequence);

  int id() const { return id_; }
  int size() const { return static_cast<int>(sequence_.size()); }
  const std::vector<int>& sequence() const { return sequence_; }
  const std::set<int>& nodes() const { return nodes_; }
  void add_node(int beta) { nodes_.insert(beta); }
  void add_nodes(const std::set<int>& betas) { nodes_.insert(betas.begin(), betas.end()); }

  bool contains_row(int row) const { return positions_.count(row) > 0; }
  // Position of a row in the arrangement; throws UsageError if absent.
  int position(int row) const;

  // Positions of the smallest and largest member under the component order.
  struct Span {
    int lo = 0;
    int hi = 0;
  };
  Span span(const MemberSet& members) const;
  int min_row(const MemberSet& members) const { return sequence_[span(members).lo]; }
  int max_row(const MemberSet& members) const { return sequence_[span(members).hi]; }

 private:
  int id_;
  std::vector<int> sequence_;
  std::unordered_map<int, int> positions_;
  std::set<int> nodes_;
};

// Order-relative relations, local to one component. All arguments must be
// non-empty subsets of the component's sequence.
bool is_interior(const MemberSet& g1, const MemberSet& g2, const ConnectedComponent& c);
bool is_left_of(const MemberSet& g1, const MemberSet& g2, const ConnectedComponent& c);
bool strictly_left_of(const MemberSet& g1, const MemberSet& g2, const ConnectedComponent& c);
bool strictly_right_of(const MemberSet& g2, const MemberSet& g1, const ConnectedComponent& c);

// Inclusion-maximal sets of `family`, enumerated left to right under the
// component order.
std::vector<MemberSet> maximal_nodes(const std::vector<MemberSet>& family,
                                     const ConnectedComponent& c);

// The maximal node that is to the left of g, is maximal, and shares g's
// maximum; nullopt when no maximal node qualifies.
std::optional<MemberSet> left_maximal_node(const MemberSet& g,
                                           const std::vector<MemberSet>& maximals,
                                           const ConnectedComponent& c);

// The maximal node following g's left-maximal node in the left-to-right
// enumeration; nullopt when g's left-maximal node is last or absent.
std::optional<MemberSet> next_maximal_node(const MemberSet& g,
                                           const std::vector<MemberSet>& maximals,
                                           const ConnectedComponent& c);

// Everything the aggregation predicate needs to know about one component:
// the arrangement, the member sets of all created nodes inside it, and the
// maximal nodes of that family.
struct ComponentContext {
  const ConnectedComponent* component = nullptr;
  std::vector<MemberSet> family;
  std::vector<MemberSet> maximals;
};

ComponentContext make_component_context(const ConnectedComponent& c,
                                        std::vector<MemberSet> family);

bool is_interior_to_any(const MemberSet& g, const ComponentContext& ctx);

// Ordered aggregation test. Nodes in different components aggregate when
// each touches an end of its component; nodes in the same component follow
// the maximal-node overlap rule (g1 hangs on the right end of its left
// maximal node, g2 on the left end of the next one). False whenever either
// node is interior to an existing node.
bool aggregable(const MemberSet& g1, const ComponentContext& c1, const MemberSet& g2,
                const ComponentContext& c2);

// The quadruple (alpha, beta, s, ell) of a node still eligible for merging,
// plus the bookkeeping the engine carries with it.
struct ActiveNode {
  int alpha = 0;           // 1-based position among the active nodes
  int beta = 0;            // global node id
  SymbolicObject object;   // s
  int ell = 0;             // times aggregated, <= 2
  MemberSet members;       // covered base rows
  MemberSet extent;        // extent of `object` over the input table
  int component = 0;       // current component id
};

// Active iff some partner aggregates with it (in either order), it is not
// interior to any node, and it has been aggregated at most once.
bool is_active(const ActiveNode& g, const std::vector<ActiveNode>& candidates,
               const std::unordered_map<int, ComponentContext>& contexts);

// Arrangement of a merged component: the four orientation cases keyed by
// which end of its component each merge partner touches (g1 must touch an
// end of c1, g2 of c2).
std::vector<int> merged_sequence(const ConnectedComponent& c1, const MemberSet& g1,
                                 const ConnectedComponent& c2, const MemberSet& g2);

// The finished artifact: quadruples in creation order (node id = index + 1),
// the node objects and extents, and the discovered (or given) total order.
struct PyramidStructure {
  std::vector<NodeQuadruple> quadruples;
  std::vector<SymbolicObject> objects;
  std::vector<MemberSet> extents;
  std::vector<int> final_order;

  int node_count() const { return static_cast<int>(quadruples.size()); }
  const NodeQuadruple& quadruple(int id) const { return quadruples.at(id - 1); }
  const SymbolicObject& object(int id) const { return objects.at(id - 1); }
  const MemberSet& extent(int id) const { return extents.at(id - 1); }

  // Member sets reconstructed from the quadruples alone: {id} for terminal
  // nodes, the union of the children's member sets otherwise.
  std::vector<MemberSet> member_sets() const;
};

}  // namespace sympyr
