#include "sympyr/pyramid.hpp"

#include <algorithm>

#include "sympyr/error.hpp"

namespace sympyr {

ConnectedComponent::ConnectedComponent(int id, std::vector<int> sequence)
    : id_(id), sequence_(std::move(sequence)) {
  if (sequence_.empty()) throw UsageError("component needs a non-empty sequence");
  for (int i = 0; i < static_cast<int>(sequence_.size()); ++i) {
    if (!positions_.emplace(sequence_[i], i).second) {
      throw UsageError("component sequence repeats row " + std::to_string(sequence_[i]));
    }
  }
}

int ConnectedComponent::position(int row) const {
  auto it = positions_.find(row);
  if (it == positions_.end()) {
    throw UsageError("row " + std::to_string(row) + " not in component " + std::to_string(id_));
  }
  return it->second;
}

ConnectedComponent::Span ConnectedComponent::span(const MemberSet& members) const {
  if (members.empty()) throw UsageError("span of an empty member set");
  Span s{size(), -1};
  for (int row : members) {
    const int p = position(row);
    s.lo = std::min(s.lo, p);
    s.hi = std::max(s.hi, p);
  }
  return s;
}

bool is_interior(const MemberSet& g1, const MemberSet& g2, const ConnectedComponent& c) {
  if (g1 == g2) return false;
  const auto s1 = c.span(g1);
  const auto s2 = c.span(g2);
  return s2.lo < s1.lo && s1.hi < s2.hi;
}

bool is_left_of(const MemberSet& g1, const MemberSet& g2, const ConnectedComponent& c) {
  const auto s1 = c.span(g1);
  const auto s2 = c.span(g2);
  return s1.lo <= s2.lo && s1.hi <= s2.hi;
}

bool strictly_left_of(const MemberSet& g1, const MemberSet& g2, const ConnectedComponent& c) {
  const auto s1 = c.span(g1);
  const auto s2 = c.span(g2);
  return s1.lo < s2.lo && s1.hi == s2.hi;
}

bool strictly_right_of(const MemberSet& g2, const MemberSet& g1, const ConnectedComponent& c) {
  const auto s1 = c.span(g1);
  const auto s2 = c.span(g2);
  return s1.lo == s2.lo && s1.hi < s2.hi;
}

std::vector<MemberSet> maximal_nodes(const std::vector<MemberSet>& family,
                                     const ConnectedComponent& c) {
  std::vector<std::pair<ConnectedComponent::Span, const MemberSet*>> spans;
  spans.reserve(family.size());
  for (const auto& m : family) spans.emplace_back(c.span(m), &m);

  std::vector<MemberSet> out;
  for (size_t i = 0; i < spans.size(); ++i) {
    bool covered = false;
    for (size_t j = 0; j < spans.size() && !covered; ++j) {
      if (i == j) continue;
      const auto& a = spans[i].first;
      const auto& b = spans[j].first;
      // strict superset; equal spans mean the same set on one sequence
      covered = b.lo <= a.lo && a.hi <= b.hi && (b.lo < a.lo || a.hi < b.hi);
    }
    if (!covered && std::find(out.begin(), out.end(), *spans[i].second) == out.end()) {
      out.push_back(*spans[i].second);
    }
  }
  std::sort(out.begin(), out.end(), [&](const MemberSet& a, const MemberSet& b) {
    return c.span(a).lo < c.span(b).lo;
  });
  return out;
}

namespace {

// Index of g's left-maximal node in the sorted enumeration, or -1.
int left_maximal_index(const MemberSet& g, const std::vector<MemberSet>& maximals,
                       const ConnectedComponent& c) {
  const auto sg = c.span(g);
  for (int m = 0; m < static_cast<int>(maximals.size()); ++m) {
    const auto sm = c.span(maximals[m]);
    if (sm.hi == sg.hi && sm.lo <= sg.lo) return m;
  }
  return -1;
}

}  // namespace

std::optional<MemberSet> left_maximal_node(const MemberSet& g,
                                           const std::vector<MemberSet>& maximals,
                                           const ConnectedComponent& c) {
  const int m = left_maximal_index(g, maximals, c);
  if (m < 0) return std::nullopt;
  return maximals[static_cast<size_t>(m)];
}

std::optional<MemberSet> next_maximal_node(const MemberSet& g,
                                           const std::vector<MemberSet>& maximals,
                                           const ConnectedComponent& c) {
  const int m = left_maximal_index(g, maximals, c);
  if (m < 0 || m + 1 >= static_cast<int>(maximals.size())) return std::nullopt;
  return maximals[static_cast<size_t>(m + 1)];
}

ComponentContext make_component_context(const ConnectedComponent& c,
                                        std::vector<MemberSet> family) {
  ComponentContext ctx;
  ctx.component = &c;
  ctx.maximals = maximal_nodes(family, c);
  ctx.family = std::move(family);
  return ctx;
}

bool is_interior_to_any(const MemberSet& g, const ComponentContext& ctx) {
  const auto sg = ctx.component->span(g);
  // interior to some node iff interior to some maximal node
  for (const auto& m : ctx.maximals) {
    const auto sm = ctx.component->span(m);
    if (sm.lo < sg.lo && sg.hi < sm.hi) return true;
  }
  return false;
}

bool aggregable(const MemberSet& g1, const ComponentContext& c1, const MemberSet& g2,
                const ComponentContext& c2) {
  if (is_interior_to_any(g1, c1) || is_interior_to_any(g2, c2)) return false;

  if (c1.component->id() != c2.component->id()) {
    // Case 2: each node must touch an end of its own component.
    const auto s1 = c1.component->span(g1);
    const auto s2 = c2.component->span(g2);
    const bool t1 = s1.lo == 0 || s1.hi == c1.component->size() - 1;
    const bool t2 = s2.lo == 0 || s2.hi == c2.component->size() - 1;
    return t1 && t2;
  }

  // Case 1: relative to g1's left-maximal node and the next maximal node.
  const ConnectedComponent& c = *c1.component;
  const int m = left_maximal_index(g1, c1.maximals, c);
  if (m < 0 || m + 1 >= static_cast<int>(c1.maximals.size())) return false;
  const auto sl = c.span(c1.maximals[static_cast<size_t>(m)]);
  const auto sr = c.span(c1.maximals[static_cast<size_t>(m + 1)]);
  const auto s1 = c.span(g1);
  const auto s2 = c.span(g2);
  // g1 right of the left maximal, strictly left of the overlap [sr.lo, sl.hi];
  // g2 left of the next maximal, strictly right of the overlap. The same
  // comparisons remain valid when the two maximals merely abut.
  const bool clause1 = s1.hi == sl.hi && s1.lo >= sl.lo && s1.lo < sr.lo;
  const bool clause2 = s2.lo == sr.lo && s2.hi <= sr.hi && s2.hi > sl.hi;
  return clause1 && clause2;
}

bool is_active(const ActiveNode& g, const std::vector<ActiveNode>& candidates,
               const std::unordered_map<int, ComponentContext>& contexts) {
  if (g.ell > 1) return false;
  const ComponentContext& cg = contexts.at(g.component);
  if (is_interior_to_any(g.members, cg)) return false;
  for (const auto& other : candidates) {
    if (other.beta == g.beta) continue;
    const ComponentContext& co = contexts.at(other.component);
    if (aggregable(g.members, cg, other.members, co) ||
        aggregable(other.members, co, g.members, cg)) {
      return true;
    }
  }
  return false;
}

std::vector<int> merged_sequence(const ConnectedComponent& c1, const MemberSet& g1,
                                 const ConnectedComponent& c2, const MemberSet& g2) {
  const auto s1 = c1.span(g1);
  const auto s2 = c2.span(g2);
  const bool min1 = s1.lo == 0;
  const bool max1 = s1.hi == c1.size() - 1;
  const bool min2 = s2.lo == 0;
  const bool max2 = s2.hi == c2.size() - 1;
  if (!(min1 || max1) || !(min2 || max2)) {
    throw UsageError("merged_sequence: nodes must touch an end of their components");
  }

  std::vector<int> head = c1.sequence();
  std::vector<int> tail = c2.sequence();
  if (max1 && min2) {
    // Caso 1: keep both
  } else if (max1 && max2) {
    std::reverse(tail.begin(), tail.end());  // Caso 2
  } else if (min1 && min2) {
    std::reverse(head.begin(), head.end());  // Caso 3
  } else {
    std::reverse(head.begin(), head.end());  // Caso 4
    std::reverse(tail.begin(), tail.end());
  }
  head.insert(head.end(), tail.begin(), tail.end());
  return head;
}

std::vector<MemberSet> PyramidStructure::member_sets() const {
  std::vector<MemberSet> out(quadruples.size());
  for (size_t i = 0; i < quadruples.size(); ++i) {
    const auto& q = quadruples[i];
    if (q.terminal()) {
      out[i] = {q.id};
    } else {
      const auto& l = out.at(static_cast<size_t>(q.left - 1));
      const auto& r = out.at(static_cast<size_t>(q.right - 1));
      out[i] = l;
      out[i].insert(r.begin(), r.end());
    }
  }
  return out;
}

}  // namespace sympyr
