#include "sympyr/engine.hpp"

#include <algorithm>
#include <cassert>
#include <unordered_map>

#include "sympyr/error.hpp"

namespace sympyr {

ConnectedComponent& EngineState::component(int id) {
  for (auto& c : C) {
    if (c.id() == id) return c;
  }
  throw UsageError("no component with id " + std::to_string(id));
}

const ConnectedComponent& EngineState::component(int id) const {
  return const_cast<EngineState*>(this)->component(id);
}

int default_max_iterations(int n) { return n * (n - 1) / 2 + n; }

namespace {

double pair_generality(EngineState& st, const ActiveNode& a, const ActiveNode& b) {
  const auto key = std::minmax(a.beta, b.beta);
  auto it = st.pair_cache.find(key);
  if (it != st.pair_cache.end()) return it->second;
  const Description u =
      generalize(st.table.schema(), {a.object.description(), b.object.description()});
  const double g = degree_of_generality(st.table.schema(), u);
  st.pair_cache.emplace(key, g);
  return g;
}

void renumber(EngineState& st) {
  st.NP = static_cast<int>(st.G.size());
  for (int i = 0; i < st.NP; ++i) st.G[i].alpha = i + 1;
}

void refresh_dissimilarities(EngineState& st) {
  const int np = st.NP;
  st.D.assign(np, std::vector<double>(np, 0.0));
  for (int i = 0; i < np; ++i) {
    for (int j = i; j < np; ++j) {
      const double g = pair_generality(st, st.G[i], st.G[j]);
      st.D[i][j] = st.D[j][i] = g;
    }
  }
}

std::unordered_map<int, ComponentContext> build_contexts(const EngineState& st) {
  std::unordered_map<int, ComponentContext> ctxs;
  ctxs.reserve(st.C.size());
  for (const auto& c : st.C) {
    std::vector<MemberSet> family;
    family.reserve(c.nodes().size());
    for (int beta : c.nodes()) family.push_back(st.members[static_cast<size_t>(beta - 1)]);
    ctxs.emplace(c.id(), make_component_context(c, std::move(family)));
  }
  return ctxs;
}

void check_invariants(const EngineState& st) {
#ifndef NDEBUG
  std::set<int> seen;
  for (const auto& c : st.C) {
    for (int row : c.sequence()) assert(seen.insert(row).second);
  }
  assert(static_cast<int>(seen.size()) == st.table.row_count());
  assert(st.NC == static_cast<int>(st.C.size()));
  assert(st.NP == static_cast<int>(st.G.size()));
  for (const auto& g : st.G) {
    assert(g.ell >= 0 && g.ell <= 2);
  }
  for (const auto& c : st.C) {
    for (int beta : c.nodes()) {
      const auto& m = st.members[static_cast<size_t>(beta - 1)];
      const auto s = c.span(m);
      assert(static_cast<int>(m.size()) == s.hi - s.lo + 1);
    }
  }
#endif
  (void)st;
}

EngineState make_base_state(const SymbolicDataTable& table, int max_iterations) {
  if (max_iterations < 1) throw UsageError("max iterations must be >= 1");
  EngineState st{table};
  const int n = table.row_count();
  st.h = 1;
  st.NG = n;
  st.M = max_iterations;
  st.out.quadruples.reserve(static_cast<size_t>(n));
  for (int id = 1; id <= n; ++id) {
    st.out.quadruples.push_back({id, 0, 0, 0.0});
    SymbolicObject obj(table.schema_ptr(), table.row(id));
    st.out.extents.push_back(extent_boolean(obj, table));
    st.out.objects.push_back(std::move(obj));
    st.members.push_back({id});
  }
  return st;
}

void install_active_rows(EngineState& st, const std::vector<int>& component_of_row) {
  const int n = st.table.row_count();
  for (int id = 1; id <= n; ++id) {
    st.G.push_back(ActiveNode{.alpha = id,
                              .beta = id,
                              .object = st.out.objects[static_cast<size_t>(id - 1)],
                              .ell = 0,
                              .members = {id},
                              .extent = st.out.extents[static_cast<size_t>(id - 1)],
                              .component = component_of_row[static_cast<size_t>(id - 1)]});
  }
  renumber(st);
  refresh_dissimilarities(st);
  st.B.assign(st.NP, std::vector<char>(static_cast<size_t>(st.NP), 0));
}

}  // namespace

EngineState initialize(const SymbolicDataTable& table, int max_iterations) {
  EngineState st = make_base_state(table, max_iterations);
  const int n = table.row_count();
  std::vector<int> comp_of(static_cast<size_t>(n));
  for (int id = 1; id <= n; ++id) {
    ConnectedComponent c(id, {id});
    c.add_node(id);
    st.C.push_back(std::move(c));
    comp_of[static_cast<size_t>(id - 1)] = id;
  }
  st.NC = n;
  st.next_component_id = n + 1;
  install_active_rows(st, comp_of);
  return st;
}

EngineState initialize(const SymbolicDataTable& table, const std::vector<int>& order,
                       int max_iterations) {
  const int n = table.row_count();
  std::vector<int> sorted = order;
  std::sort(sorted.begin(), sorted.end());
  for (int id = 1; id <= n; ++id) {
    if (id > static_cast<int>(sorted.size()) || sorted[static_cast<size_t>(id - 1)] != id) {
      throw UsageError("order must be a permutation of 1.." + std::to_string(n));
    }
  }
  if (static_cast<int>(order.size()) != n) {
    throw UsageError("order must be a permutation of 1.." + std::to_string(n));
  }

  EngineState st = make_base_state(table, max_iterations);
  ConnectedComponent c(1, order);
  for (int id = 1; id <= n; ++id) c.add_node(id);
  st.C.push_back(std::move(c));
  st.NC = 1;
  st.next_component_id = 2;
  install_active_rows(st, std::vector<int>(static_cast<size_t>(n), 1));
  return st;
}

void elimination_phase(EngineState& st) {
  const auto ctxs = build_contexts(st);
  const int np = st.NP;
  st.B.assign(np, std::vector<char>(static_cast<size_t>(np), 0));
  for (int i = 0; i < np; ++i) {
    const auto& gi = st.G[static_cast<size_t>(i)];
    const auto& ci = ctxs.at(gi.component);
    for (int j = i + 1; j < np; ++j) {
      const auto& gj = st.G[static_cast<size_t>(j)];
      const auto& cj = ctxs.at(gj.component);
      const bool ok = aggregable(gi.members, ci, gj.members, cj) ||
                      aggregable(gj.members, cj, gi.members, ci);
      st.B[static_cast<size_t>(i)][static_cast<size_t>(j)] = ok ? 1 : 0;
      st.B[static_cast<size_t>(j)][static_cast<size_t>(i)] = ok ? 1 : 0;
    }
  }

  std::vector<char> keep(static_cast<size_t>(np), 0);
  int kept = 0;
  for (int i = 0; i < np; ++i) {
    bool any = false;
    for (int j = 0; j < np && !any; ++j) any = st.B[static_cast<size_t>(i)][static_cast<size_t>(j)] != 0;
    keep[static_cast<size_t>(i)] = any ? 1 : 0;
    kept += any ? 1 : 0;
  }
  if (kept == np) return;

  // Removal cannot change the remaining pairs' aggregability (it depends on
  // the created-node family, not on the active set), so B rows/columns are
  // filtered rather than recomputed.
  std::vector<ActiveNode> g2;
  g2.reserve(static_cast<size_t>(kept));
  std::vector<std::vector<char>> b2(static_cast<size_t>(kept),
                                    std::vector<char>(static_cast<size_t>(kept), 0));
  int r = 0;
  for (int i = 0; i < np; ++i) {
    if (!keep[static_cast<size_t>(i)]) continue;
    int ccol = 0;
    for (int j = 0; j < np; ++j) {
      if (!keep[static_cast<size_t>(j)]) continue;
      b2[static_cast<size_t>(r)][static_cast<size_t>(ccol++)] =
          st.B[static_cast<size_t>(i)][static_cast<size_t>(j)];
    }
    g2.push_back(std::move(st.G[static_cast<size_t>(i)]));
    ++r;
  }
  st.G = std::move(g2);
  st.B = std::move(b2);
  renumber(st);
  refresh_dissimilarities(st);
}

std::optional<MergeSelection> formation_phase(EngineState& st) {
  const Schema& schema = st.table.schema();
  for (;;) {
    int bi = -1;
    int bj = -1;
    double best = 0.0;
    std::pair<int, int> best_key{0, 0};
    for (int i = 0; i < st.NP; ++i) {
      for (int j = i + 1; j < st.NP; ++j) {
        if (!st.B[static_cast<size_t>(i)][static_cast<size_t>(j)]) continue;
        const double d = st.D[static_cast<size_t>(i)][static_cast<size_t>(j)];
        const auto key = std::minmax(st.G[static_cast<size_t>(i)].beta,
                                     st.G[static_cast<size_t>(j)].beta);
        if (bi < 0 || d < best || (d == best && key < best_key)) {
          bi = i;
          bj = j;
          best = d;
          best_key = key;
        }
      }
    }
    if (bi < 0) return std::nullopt;

    const ActiveNode& gi = st.G[static_cast<size_t>(bi)];
    const ActiveNode& gj = st.G[static_cast<size_t>(bj)];
    SymbolicObject s_star(st.table.schema_ptr(),
                          generalize(schema, {gi.object.description(), gj.object.description()}));
    std::set<int> ext_star = extent_boolean(s_star, st.table);
    std::set<int> ext_parents = gi.extent;
    ext_parents.insert(gj.extent.begin(), gj.extent.end());

    if (is_complete(s_star, st.table) && ext_star == ext_parents) {
      st.NG += 1;
      st.out.quadruples.push_back({st.NG, gi.beta, gj.beta, best});
      st.out.objects.push_back(std::move(s_star));
      st.out.extents.push_back(std::move(ext_star));
      MemberSet m = gi.members;
      m.insert(gj.members.begin(), gj.members.end());
      st.members.push_back(std::move(m));
      return MergeSelection{bi + 1, bj + 1, gi.beta, gj.beta, st.NG, best};
    }
    st.B[static_cast<size_t>(bi)][static_cast<size_t>(bj)] = 0;
    st.B[static_cast<size_t>(bj)][static_cast<size_t>(bi)] = 0;
  }
}

void update_phase(EngineState& st, const MergeSelection& sel) {
  st.h += 1;

  const size_t i = static_cast<size_t>(sel.i_alpha - 1);
  const size_t j = static_cast<size_t>(sel.j_alpha - 1);
  const int comp_i = st.G[i].component;
  const int comp_j = st.G[j].component;
  const MemberSet members_i = st.G[i].members;
  const MemberSet members_j = st.G[j].members;

  int target = comp_i;
  if (comp_i != comp_j) {
    const ConnectedComponent& c1 = st.component(comp_i);
    const ConnectedComponent& c2 = st.component(comp_j);
    ConnectedComponent merged(st.next_component_id++,
                              merged_sequence(c1, members_i, c2, members_j));
    merged.add_nodes(c1.nodes());
    merged.add_nodes(c2.nodes());
    target = merged.id();
    std::erase_if(st.C,
                  [&](const ConnectedComponent& c) { return c.id() == comp_i || c.id() == comp_j; });
    st.C.push_back(std::move(merged));
    st.NC -= 1;
    for (auto& g : st.G) {
      if (g.component == comp_i || g.component == comp_j) g.component = target;
    }
  }
  st.component(target).add_node(sel.new_beta);

  st.G[i].ell += 1;
  st.G[j].ell += 1;
  std::erase_if(st.G, [](const ActiveNode& g) { return g.ell >= 2; });
  st.G.push_back(ActiveNode{.alpha = 0,
                            .beta = sel.new_beta,
                            .object = st.out.objects[static_cast<size_t>(sel.new_beta - 1)],
                            .ell = 0,
                            .members = st.members[static_cast<size_t>(sel.new_beta - 1)],
                            .extent = st.out.extents[static_cast<size_t>(sel.new_beta - 1)],
                            .component = target});
  renumber(st);
  refresh_dissimilarities(st);
  st.B.assign(st.NP, std::vector<char>(static_cast<size_t>(st.NP), 0));
}

namespace {

int full_cover_node(const EngineState& st) {
  const int n = st.table.row_count();
  for (int beta = static_cast<int>(st.members.size()); beta >= 1; --beta) {
    if (static_cast<int>(st.members[static_cast<size_t>(beta - 1)].size()) == n) return beta;
  }
  return 0;
}

PyramidResult run(EngineState st) {
  const int n = st.table.row_count();
  if (n == 1) {
    st.out.final_order = {1};
    return PyramidResult{std::move(st.out), "", st.h};
  }
  for (;;) {
    if (st.NC == 1) {
      if (const int root = full_cover_node(st); root != 0) {
        // Once the full cover exists nothing aggregates any more; the active
        // set collapses to the root.
        std::erase_if(st.G, [&](const ActiveNode& g) { return g.beta != root; });
        renumber(st);
        st.out.final_order = st.C.front().sequence();
        return PyramidResult{std::move(st.out), "", st.h};
      }
    }
    if (st.h > st.M) {
      return PyramidResult{std::nullopt, "iteration budget exceeded (h > M)", st.h};
    }
    elimination_phase(st);
    auto sel = formation_phase(st);
    if (!sel) {
      return PyramidResult{std::nullopt, "no aggregable pair of nodes admits a complete union",
                           st.h};
    }
    update_phase(st, *sel);
    check_invariants(st);
  }
}

}  // namespace

PyramidResult run_caps(const SymbolicDataTable& table, int max_iterations) {
  return run(initialize(table, max_iterations));
}

PyramidResult run_capso(const SymbolicDataTable& table, const std::vector<int>& order,
                        int max_iterations) {
  return run(initialize(table, order, max_iterations));
}

}  // namespace sympyr
