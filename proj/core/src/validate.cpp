#include "sympyr/validate.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

#include "sympyr/error.hpp"

namespace sympyr {

namespace {

std::string set_to_string(const MemberSet& s) {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (int v : s) {
    if (!first) os << ',';
    os << v;
    first = false;
  }
  os << '}';
  return os.str();
}

// true iff the set occupies contiguous positions of `order`.
bool is_interval_of(const MemberSet& s, const std::vector<int>& order) {
  int lo = static_cast<int>(order.size());
  int hi = -1;
  for (size_t p = 0; p < order.size(); ++p) {
    if (s.count(order[p])) {
      lo = std::min(lo, static_cast<int>(p));
      hi = std::max(hi, static_cast<int>(p));
    }
  }
  if (hi < 0) return false;  // some member missing from the order entirely
  size_t found = 0;
  for (int p = lo; p <= hi; ++p) found += s.count(order[static_cast<size_t>(p)]);
  return found == s.size() && s.size() == static_cast<size_t>(hi - lo + 1);
}

}  // namespace

ValidationReport check_pyramid(const PyramidStructure& result, const SymbolicDataTable& table) {
  ValidationReport rep;
  const int n = table.row_count();
  const int ng = result.node_count();

  // structural sanity first: ids, child references, terminal convention
  for (int id = 1; id <= ng; ++id) {
    const auto& q = result.quadruple(id);
    if (q.id != id) {
      rep.violations.push_back("node " + std::to_string(id) + ": id mismatch in quadruple list");
      return rep;
    }
    const bool should_be_terminal = id <= n;
    if (should_be_terminal != q.terminal()) {
      rep.violations.push_back("node " + std::to_string(id) +
                               ": terminal convention violated (p_I=p_D=0 iff p<=N)");
      return rep;
    }
    if (!q.terminal()) {
      if (q.left == q.right || q.left < 1 || q.right < 1 || q.left >= id || q.right >= id) {
        rep.violations.push_back("node " + std::to_string(id) + ": bad child references");
        return rep;
      }
    }
  }
  if (ng < n || static_cast<int>(result.objects.size()) != ng ||
      static_cast<int>(result.extents.size()) != ng) {
    rep.violations.push_back("structure is incomplete (objects/extents/quadruples disagree)");
    return rep;
  }

  const std::vector<MemberSet> members = result.member_sets();

  // axiom 1: the full set is a node
  MemberSet omega;
  for (int id = 1; id <= n; ++id) omega.insert(id);
  rep.axiom1_omega_present =
      std::find(members.begin(), members.end(), omega) != members.end();
  if (!rep.axiom1_omega_present) {
    rep.violations.push_back("axiom 1: no node covers the whole set " + set_to_string(omega));
  }

  // axiom 2: all singletons are nodes
  rep.axiom2_singletons = true;
  for (int id = 1; id <= n; ++id) {
    const MemberSet single{id};
    if (std::find(members.begin(), members.end(), single) == members.end()) {
      rep.axiom2_singletons = false;
      rep.violations.push_back("axiom 2: singleton {" + std::to_string(id) + "} missing");
    }
  }

  // axiom 3: pairwise intersections are empty or nodes
  std::set<MemberSet> family(members.begin(), members.end());
  rep.axiom3_intersection_closed = true;
  for (size_t a = 0; a < members.size(); ++a) {
    for (size_t b = a + 1; b < members.size(); ++b) {
      MemberSet inter;
      std::set_intersection(members[a].begin(), members[a].end(), members[b].begin(),
                            members[b].end(), std::inserter(inter, inter.begin()));
      if (!inter.empty() && family.count(inter) == 0) {
        rep.axiom3_intersection_closed = false;
        rep.violations.push_back("axiom 3: " + set_to_string(members[a]) + " and " +
                                 set_to_string(members[b]) + " intersect in " +
                                 set_to_string(inter) + " which is not a node");
      }
    }
  }

  // axiom 4: every member set is an interval of the final order
  rep.axiom4_order_compatible = static_cast<int>(result.final_order.size()) == n;
  if (!rep.axiom4_order_compatible) {
    rep.violations.push_back("axiom 4: final order does not list all rows");
  } else {
    for (int id = 1; id <= ng; ++id) {
      if (!is_interval_of(members[static_cast<size_t>(id - 1)], result.final_order)) {
        rep.axiom4_order_compatible = false;
        rep.violations.push_back("axiom 4: node " + std::to_string(id) + " " +
                                 set_to_string(members[static_cast<size_t>(id - 1)]) +
                                 " is not an interval of the final order");
      }
    }
  }

  // completeness: each node's object is complete and its recorded extent is
  // exactly the recomputed boolean extent
  rep.completeness_ok = true;
  for (int id = 1; id <= ng; ++id) {
    const auto& obj = result.object(id);
    if (!is_complete(obj, table)) {
      rep.completeness_ok = false;
      rep.violations.push_back("node " + std::to_string(id) + ": object is not complete");
    }
    if (result.extent(id) != extent_boolean(obj, table)) {
      rep.completeness_ok = false;
      rep.violations.push_back("node " + std::to_string(id) +
                               ": recorded extent differs from the recomputed extent");
    }
  }

  return rep;
}

std::string to_text(const ValidationReport& report) {
  std::ostringstream os;
  auto line = [&](const char* name, bool ok) {
    os << (ok ? "  [ok]   " : "  [FAIL] ") << name << '\n';
  };
  os << (report.pass() ? "pyramid check: pass\n" : "pyramid check: FAIL\n");
  line("axiom 1: full set present", report.axiom1_omega_present);
  line("axiom 2: all singletons present", report.axiom2_singletons);
  line("axiom 3: closed under intersection", report.axiom3_intersection_closed);
  line("axiom 4: order compatible", report.axiom4_order_compatible);
  line("completeness: objects complete, extents exact", report.completeness_ok);
  for (const auto& v : report.violations) os << "  - " << v << '\n';
  return os.str();
}

std::optional<std::vector<int>> find_compatible_order(const std::vector<MemberSet>& family,
                                                      int n) {
  if (n < 1 || n > 8) {
    throw UsageError("find_compatible_order: n must lie in 1..8");
  }
  std::vector<int> perm(static_cast<size_t>(n));
  std::iota(perm.begin(), perm.end(), 1);
  do {
    bool all_ok = true;
    for (const auto& s : family) {
      if (!is_interval_of(s, perm)) {
        all_ok = false;
        break;
      }
    }
    if (all_ok) return perm;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return std::nullopt;
}

}  // namespace sympyr
