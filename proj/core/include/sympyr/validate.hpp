#pragma once

#include <optional>
#include <string>
#include <vector>

#include "sympyr/pyramid.hpp"

namespace sympyr {

// Outcome of the brute-force pyramid axiom check. The overall verdict holds
// iff all five checks pass and no violation was recorded.
struct ValidationReport {
  bool axiom1_omega_present = false;
  bool axiom2_singletons = false;
  bool axiom3_intersection_closed = false;
  bool axiom4_order_compatible = false;
  bool completeness_ok = false;
  std::vector<std::string> violations;

  bool pass() const {
    return axiom1_omega_present && axiom2_singletons && axiom3_intersection_closed &&
           axiom4_order_compatible && completeness_ok && violations.empty();
  }
};

// Verifies the four pyramid axioms plus per-node completeness against the
// input table. Works only from the emitted structure — member sets are
// rebuilt from the quadruples, extents are recomputed from the objects.
ValidationReport check_pyramid(const PyramidStructure& result, const SymbolicDataTable& table);

// Human-readable, one line per check plus the violations.
std::string to_text(const ValidationReport& report);

// Exhaustive search for a total order making every set an interval; nullopt
// when none exists. Throws UsageError when n > 8.
std::optional<std::vector<int>> find_compatible_order(const std::vector<MemberSet>& family, int n);

}  // namespace sympyr
