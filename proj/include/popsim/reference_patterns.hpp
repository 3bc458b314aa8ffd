#pragma once

#include <string>
#include <vector>

#include "popsim/spin_system.hpp"

namespace popsim {

// Reference signed peak assignment for one pseudopure state of the bundled
// five-qubit system: one (spin, peak index, sign) entry per spin.
struct ReferenceRow {
  std::string state_bits;
  std::vector<SignedPeak> entries;
};

// The bundled reference pattern table: all 32 pseudopure patterns (160 signed
// entries) of the five-qubit example system. Used for validation and tests
// only; runtime patterns always come from the coupling model.
const std::vector<ReferenceRow>& reference_pattern_table();

// True when `sys` has the layout the reference table describes (five spins
// named A..E with species 1H, 1H, 19F, 19F, 19F).
bool matches_reference_layout(const SpinSystem& sys);

struct TableDiff {
  int matched = 0;
  int total = 0;
  std::vector<std::string> mismatches;
  bool ok() const { return matched == total && total > 0; }
};

// Regenerates every pattern from the coupling model and diffs it against the
// reference table entry by entry.
TableDiff diff_against_reference(const SpinSystem& sys);

}  // namespace popsim
