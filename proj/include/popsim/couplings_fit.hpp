#pragma once

#include <vector>

#include "popsim/reference_patterns.hpp"
#include "popsim/spin_system.hpp"

namespace popsim {

// Full signed pattern assignment for an N-spin system: one row per basis
// state (indexed by BasisState::index), one SignedPeak per spin in spin order.
struct TargetPatternTable {
  int n = 0;
  std::vector<std::vector<SignedPeak>> rows;
};

TargetPatternTable target_from_reference();

// Solves the inverse assignment problem: finds a symmetric coupling table
// whose induced peak ordering reproduces `target` for every spin. Coupling
// signs are read off single-bit-flip comparisons; magnitudes come from a
// relaxation solve of the per-spin ordering inequalities. The result is
// scaled so the smallest magnitude equals `min_abs_hz` and forward-verified
// before returning. Throws std::invalid_argument when the target is
// inconsistent or no coupling set can induce it.
std::vector<double> find_couplings(const TargetPatternTable& target,
                                   double min_abs_hz = 40.0);

}  // namespace popsim
