#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "popsim/spin_system.hpp"

namespace popsim {

enum class StateKind { thermal, pseudopure, pops, general };

// Diagonal density matrix as a vector of deviation populations (the uniform
// background is dropped, so entries always sum to zero).
struct PopulationState {
  int n = 0;
  StateKind kind = StateKind::general;
  std::vector<double> populations;  // indexed by BasisState::index

  double at(const BasisState& s) const { return populations.at(s.index); }
};

// deviation of state b is sum_i w_i * (1/2 - b_i); exposed separately so the
// formula is testable for any qubit count
std::vector<double> thermal_deviation(const std::vector<double>& spin_weights);

PopulationState thermal_state(const SpinSystem& sys);

// epsilon * (delta_js - 1/2^N)
PopulationState pseudopure(const SpinSystem& sys, const BasisState& s, double epsilon);

// exchanges the populations of the two levels the transition connects
PopulationState pi_pulse(const PopulationState& state, const Transition& t);

// two-experiment difference, normalized by the equilibrium population
// difference across the transition: +1 at the lower level, -1 at the upper
PopulationState make_pops(const SpinSystem& sys, const Transition& t);

// a - b; tagged pops when the result has the two-level +-x structure
PopulationState subtract(const PopulationState& a, const PopulationState& b);

bool is_pops_structured(const PopulationState& state, double rel_tol = 1e-12);

double population_sum(const PopulationState& state);

// ----------------------------------------------------------------------
// transition-selective gates

struct GateSpec {
  enum class Variant { cnot, cswap };
  Variant variant = Variant::cnot;
  std::map<int, int> controls;  // spin index -> required bit
  int target = -1;              // flipped qubit (cnot) / first swapped qubit (cswap)
  int target2 = -1;             // second swapped qubit (cswap only)
};

struct Pulse {
  Transition transition;
  double angle_rad = 0.0;
  double duration_s = 0.0;
};

struct PulseSequence {
  std::vector<Pulse> pulses;
  double total_duration_s = 0.0;
};

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr double kDefaultPulseDuration_s = 0.1;

// single pi pulse at the target spin's transition selected by the control pattern
PulseSequence compile_cnot(const SpinSystem& sys, const GateSpec& g);

// pi_r - pi_s - pi_r through the intermediate with both swap bits set
PulseSequence compile_cswap(const SpinSystem& sys, const GateSpec& g);

PulseSequence compile_gate(const SpinSystem& sys, const GateSpec& g);

// applies the pulses in order; with relax every pulse additionally scales the
// whole deviation vector by exp(-duration / t1_eff)
PopulationState apply_sequence(const PopulationState& state, const PulseSequence& seq,
                               bool relax, const SpinSystem& sys);

// the gate's action on basis indices, straight from bit logic; oracle for the
// compiled sequences
std::vector<std::uint32_t> gate_truth_permutation(const GateSpec& g, int n);

void validate_gate_spec(const GateSpec& g, int n);

}  // namespace popsim
