#include "popsim/state_engine.hpp"

#include <cmath>
#include <stdexcept>

namespace popsim {

namespace {

void check_transition(const PopulationState& state, const Transition& t) {
  if (t.lower.n != state.n || t.upper.n != state.n ||
      t.lower.index >= state.populations.size() || t.upper.index >= state.populations.size())
    throw std::invalid_argument("transition does not belong to this state's system");
  if (t.flipped_spin < 0 || t.flipped_spin >= state.n ||
      t.lower.bit(t.flipped_spin) != 0 || t.upper.bit(t.flipped_spin) != 1 ||
      t.lower.flipped(t.flipped_spin).index != t.upper.index)
    throw std::invalid_argument("malformed transition");
}

void check_same_system(const PopulationState& state, const SpinSystem& sys) {
  if (state.n != sys.n_spins() || state.populations.size() != sys.n_states())
    throw std::invalid_argument("state does not belong to this system");
}

}  // namespace

std::vector<double> thermal_deviation(const std::vector<double>& spin_weights) {
  const int n = static_cast<int>(spin_weights.size());
  if (n < 1 || n > 16) throw std::invalid_argument("thermal_deviation: 1..16 spins");
  std::vector<double> pops(std::size_t{1} << n, 0.0);
  for (std::size_t idx = 0; idx < pops.size(); ++idx) {
    const BasisState b{static_cast<std::uint32_t>(idx), n};
    double p = 0.0;
    for (int i = 0; i < n; ++i)
      p += spin_weights[static_cast<std::size_t>(i)] * (0.5 - b.bit(i));
    pops[idx] = p;
  }
  return pops;
}

PopulationState thermal_state(const SpinSystem& sys) {
  std::vector<double> weights;
  weights.reserve(static_cast<std::size_t>(sys.n_spins()));
  for (int i = 0; i < sys.n_spins(); ++i)
    weights.push_back(sys.species_weight(sys.spin(i).species));
  return {sys.n_spins(), StateKind::thermal, thermal_deviation(weights)};
}

PopulationState pseudopure(const SpinSystem& sys, const BasisState& s, double epsilon) {
  if (!(epsilon > 0.0)) throw std::invalid_argument("pseudopure: epsilon must be positive");
  if (s.n != sys.n_spins() || s.index >= sys.n_states())
    throw std::invalid_argument("pseudopure: state does not belong to this system");
  const double background = -epsilon / static_cast<double>(sys.n_states());
  PopulationState out{sys.n_spins(), StateKind::pseudopure,
                      std::vector<double>(sys.n_states(), background)};
  out.populations[s.index] = epsilon + background;
  return out;
}

PopulationState pi_pulse(const PopulationState& state, const Transition& t) {
  check_transition(state, t);
  PopulationState out = state;
  out.kind = StateKind::general;
  std::swap(out.populations[t.lower.index], out.populations[t.upper.index]);
  return out;
}

PopulationState make_pops(const SpinSystem& sys, const Transition& t) {
  const PopulationState th = thermal_state(sys);
  check_transition(th, t);
  // equilibrium population difference across the transition; the positive
  // member of the pair is the more populated lower level
  const double n_eps = th.populations[t.lower.index] - th.populations[t.upper.index];
  PopulationState out = subtract(th, pi_pulse(th, t));
  for (double& p : out.populations) p /= n_eps;
  out.kind = StateKind::pops;
  return out;
}

PopulationState subtract(const PopulationState& a, const PopulationState& b) {
  if (a.n != b.n || a.populations.size() != b.populations.size())
    throw std::invalid_argument("subtract: mismatched states");
  PopulationState out{a.n, StateKind::general, a.populations};
  for (std::size_t i = 0; i < out.populations.size(); ++i)
    out.populations[i] -= b.populations[i];
  if (is_pops_structured(out)) out.kind = StateKind::pops;
  return out;
}

bool is_pops_structured(const PopulationState& state, double rel_tol) {
  double hi = 0.0, lo = 0.0;
  int n_pos = 0, n_neg = 0;
  for (double p : state.populations) {
    if (p > 0.0) {
      ++n_pos;
      hi = p;
    } else if (p < 0.0) {
      ++n_neg;
      lo = p;
    }
  }
  return n_pos == 1 && n_neg == 1 && std::abs(hi + lo) <= rel_tol * std::abs(hi);
}

double population_sum(const PopulationState& state) {
  double s = 0.0;
  for (double p : state.populations) s += p;
  return s;
}

void validate_gate_spec(const GateSpec& g, int n) {
  const int needed = g.variant == GateSpec::Variant::cnot ? n - 1 : n - 2;
  if (static_cast<int>(g.controls.size()) != needed)
    throw std::invalid_argument("gate spec: expected " + std::to_string(needed) +
                                " controls, got " + std::to_string(g.controls.size()));
  auto check_spin = [n](int s, const char* what) {
    if (s < 0 || s >= n)
      throw std::invalid_argument(std::string("gate spec: ") + what + " out of range");
  };
  check_spin(g.target, "target");
  if (g.controls.count(g.target))
    throw std::invalid_argument("gate spec: target is also a control");
  if (g.variant == GateSpec::Variant::cswap) {
    check_spin(g.target2, "second target");
    if (g.target2 == g.target)
      throw std::invalid_argument("gate spec: swap targets must differ");
    if (g.controls.count(g.target2))
      throw std::invalid_argument("gate spec: swap target is also a control");
  }
  for (const auto& [spin, bit] : g.controls) {
    check_spin(spin, "control");
    if (bit != 0 && bit != 1)
      throw std::invalid_argument("gate spec: control bits must be 0 or 1");
  }
}

namespace {

// neighbor configuration of `spin` built from control values plus explicit
// bits for the remaining non-control spins
std::uint32_t config_from_controls(const GateSpec& g, int spin, int n,
                                   const std::map<int, int>& extra) {
  std::uint32_t cfg = 0;
  for (int j = 0; j < n; ++j) {
    if (j == spin) continue;
    int bit;
    if (auto it = g.controls.find(j); it != g.controls.end())
      bit = it->second;
    else if (auto ix = extra.find(j); ix != extra.end())
      bit = ix->second;
    else
      throw std::logic_error("config_from_controls: uncovered spin");
    cfg = (cfg << 1) | static_cast<std::uint32_t>(bit);
  }
  return cfg;
}

}  // namespace

PulseSequence compile_cnot(const SpinSystem& sys, const GateSpec& g) {
  if (g.variant != GateSpec::Variant::cnot)
    throw std::invalid_argument("compile_cnot: spec is not a cnot");
  validate_gate_spec(g, sys.n_spins());
  const std::uint32_t cfg = config_from_controls(g, g.target, sys.n_spins(), {});
  PulseSequence seq;
  seq.pulses.push_back({sys.transition_at(g.target, cfg), kPi, kDefaultPulseDuration_s});
  seq.total_duration_s = kDefaultPulseDuration_s;
  return seq;
}

PulseSequence compile_cswap(const SpinSystem& sys, const GateSpec& g) {
  if (g.variant != GateSpec::Variant::cswap)
    throw std::invalid_argument("compile_cswap: spec is not a cswap");
  validate_gate_spec(g, sys.n_spins());
  const int u = g.target, v = g.target2;
  // r: (u=0, v=1) <-> (u=1, v=1), flips u with v held at 1
  // s: (u=1, v=1) <-> (u=1, v=0), flips v with u held at 1
  const auto& r = sys.transition_at(u, config_from_controls(g, u, sys.n_spins(), {{v, 1}}));
  const auto& s = sys.transition_at(v, config_from_controls(g, v, sys.n_spins(), {{u, 1}}));
  PulseSequence seq;
  seq.pulses.push_back({r, kPi, kDefaultPulseDuration_s});
  seq.pulses.push_back({s, kPi, kDefaultPulseDuration_s});
  seq.pulses.push_back({r, kPi, kDefaultPulseDuration_s});
  seq.total_duration_s = 3 * kDefaultPulseDuration_s;
  return seq;
}

PulseSequence compile_gate(const SpinSystem& sys, const GateSpec& g) {
  return g.variant == GateSpec::Variant::cnot ? compile_cnot(sys, g) : compile_cswap(sys, g);
}

PopulationState apply_sequence(const PopulationState& state, const PulseSequence& seq,
                               bool relax, const SpinSystem& sys) {
  check_same_system(state, sys);
  PopulationState out = state;
  for (const auto& pulse : seq.pulses) {
    check_transition(out, pulse.transition);
    if (!(pulse.duration_s > 0.0))
      throw std::invalid_argument("pulse duration must be positive");
    std::swap(out.populations[pulse.transition.lower.index],
              out.populations[pulse.transition.upper.index]);
    if (relax) {
      const double decay = std::exp(-pulse.duration_s / sys.t1_eff_s());
      for (double& p : out.populations) p *= decay;
    }
  }
  if (!seq.pulses.empty() && state.kind != StateKind::pops &&
      state.kind != StateKind::pseudopure)
    out.kind = StateKind::general;
  return out;
}

std::vector<std::uint32_t> gate_truth_permutation(const GateSpec& g, int n) {
  validate_gate_spec(g, n);
  const std::size_t n_states = std::size_t{1} << n;
  std::vector<std::uint32_t> perm(n_states);
  for (std::size_t idx = 0; idx < n_states; ++idx) {
    BasisState b{static_cast<std::uint32_t>(idx), n};
    bool active = true;
    for (const auto& [spin, bit] : g.controls)
      if (b.bit(spin) != bit) {
        active = false;
        break;
      }
    if (active) {
      if (g.variant == GateSpec::Variant::cnot) {
        b = b.flipped(g.target);
      } else if (b.bit(g.target) != b.bit(g.target2)) {
        b = b.flipped(g.target).flipped(g.target2);
      }
    }
    perm[idx] = b.index;
  }
  return perm;
}

}  // namespace popsim
