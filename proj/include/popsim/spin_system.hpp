#pragma once

#include <cstdint>
#include <string>
#include <vector>
#include <map>

#include "popsim/basis.hpp"

namespace popsim {

struct SpinDef {
  std::string name;     // short label, "A".."E" in the bundled system
  std::string species;  // nucleus tag, e.g. "1H" or "19F"
  double offset_hz = 0.0;
  double t2star_s = 0.1;  // apparent transverse relaxation time, sets linewidth
};

// Position of a peak inside one spin's sub-spectrum. Index 1 is the leftmost
// (highest-frequency) peak, index 2^(N-1) the rightmost.
struct PeakLabel {
  int spin = -1;
  int peak_index = 0;
  friend bool operator==(const PeakLabel&, const PeakLabel&) = default;
  friend auto operator<=>(const PeakLabel&, const PeakLabel&) = default;
};

// Single-spin-flip level pair. `lower` has bit 0 at the flipped spin and is
// the more populated level at thermal equilibrium.
struct Transition {
  int flipped_spin = -1;
  BasisState lower;
  BasisState upper;
  double frequency_hz = 0.0;
  PeakLabel label;
};

struct SignedPeak {
  int spin = -1;
  int peak_index = 0;
  int sign = 0;  // +1 or -1
  friend bool operator==(const SignedPeak&, const SignedPeak&) = default;
};

// First-order N-qubit spin system. Construction validates the coupling table
// and precomputes transitions and per-spin peak tables; instances are
// immutable afterwards and safe to share across threads.
class SpinSystem {
 public:
  SpinSystem(std::vector<SpinDef> spins,
             std::vector<double> couplings_hz,  // flat n*n symmetric table
             double t1_eff_s,
             std::map<std::string, double> species_weights = {});

  int n_spins() const { return static_cast<int>(spins_.size()); }
  std::size_t n_states() const { return std::size_t{1} << n_spins(); }
  const SpinDef& spin(int i) const { return spins_.at(static_cast<std::size_t>(i)); }
  double coupling_hz(int i, int j) const;
  double t1_eff_s() const { return t1_eff_s_; }

  int spin_by_name(const std::string& name) const;  // -1 if absent
  const std::vector<std::string>& species_tags() const { return species_; }
  bool has_species(const std::string& tag) const;
  std::vector<int> spins_of_species(const std::string& tag) const;
  double species_weight(const std::string& tag) const;

  // offset_i + sum_j c_ij * (1 - 2 b_j) / 2 over the other spins
  double transition_frequency(int spin, std::uint32_t neighbors) const;

  // all N * 2^(N-1) single-flip transitions, ordered by (spin, neighbors)
  const std::vector<Transition>& transitions() const { return transitions_; }
  const Transition& transition_at(int spin, std::uint32_t neighbors) const;
  const Transition& transition_by_label(const PeakLabel& label) const;
  const Transition& transition_by_label(const std::string& text) const;

  // neighbor configuration holding peak `index` (1-based) of `spin`'s sub-spectrum
  std::uint32_t config_of_peak(int spin, int index) const;
  int peak_index_of_config(int spin, std::uint32_t config) const;
  // full table for one spin: entry k holds the configuration of peak k+1
  const std::vector<std::uint32_t>& peak_table(int spin) const;

  // the signed peak of every spin for a pseudopure state: sign +1 where the
  // state bit is 0, -1 where it is 1
  std::vector<SignedPeak> pattern_of(const BasisState& state) const;

  std::string label_text(const PeakLabel& label) const;  // "B8"
  PeakLabel parse_label(const std::string& text) const;

 private:
  std::vector<SpinDef> spins_;
  std::vector<double> couplings_;
  double t1_eff_s_ = 0.65;
  std::map<std::string, double> species_weights_;
  std::vector<std::string> species_;
  std::vector<Transition> transitions_;
  std::vector<std::vector<std::uint32_t>> config_of_peak_;  // per spin, by index-1
  std::vector<std::vector<int>> peak_index_of_config_;      // per spin, by config
};

}  // namespace popsim
