#include "popsim/spin_system.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <set>
#include <stdexcept>

namespace popsim {

namespace {

constexpr int kMaxSpins = 16;

}  // namespace

SpinSystem::SpinSystem(std::vector<SpinDef> spins, std::vector<double> couplings_hz,
                       double t1_eff_s, std::map<std::string, double> species_weights)
    : spins_(std::move(spins)),
      couplings_(std::move(couplings_hz)),
      t1_eff_s_(t1_eff_s),
      species_weights_(std::move(species_weights)) {
  const int n = n_spins();
  if (n < 2 || n > kMaxSpins)
    throw std::invalid_argument("spin system needs 2..16 spins, got " + std::to_string(n));
  if (couplings_.size() != static_cast<std::size_t>(n) * static_cast<std::size_t>(n))
    throw std::invalid_argument("coupling table must be n*n");
  if (!(t1_eff_s_ > 0.0)) throw std::invalid_argument("t1eff_s must be positive");

  std::set<std::string> names;
  for (const auto& s : spins_) {
    if (s.name.empty()) throw std::invalid_argument("spin name must be nonempty");
    if (!names.insert(s.name).second)
      throw std::invalid_argument("duplicate spin name '" + s.name + "'");
    if (!(s.t2star_s > 0.0))
      throw std::invalid_argument("t2star_s of spin '" + s.name + "' must be positive");
    if (std::find(species_.begin(), species_.end(), s.species) == species_.end())
      species_.push_back(s.species);
  }
  for (int i = 0; i < n; ++i) {
    if (couplings_[static_cast<std::size_t>(i) * n + i] != 0.0)
      throw std::invalid_argument("coupling table must be zero on the diagonal");
    for (int j = 0; j < i; ++j) {
      const double cij = couplings_[static_cast<std::size_t>(i) * n + j];
      const double cji = couplings_[static_cast<std::size_t>(j) * n + i];
      if (cij != cji)
        throw std::invalid_argument("coupling table must be symmetric (" + spins_[i].name +
                                    "," + spins_[j].name + ")");
    }
  }
  for (const auto& [tag, w] : species_weights_) {
    if (!has_species(tag))
      throw std::invalid_argument("species weight for unknown species '" + tag + "'");
    if (!(w > 0.0)) throw std::invalid_argument("species weight must be positive");
  }

  // Sort every sub-spectrum by descending frequency; ties mean the spectrum
  // is not resolved and the construction is rejected.
  const std::uint32_t n_cfg = 1u << (n - 1);
  config_of_peak_.resize(static_cast<std::size_t>(n));
  peak_index_of_config_.assign(static_cast<std::size_t>(n),
                               std::vector<int>(n_cfg, 0));
  for (int i = 0; i < n; ++i) {
    std::vector<std::pair<double, std::uint32_t>> rows;
    rows.reserve(n_cfg);
    for (std::uint32_t cfg = 0; cfg < n_cfg; ++cfg)
      rows.emplace_back(transition_frequency(i, cfg), cfg);
    std::sort(rows.begin(), rows.end(),
              [](const auto& a, const auto& b) { return a.first > b.first; });
    for (std::size_t k = 0; k + 1 < rows.size(); ++k)
      if (rows[k].first == rows[k + 1].first)
        throw std::invalid_argument("degenerate sub-spectrum for spin '" + spins_[i].name +
                                    "': two transitions share frequency " +
                                    std::to_string(rows[k].first) + " Hz");
    auto& table = config_of_peak_[static_cast<std::size_t>(i)];
    table.resize(n_cfg);
    for (std::size_t k = 0; k < rows.size(); ++k) {
      table[k] = rows[k].second;
      peak_index_of_config_[static_cast<std::size_t>(i)][rows[k].second] =
          static_cast<int>(k) + 1;
    }
  }

  transitions_.reserve(static_cast<std::size_t>(n) * n_cfg);
  for (int i = 0; i < n; ++i) {
    for (std::uint32_t cfg = 0; cfg < n_cfg; ++cfg) {
      Transition t;
      t.flipped_spin = i;
      t.lower = insert_bit(cfg, i, 0, n);
      t.upper = insert_bit(cfg, i, 1, n);
      t.frequency_hz = transition_frequency(i, cfg);
      t.label = {i, peak_index_of_config_[static_cast<std::size_t>(i)][cfg]};
      transitions_.push_back(t);
    }
  }
}

double SpinSystem::coupling_hz(int i, int j) const {
  return couplings_.at(static_cast<std::size_t>(i) * n_spins() + j);
}

int SpinSystem::spin_by_name(const std::string& name) const {
  for (int i = 0; i < n_spins(); ++i)
    if (spins_[static_cast<std::size_t>(i)].name == name) return i;
  return -1;
}

bool SpinSystem::has_species(const std::string& tag) const {
  return std::find(species_.begin(), species_.end(), tag) != species_.end();
}

std::vector<int> SpinSystem::spins_of_species(const std::string& tag) const {
  std::vector<int> out;
  for (int i = 0; i < n_spins(); ++i)
    if (spins_[static_cast<std::size_t>(i)].species == tag) out.push_back(i);
  if (out.empty()) throw std::invalid_argument("unknown species '" + tag + "'");
  return out;
}

double SpinSystem::species_weight(const std::string& tag) const {
  if (!has_species(tag)) throw std::invalid_argument("unknown species '" + tag + "'");
  auto it = species_weights_.find(tag);
  return it == species_weights_.end() ? 1.0 : it->second;
}

double SpinSystem::transition_frequency(int spin, std::uint32_t neighbors) const {
  const int n = n_spins();
  double f = spins_.at(static_cast<std::size_t>(spin)).offset_hz;
  int k = 0;
  for (int j = 0; j < n; ++j) {
    if (j == spin) continue;
    const int bj = static_cast<int>((neighbors >> (n - 2 - k)) & 1u);
    f += coupling_hz(spin, j) * (1 - 2 * bj) * 0.5;
    ++k;
  }
  return f;
}

const Transition& SpinSystem::transition_at(int spin, std::uint32_t neighbors) const {
  const std::uint32_t n_cfg = 1u << (n_spins() - 1);
  if (spin < 0 || spin >= n_spins() || neighbors >= n_cfg)
    throw std::invalid_argument("transition_at: indices out of range");
  return transitions_[static_cast<std::size_t>(spin) * n_cfg + neighbors];
}

const Transition& SpinSystem::transition_by_label(const PeakLabel& label) const {
  return transition_at(label.spin, config_of_peak(label.spin, label.peak_index));
}

const Transition& SpinSystem::transition_by_label(const std::string& text) const {
  return transition_by_label(parse_label(text));
}

std::uint32_t SpinSystem::config_of_peak(int spin, int index) const {
  const auto& table = peak_table(spin);
  if (index < 1 || static_cast<std::size_t>(index) > table.size())
    throw std::invalid_argument("peak index out of range: " + std::to_string(index));
  return table[static_cast<std::size_t>(index - 1)];
}

int SpinSystem::peak_index_of_config(int spin, std::uint32_t config) const {
  if (spin < 0 || spin >= n_spins() || config >= (1u << (n_spins() - 1)))
    throw std::invalid_argument("peak_index_of_config: indices out of range");
  return peak_index_of_config_[static_cast<std::size_t>(spin)][config];
}

const std::vector<std::uint32_t>& SpinSystem::peak_table(int spin) const {
  if (spin < 0 || spin >= n_spins())
    throw std::invalid_argument("peak_table: spin out of range");
  return config_of_peak_[static_cast<std::size_t>(spin)];
}

std::vector<SignedPeak> SpinSystem::pattern_of(const BasisState& state) const {
  if (state.n != n_spins())
    throw std::invalid_argument("pattern_of: state size does not match system");
  std::vector<SignedPeak> out;
  out.reserve(static_cast<std::size_t>(n_spins()));
  for (int i = 0; i < n_spins(); ++i) {
    const std::uint32_t cfg = neighbor_config(state, i);
    out.push_back({i, peak_index_of_config(i, cfg), state.bit(i) == 0 ? +1 : -1});
  }
  return out;
}

std::string SpinSystem::label_text(const PeakLabel& label) const {
  return spin(label.spin).name + std::to_string(label.peak_index);
}

PeakLabel SpinSystem::parse_label(const std::string& text) const {
  // longest spin-name prefix, then a 1-based peak index
  int best = -1;
  std::size_t best_len = 0;
  for (int i = 0; i < n_spins(); ++i) {
    const auto& name = spin(i).name;
    if (text.size() > name.size() && text.compare(0, name.size(), name) == 0 &&
        name.size() > best_len) {
      best = i;
      best_len = name.size();
    }
  }
  if (best < 0) throw std::invalid_argument("unknown peak label '" + text + "'");
  const std::string digits = text.substr(best_len);
  if (digits.empty() ||
      !std::all_of(digits.begin(), digits.end(),
                   [](unsigned char c) { return std::isdigit(c); }))
    throw std::invalid_argument("malformed peak label '" + text + "'");
  const int index = std::stoi(digits);
  if (index < 1 || index > static_cast<int>(1u << (n_spins() - 1)))
    throw std::invalid_argument("peak index out of range in '" + text + "'");
  return {best, index};
}

}  // namespace popsim
