#include "popsim/couplings_fit.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

namespace popsim {

namespace {

// bit of spin j (from the MSB) inside spin i's neighbor configuration
int config_bit(std::uint32_t cfg, int i, int j, int n) {
  const int pos = j < i ? j : j - 1;
  return static_cast<int>((cfg >> (n - 2 - pos)) & 1u);
}

struct TargetOrders {
  // per spin: config holding peak k+1   (descending frequency)
  std::vector<std::vector<std::uint32_t>> config_of_peak;
};

TargetOrders derive_orders(const TargetPatternTable& target) {
  const int n = target.n;
  const std::size_t n_states = std::size_t{1} << n;
  const std::uint32_t n_cfg = 1u << (n - 1);
  if (target.rows.size() != n_states)
    throw std::invalid_argument("target table must list every basis state");

  TargetOrders orders;
  orders.config_of_peak.assign(static_cast<std::size_t>(n),
                               std::vector<std::uint32_t>(n_cfg, 0));
  std::vector<std::vector<int>> index_of(static_cast<std::size_t>(n),
                                         std::vector<int>(n_cfg, 0));

  for (std::size_t s = 0; s < n_states; ++s) {
    const BasisState state{static_cast<std::uint32_t>(s), n};
    const auto& row = target.rows[s];
    if (row.size() != static_cast<std::size_t>(n))
      throw std::invalid_argument("target row for state " + state.bits() +
                                  " must have one entry per spin");
    for (int i = 0; i < n; ++i) {
      const auto& e = row[static_cast<std::size_t>(i)];
      if (e.spin != i)
        throw std::invalid_argument("target row entries must be in spin order");
      const int want_sign = state.bit(i) == 0 ? +1 : -1;
      if (e.sign != want_sign)
        throw std::invalid_argument("target violates the sign rule at state " +
                                    state.bits());
      if (e.peak_index < 1 || e.peak_index > static_cast<int>(n_cfg))
        throw std::invalid_argument("target peak index out of range");
      const std::uint32_t cfg = neighbor_config(state, i);
      int& slot = index_of[static_cast<std::size_t>(i)][cfg];
      if (slot == 0)
        slot = e.peak_index;
      else if (slot != e.peak_index)
        throw std::invalid_argument("target gives conflicting indices for one transition");
    }
  }

  // bijection check: every peak index used exactly once per spin
  for (int i = 0; i < n; ++i) {
    std::vector<bool> used(n_cfg + 1, false);
    for (std::uint32_t cfg = 0; cfg < n_cfg; ++cfg) {
      const int idx = index_of[static_cast<std::size_t>(i)][cfg];
      if (idx == 0)
        throw std::invalid_argument("target leaves a transition unassigned");
      if (used[static_cast<std::size_t>(idx)])
        throw std::invalid_argument("target assigns one peak index to two configurations");
      used[static_cast<std::size_t>(idx)] = true;
      orders.config_of_peak[static_cast<std::size_t>(i)][static_cast<std::size_t>(idx - 1)] =
          cfg;
    }
  }
  return orders;
}

}  // namespace

TargetPatternTable target_from_reference() {
  TargetPatternTable t;
  t.n = 5;
  t.rows.resize(32);
  for (const auto& row : reference_pattern_table())
    t.rows[BasisState::from_bits(row.state_bits).index] = row.entries;
  return t;
}

std::vector<double> find_couplings(const TargetPatternTable& target, double min_abs_hz) {
  const int n = target.n;
  if (n < 2 || n > 16) throw std::invalid_argument("target must describe 2..16 spins");
  const std::uint32_t n_cfg = 1u << (n - 1);
  const auto orders = derive_orders(target);

  auto pair_id = [n](int i, int j) {
    if (i > j) std::swap(i, j);
    return static_cast<std::size_t>(i) * n + static_cast<std::size_t>(j);
  };
  std::vector<std::size_t> var_of_pair(static_cast<std::size_t>(n) * n, SIZE_MAX);
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      var_of_pair[pair_id(i, j)] = pairs.size();
      pairs.emplace_back(i, j);
    }

  // Coupling signs from single-bit-flip comparisons: within spin i's table a
  // flip of neighbor j changes the frequency by exactly -+ c_ij, so the index
  // order of any config pair differing only at j fixes sign(c_ij).
  std::vector<int> sign(pairs.size(), 0);
  for (int i = 0; i < n; ++i) {
    std::vector<int> index_of(n_cfg, 0);
    const auto& table = orders.config_of_peak[static_cast<std::size_t>(i)];
    for (std::uint32_t k = 0; k < n_cfg; ++k) index_of[table[k]] = static_cast<int>(k) + 1;
    for (int j = 0; j < n; ++j) {
      if (j == i) continue;
      const int pos = j < i ? j : j - 1;
      const std::uint32_t mask = 1u << (n - 2 - pos);
      for (std::uint32_t cfg = 0; cfg < n_cfg; ++cfg) {
        if (cfg & mask) continue;
        // freq(b_j = 0) > freq(b_j = 1)  <=>  c_ij > 0
        const int s = index_of[cfg] < index_of[cfg | mask] ? +1 : -1;
        int& slot = sign[var_of_pair[pair_id(i, j)]];
        if (slot == 0)
          slot = s;
        else if (slot != s)
          throw std::invalid_argument("infeasible target: inconsistent coupling sign for (" +
                                      std::to_string(i) + "," + std::to_string(j) + ")");
      }
    }
  }

  // Ordering inequalities: adjacent peaks in each spin's descending-frequency
  // order. Row coefficients live on the pair variables.
  struct Row {
    std::vector<double> a;
  };
  std::vector<Row> rows;
  for (int i = 0; i < n; ++i) {
    const auto& table = orders.config_of_peak[static_cast<std::size_t>(i)];
    for (std::uint32_t k = 0; k + 1 < n_cfg; ++k) {
      Row r;
      r.a.assign(pairs.size(), 0.0);
      const std::uint32_t hi = table[k], lo = table[k + 1];
      for (int j = 0; j < n; ++j) {
        if (j == i) continue;
        const std::size_t v = var_of_pair[pair_id(i, j)];
        const int dbit = config_bit(lo, i, j, n) - config_bit(hi, i, j, n);
        r.a[v] += sign[v] * dbit;
      }
      rows.push_back(std::move(r));
    }
  }

  // Relaxation solve of a.x >= 1 with x >= x_min. Feasible targets admit
  // scaled solutions, so the projection loop terminates; a capped iteration
  // count flags infeasible orderings.
  const double x_min = 0.25;
  std::vector<double> x(pairs.size(), 1.0);
  const int max_passes = 20000;
  bool ok = false;
  for (int pass = 0; pass < max_passes && !ok; ++pass) {
    ok = true;
    for (const auto& r : rows) {
      double dot = 0.0, norm2 = 0.0;
      for (std::size_t v = 0; v < x.size(); ++v) {
        dot += r.a[v] * x[v];
        norm2 += r.a[v] * r.a[v];
      }
      if (norm2 == 0.0)
        throw std::invalid_argument("infeasible target: equal frequencies forced");
      if (dot < 1.0) {
        ok = false;
        const double step = (1.0 - dot) / norm2;
        for (std::size_t v = 0; v < x.size(); ++v) x[v] += step * r.a[v];
      }
    }
    for (double& v : x)
      if (v < x_min) {
        v = x_min;
        ok = false;
      }
  }
  if (!ok)
    throw std::invalid_argument("infeasible target: no symmetric coupling set induces "
                                "the requested ordering");

  const double lo = *std::min_element(x.begin(), x.end());
  for (double& v : x) v *= min_abs_hz / lo;

  std::vector<double> couplings(static_cast<std::size_t>(n) * n, 0.0);
  for (std::size_t v = 0; v < pairs.size(); ++v) {
    const auto [i, j] = pairs[v];
    const double c = sign[v] * x[v];
    couplings[static_cast<std::size_t>(i) * n + j] = c;
    couplings[static_cast<std::size_t>(j) * n + i] = c;
  }

  // forward verification: the induced ordering must reproduce the target
  for (int i = 0; i < n; ++i) {
    std::vector<std::pair<double, std::uint32_t>> freq;
    for (std::uint32_t cfg = 0; cfg < n_cfg; ++cfg) {
      double f = 0.0;
      for (int j = 0; j < n; ++j) {
        if (j == i) continue;
        f += couplings[static_cast<std::size_t>(i) * n + j] *
             (1 - 2 * config_bit(cfg, i, j, n)) * 0.5;
      }
      freq.emplace_back(f, cfg);
    }
    std::sort(freq.begin(), freq.end(),
              [](const auto& a, const auto& b) { return a.first > b.first; });
    for (std::uint32_t k = 0; k < n_cfg; ++k)
      if (freq[k].second != orders.config_of_peak[static_cast<std::size_t>(i)][k])
        throw std::invalid_argument("infeasible target: relaxation result fails "
                                    "forward verification");
  }
  return couplings;
}

}  // namespace popsim
