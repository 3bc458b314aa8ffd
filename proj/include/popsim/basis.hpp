#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace popsim {

// Computational basis state of an N-qubit register. Qubit 0 is the leftmost
// bit of the label and the most significant bit of the index, so the label
// "00101" has index 5.
struct BasisState {
  std::uint32_t index = 0;
  int n = 0;

  int bit(int spin) const { return static_cast<int>((index >> (n - 1 - spin)) & 1u); }

  BasisState with_bit(int spin, int value) const {
    const std::uint32_t mask = 1u << (n - 1 - spin);
    return {value ? (index | mask) : (index & ~mask), n};
  }

  BasisState flipped(int spin) const {
    return {index ^ (1u << (n - 1 - spin)), n};
  }

  std::string bits() const {
    std::string s(static_cast<std::size_t>(n), '0');
    for (int i = 0; i < n; ++i)
      if (bit(i)) s[static_cast<std::size_t>(i)] = '1';
    return s;
  }

  static BasisState from_bits(std::string_view s) {
    if (s.empty() || s.size() > 32)
      throw std::invalid_argument("basis state label must have 1..32 bits");
    std::uint32_t idx = 0;
    for (char c : s) {
      if (c != '0' && c != '1')
        throw std::invalid_argument("basis state label may contain only 0 and 1: '" +
                                    std::string(s) + "'");
      idx = (idx << 1) | static_cast<std::uint32_t>(c - '0');
    }
    return {idx, static_cast<int>(s.size())};
  }

  friend bool operator==(const BasisState&, const BasisState&) = default;
};

// Configuration of the N-1 spins other than `spin`, packed in spin order with
// the first remaining spin as the most significant bit.
inline std::uint32_t neighbor_config(const BasisState& s, int spin) {
  std::uint32_t cfg = 0;
  for (int j = 0; j < s.n; ++j) {
    if (j == spin) continue;
    cfg = (cfg << 1) | static_cast<std::uint32_t>(s.bit(j));
  }
  return cfg;
}

// Inverse of neighbor_config: rebuild the full state by inserting `bit` at
// position `spin`.
inline BasisState insert_bit(std::uint32_t config, int spin, int bit, int n) {
  BasisState s{0, n};
  int k = 0;
  for (int j = 0; j < n; ++j) {
    if (j == spin) continue;
    s = s.with_bit(j, static_cast<int>((config >> (n - 2 - k)) & 1u));
    ++k;
  }
  return s.with_bit(spin, bit);
}

}  // namespace popsim
