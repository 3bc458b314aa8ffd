#include "popsim/reference_patterns.hpp"

#include <array>
#include <sstream>
#include <stdexcept>

namespace popsim {

namespace {

// state bits, then the signed peak of spins A..E
constexpr const char* kReferenceRows[] = {
    "00000 +A15 +B15 +C15 +D16 +E15",
    "00001 +A7 +B16 +C13 +D15 -E15",
    "00010 +A11 +B11 +C11 -D16 +E11",
    "00011 +A3 +B12 +C9 -D15 -E11",
    "00100 +A16 +B7 -C15 +D13 +E13",
    "00101 +A8 +B8 -C13 +D11 -E13",
    "00110 +A12 +B3 -C11 -D13 +E9",
    "00111 +A4 +B4 -C9 -D11 -E9",
    "01000 +A13 -B15 +C7 +D8 +E16",
    "01001 +A5 -B16 +C5 +D7 -E16",
    "01010 +A9 -B11 +C3 -D8 +E12",
    "01011 +A1 -B12 +C1 -D7 -E12",
    "01100 +A14 -B7 -C7 +D5 +E14",
    "01101 +A6 -B8 -C5 +D3 -E14",
    "01110 +A10 -B3 -C3 -D5 +E10",
    "01111 +A2 -B4 -C1 -D3 -E10",
    "10000 -A15 +B13 +C16 +D14 +E7",
    "10001 -A7 +B14 +C14 +D12 -E7",
    "10010 -A11 +B9 +C12 -D14 +E3",
    "10011 -A3 +B10 +C10 -D12 -E3",
    "10100 -A16 +B5 -C16 +D10 +E5",
    "10101 -A8 +B6 -C14 +D9 -E5",
    "10110 -A12 +B1 -C12 -D10 +E1",
    "10111 -A4 +B2 -C10 -D9 -E1",
    "11000 -A13 -B13 +C8 +D6 +E8",
    "11001 -A5 -B14 +C6 +D4 -E8",
    "11010 -A9 -B9 +C4 -D6 +E4",
    "11011 -A1 -B10 +C2 -D4 -E4",
    "11100 -A14 -B5 -C8 +D2 +E6",
    "11101 -A6 -B6 -C6 +D1 -E6",
    "11110 -A10 -B1 -C4 -D2 +E2",
    "11111 -A2 -B2 -C2 -D1 -E2",
};

std::vector<ReferenceRow> parse_rows() {
  std::vector<ReferenceRow> rows;
  for (const char* line : kReferenceRows) {
    std::istringstream in(line);
    ReferenceRow row;
    in >> row.state_bits;
    std::string tok;
    while (in >> tok) {
      if (tok.size() < 3 || (tok[0] != '+' && tok[0] != '-'))
        throw std::logic_error("bad reference entry: " + tok);
      SignedPeak p;
      p.sign = tok[0] == '+' ? +1 : -1;
      p.spin = tok[1] - 'A';
      p.peak_index = std::stoi(tok.substr(2));
      row.entries.push_back(p);
    }
    if (row.entries.size() != 5) throw std::logic_error("bad reference row: " + row.state_bits);
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace

const std::vector<ReferenceRow>& reference_pattern_table() {
  static const std::vector<ReferenceRow> rows = parse_rows();
  return rows;
}

bool matches_reference_layout(const SpinSystem& sys) {
  static const std::array<const char*, 5> names = {"A", "B", "C", "D", "E"};
  static const std::array<const char*, 5> species = {"1H", "1H", "19F", "19F", "19F"};
  if (sys.n_spins() != 5) return false;
  for (int i = 0; i < 5; ++i)
    if (sys.spin(i).name != names[static_cast<std::size_t>(i)] ||
        sys.spin(i).species != species[static_cast<std::size_t>(i)])
      return false;
  return true;
}

TableDiff diff_against_reference(const SpinSystem& sys) {
  if (!matches_reference_layout(sys))
    throw std::invalid_argument("system does not have the reference five-qubit layout");
  TableDiff diff;
  for (const auto& row : reference_pattern_table()) {
    const auto state = BasisState::from_bits(row.state_bits);
    const auto pattern = sys.pattern_of(state);
    for (std::size_t i = 0; i < row.entries.size(); ++i) {
      ++diff.total;
      if (pattern[i] == row.entries[i]) {
        ++diff.matched;
      } else {
        std::ostringstream msg;
        msg << "state " << row.state_bits << " spin " << sys.spin(pattern[i].spin).name
            << ": expected " << (row.entries[i].sign > 0 ? "+" : "-")
            << sys.spin(row.entries[i].spin).name << row.entries[i].peak_index << ", got "
            << (pattern[i].sign > 0 ? "+" : "-") << sys.spin(pattern[i].spin).name
            << pattern[i].peak_index;
        diff.mismatches.push_back(msg.str());
      }
    }
  }
  return diff;
}

}  // namespace popsim
