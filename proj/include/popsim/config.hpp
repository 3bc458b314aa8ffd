#pragma once

#include <map>
#include <string>
#include <tuple>
#include <vector>

#include <json.hpp>

#include "popsim/spin_system.hpp"

namespace popsim {

// On-disk system description, see data/fivequbit.json for the bundled example.
struct SystemConfig {
  std::vector<SpinDef> spins;
  // one entry per unordered pair: (name_a, name_b, coupling in Hz)
  std::vector<std::tuple<std::string, std::string, double>> couplings_hz;
  double t1eff_s = 0.65;
  std::map<std::string, double> species_weights;
};

SystemConfig parse_system_config(const nlohmann::json& j);
SystemConfig load_system_config(const std::string& path);
nlohmann::json system_config_to_json(const SystemConfig& cfg);

// Validates the config and builds the system. The coupling list must cover
// every unordered spin pair exactly once.
SpinSystem build_system(const SystemConfig& cfg);

// The bundled five-qubit example system (two 1H spins A, B and three 19F
// spins C, D, E). Identical to data/fivequbit.json.
const char* default_system_json();
SystemConfig default_system_config();
SpinSystem default_system();

}  // namespace popsim
