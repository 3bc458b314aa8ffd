#include "popsim/config.hpp"

#include <fstream>
#include <stdexcept>

namespace popsim {

namespace {

const char* kDefaultSystemJson = R"json({
  "spins": [
    {"name": "A", "species": "1H",  "offset_hz": 0.0,    "t2star_s": 0.086},
    {"name": "B", "species": "1H",  "offset_hz": 2000.0, "t2star_s": 0.145},
    {"name": "C", "species": "19F", "offset_hz": 0.0,    "t2star_s": 0.120},
    {"name": "D", "species": "19F", "offset_hz": 3000.0, "t2star_s": 0.100},
    {"name": "E", "species": "19F", "offset_hz": 6000.0, "t2star_s": 0.130}
  ],
  "couplings_hz": [
    ["A", "B", -80.0],
    ["A", "C", 40.0],
    ["A", "D", -200.0],
    ["A", "E", -360.0],
    ["B", "C", -800.0],
    ["B", "D", -640.0],
    ["B", "E", 48.0],
    ["C", "D", -240.0],
    ["C", "E", -80.0],
    ["D", "E", -160.0]
  ],
  "t1eff_s": 0.65,
  "species_weights": {"1H": 1.0, "19F": 1.0}
})json";

}  // namespace

SystemConfig parse_system_config(const nlohmann::json& j) {
  SystemConfig cfg;
  if (!j.is_object() || !j.contains("spins") || !j.contains("couplings_hz"))
    throw std::invalid_argument("system config needs 'spins' and 'couplings_hz'");
  for (const auto& js : j.at("spins")) {
    SpinDef s;
    s.name = js.at("name").get<std::string>();
    s.species = js.at("species").get<std::string>();
    s.offset_hz = js.at("offset_hz").get<double>();
    s.t2star_s = js.at("t2star_s").get<double>();
    cfg.spins.push_back(std::move(s));
  }
  for (const auto& jc : j.at("couplings_hz")) {
    if (!jc.is_array() || jc.size() != 3)
      throw std::invalid_argument("each coupling entry must be [name, name, hz]");
    cfg.couplings_hz.emplace_back(jc.at(0).get<std::string>(), jc.at(1).get<std::string>(),
                                  jc.at(2).get<double>());
  }
  if (j.contains("t1eff_s")) cfg.t1eff_s = j.at("t1eff_s").get<double>();
  if (j.contains("species_weights"))
    for (const auto& [tag, w] : j.at("species_weights").items())
      cfg.species_weights[tag] = w.get<double>();
  return cfg;
}

SystemConfig load_system_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open system config '" + path + "'");
  nlohmann::json j;
  in >> j;
  return parse_system_config(j);
}

nlohmann::json system_config_to_json(const SystemConfig& cfg) {
  nlohmann::json j;
  j["spins"] = nlohmann::json::array();
  for (const auto& s : cfg.spins)
    j["spins"].push_back({{"name", s.name},
                          {"species", s.species},
                          {"offset_hz", s.offset_hz},
                          {"t2star_s", s.t2star_s}});
  j["couplings_hz"] = nlohmann::json::array();
  for (const auto& [a, b, c] : cfg.couplings_hz)
    j["couplings_hz"].push_back({a, b, c});
  j["t1eff_s"] = cfg.t1eff_s;
  if (!cfg.species_weights.empty()) j["species_weights"] = cfg.species_weights;
  return j;
}

SpinSystem build_system(const SystemConfig& cfg) {
  const int n = static_cast<int>(cfg.spins.size());
  if (n < 2) throw std::invalid_argument("system config lists fewer than 2 spins");

  std::vector<double> table(static_cast<std::size_t>(n) * n, 0.0);
  std::vector<bool> seen(static_cast<std::size_t>(n) * n, false);
  auto index_of = [&](const std::string& name) {
    for (int i = 0; i < n; ++i)
      if (cfg.spins[static_cast<std::size_t>(i)].name == name) return i;
    throw std::invalid_argument("coupling references unknown spin '" + name + "'");
  };
  for (const auto& [na, nb, c] : cfg.couplings_hz) {
    const int a = index_of(na), b = index_of(nb);
    if (a == b) throw std::invalid_argument("self-coupling for spin '" + na + "'");
    const std::size_t ab = static_cast<std::size_t>(a) * n + b;
    const std::size_t ba = static_cast<std::size_t>(b) * n + a;
    if (seen[ab]) throw std::invalid_argument("duplicate coupling (" + na + "," + nb + ")");
    seen[ab] = seen[ba] = true;
    table[ab] = table[ba] = c;
  }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < i; ++j)
      if (!seen[static_cast<std::size_t>(i) * n + j])
        throw std::invalid_argument("coupling table incomplete: missing (" +
                                    cfg.spins[static_cast<std::size_t>(i)].name + "," +
                                    cfg.spins[static_cast<std::size_t>(j)].name + ")");

  return SpinSystem(cfg.spins, std::move(table), cfg.t1eff_s, cfg.species_weights);
}

const char* default_system_json() { return kDefaultSystemJson; }

SystemConfig default_system_config() {
  return parse_system_config(nlohmann::json::parse(default_system_json()));
}

SpinSystem default_system() { return build_system(default_system_config()); }

}  // namespace popsim
