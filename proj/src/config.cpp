#include "hrc/config.hpp"

#include <boost/property_tree/ini_parser.hpp>
#include <boost/property_tree/ptree.hpp>
#include <cmath>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "hrc/constants.hpp"

namespace hrc::cli {

namespace pt = boost::property_tree;

namespace {

const std::map<std::string, std::set<std::string>>& schema() {
  static const std::map<std::string, std::set<std::string>> s{
      {"cavity",
       {"round_trip_length_m", "arm1_fraction", "input_power_transmission", "mass_power_reflectivity",
        "linewidth_hz", "carrier_branch"}},
      {"laser", {"wavelength_m", "input_power_w"}},
      {"membrane",
       {"side_x_m", "side_y_m", "stress_pa", "density_kg_m3", "thickness_m", "fundamental_hz",
        "quality_factor", "effective_mass_kg", "max_mode_index"}},
      {"mechanics", {"effective_mass_kg", "resonance_hz", "quality_factor"}},
      {"grid", {"f_min_hz", "f_max_hz", "points", "spacing"}},
      {"readout", {"port", "zeta_rad"}},
      {"output", {"dir"}},
  };
  return s;
}

// Line of "[section]" / "key =" in the raw text, for error locations.
int find_line(std::string_view text, const std::string& section, const std::string& key) {
  std::istringstream in{std::string(text)};
  std::string line;
  std::string current;
  int n = 0;
  while (std::getline(in, line)) {
    ++n;
    const auto first = line.find_first_not_of(" \t");
    if (first == std::string::npos) continue;
    if (line[first] == '[') {
      const auto close = line.find(']', first);
      current = line.substr(first + 1, close - first - 1);
      if (key.empty() && current == section) return n;
      continue;
    }
    const auto eq = line.find('=');
    if (eq == std::string::npos) continue;
    auto name = line.substr(first, eq - first);
    name.erase(name.find_last_not_of(" \t") + 1);
    if (current == section && name == key) return n;
  }
  return 0;
}

class Reader {
 public:
  Reader(const pt::ptree& tree, std::string_view text, std::string source)
      : tree_(tree), text_(text), source_(std::move(source)) {}

  std::string where(const std::string& section, const std::string& key) const {
    const int line = find_line(text_, section, key);
    std::string loc = source_;
    if (line > 0) loc += ":" + std::to_string(line);
    return loc + " [" + section + (key.empty() ? "" : "] " + key);
  }

  std::optional<std::string> raw(const std::string& section, const std::string& key) const {
    const auto sec = tree_.get_child_optional(section);
    if (!sec) return std::nullopt;
    const auto v = sec->get_optional<std::string>(key);
    if (!v) return std::nullopt;
    std::string s = *v;
    const auto hash = s.find_first_of("#;");
    if (hash != std::string::npos) s.erase(hash);
    s.erase(0, s.find_first_not_of(" \t"));
    s.erase(s.find_last_not_of(" \t\r") + 1);
    return s;
  }

  std::optional<double> number(const std::string& section, const std::string& key) const {
    const auto s = raw(section, key);
    if (!s) return std::nullopt;
    try {
      std::size_t used = 0;
      const double v = std::stod(*s, &used);
      if (used != s->size() || !std::isfinite(v)) throw std::invalid_argument("trailing");
      return v;
    } catch (const std::exception&) {
      throw ConfigError(where(section, key), "expected a number, got '" + *s + "'");
    }
  }

  std::optional<int> integer(const std::string& section, const std::string& key) const {
    const auto v = number(section, key);
    if (!v) return std::nullopt;
    if (std::floor(*v) != *v) throw ConfigError(where(section, key), "expected an integer");
    return static_cast<int>(*v);
  }

 private:
  const pt::ptree& tree_;
  std::string_view text_;
  std::string source_;
};

}  // namespace

std::vector<double> GridConfig::frequencies_hz() const {
  validate();
  std::vector<double> f(static_cast<std::size_t>(points));
  for (int i = 0; i < points; ++i) {
    const double u = static_cast<double>(i) / (points - 1);
    f[static_cast<std::size_t>(i)] =
        log_spacing ? f_min_hz * std::pow(f_max_hz / f_min_hz, u) : f_min_hz + u * (f_max_hz - f_min_hz);
  }
  return f;
}

void GridConfig::validate() const {
  if (!(f_min_hz < f_max_hz)) throw ConfigError("grid", "f_min_hz must be smaller than f_max_hz");
  if (points < 2) throw ConfigError("grid", "points must be at least 2");
  if (log_spacing && !(f_min_hz > 0.0)) throw ConfigError("grid", "log spacing needs f_min_hz > 0");
}

void RunConfig::validate() const {
  try {
    cavity.validate();
    laser.validate();
    membrane.validate();
    mechanics.validate();
  } catch (const ConfigError&) {
    throw;
  } catch (const ArgumentError& e) {
    throw ConfigError("config", e.what());
  }
  grid.validate();
  if (port != 1 && port != 2) throw ConfigError("readout", "port must be 1 or 2");
  if (max_mode_index < 1) throw ConfigError("membrane", "max_mode_index must be >= 1");
  if (!(mode_quality > 0.0)) throw ConfigError("membrane", "quality_factor must be positive");
}

ModeSet RunConfig::modes() const {
  ModeSet modes = mode_frequencies(membrane, max_mode_index, max_mode_index, mode_quality);
  if (fundamental_hz) modes = rescale_to_fundamental(std::move(modes), *fundamental_hz);
  if (mode_effective_mass) {
    for (auto& m : modes) m.effective_mass = *mode_effective_mass;
  }
  return modes;
}

RunConfig parse_config(std::string_view text, const std::string& source) {
  pt::ptree tree;
  {
    std::istringstream in{std::string(text)};
    try {
      pt::read_ini(in, tree);
    } catch (const pt::ini_parser_error& e) {
      throw ConfigError(source + ":" + std::to_string(e.line()), e.message());
    }
  }
  if (tree.empty()) throw ConfigError(source, "empty configuration");

  Reader rd(tree, text, source);
  for (const auto& [section, body] : tree) {
    const auto it = schema().find(section);
    if (body.empty() && !body.data().empty()) {
      throw ConfigError(source, "key '" + section + "' outside any section");
    }
    if (it == schema().end()) throw ConfigError(rd.where(section, ""), "unknown section");
    for (const auto& [key, value] : body) {
      if (!it->second.contains(key)) throw ConfigError(rd.where(section, key), "unknown key");
    }
  }

  RunConfig cfg;
  cfg.text = std::string(text);
  const double length = rd.number("cavity", "round_trip_length_m").value_or(0.391);
  const double fraction = rd.number("cavity", "arm1_fraction").value_or(0.5);
  if (!(fraction > 0.0 && fraction < 1.0)) {
    throw ConfigError(rd.where("cavity", "arm1_fraction"), "must lie strictly between 0 and 1");
  }
  const double T2 = rd.number("cavity", "input_power_transmission").value_or(0.01);
  const double r2 = rd.number("cavity", "mass_power_reflectivity").value_or(0.046);
  if (!(T2 > 0.0 && T2 <= 1.0)) {
    throw ConfigError(rd.where("cavity", "input_power_transmission"), "must lie in (0, 1]");
  }
  if (!(r2 >= 0.0 && r2 <= 1.0)) {
    throw ConfigError(rd.where("cavity", "mass_power_reflectivity"), "must lie in [0, 1]");
  }
  cfg.cavity = CavityConfig::lossless(length, T2, r2);
  cfg.cavity.arm1_length = fraction * length;
  cfg.cavity.arm2_length = (1.0 - fraction) * length;
  if (const auto lw = rd.number("cavity", "linewidth_hz")) cfg.cavity.linewidth_override = constants::two_pi * *lw;
  if (const auto branch = rd.raw("cavity", "carrier_branch")) {
    if (*branch == "plus") {
      cfg.cavity.branch = CarrierBranch::plus;
    } else if (*branch == "minus") {
      cfg.cavity.branch = CarrierBranch::minus;
    } else {
      throw ConfigError(rd.where("cavity", "carrier_branch"), "expected 'plus' or 'minus'");
    }
  }

  cfg.laser.wavelength = rd.number("laser", "wavelength_m").value_or(1550e-9);
  cfg.laser.input_power = rd.number("laser", "input_power_w").value_or(1e-5);

  cfg.membrane.side_x = rd.number("membrane", "side_x_m").value_or(1e-3);
  cfg.membrane.side_y = rd.number("membrane", "side_y_m").value_or(1e-3);
  cfg.membrane.stress = rd.number("membrane", "stress_pa").value_or(800e6);
  cfg.membrane.density = rd.number("membrane", "density_kg_m3").value_or(2700.0);
  cfg.membrane.thickness = rd.number("membrane", "thickness_m").value_or(50e-9);
  cfg.fundamental_hz = rd.number("membrane", "fundamental_hz");
  cfg.mode_quality = rd.number("membrane", "quality_factor").value_or(4.6e5);
  cfg.mode_effective_mass = rd.number("membrane", "effective_mass_kg");
  cfg.max_mode_index = rd.integer("membrane", "max_mode_index").value_or(3);

  const double default_mass = cfg.mode_effective_mass.value_or(cfg.membrane.physical_mass() / 4.0);
  cfg.mechanics.mass = rd.number("mechanics", "effective_mass_kg").value_or(default_mass);
  const double f_m = rd.number("mechanics", "resonance_hz").value_or(0.0);
  cfg.mechanics.resonance = constants::two_pi * f_m;
  if (const auto q = rd.number("mechanics", "quality_factor")) {
    if (!(*q > 0.0)) throw ConfigError(rd.where("mechanics", "quality_factor"), "must be positive");
    cfg.mechanics.half_linewidth = cfg.mechanics.resonance / (2.0 * *q);
  }

  cfg.grid.f_min_hz = rd.number("grid", "f_min_hz").value_or(cfg.grid.f_min_hz);
  cfg.grid.f_max_hz = rd.number("grid", "f_max_hz").value_or(cfg.grid.f_max_hz);
  cfg.grid.points = rd.integer("grid", "points").value_or(cfg.grid.points);
  if (const auto spacing = rd.raw("grid", "spacing")) {
    if (*spacing == "log") {
      cfg.grid.log_spacing = true;
    } else if (*spacing == "linear") {
      cfg.grid.log_spacing = false;
    } else {
      throw ConfigError(rd.where("grid", "spacing"), "expected 'log' or 'linear'");
    }
  }

  cfg.port = rd.integer("readout", "port").value_or(2);
  cfg.zeta = rd.number("readout", "zeta_rad").value_or(cfg.zeta);
  cfg.output_dir = rd.raw("output", "dir").value_or(".");

  cfg.validate();
  return cfg;
}

RunConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError(path.string(), "cannot open config file");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_config(buf.str(), path.string());
}

RunConfig default_config() {
  auto cfg = parse_config("[readout]\nport = 2\n", "<defaults>");
  cfg.text.clear();
  return cfg;
}

}  // namespace hrc::cli
