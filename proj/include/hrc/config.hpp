#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hrc/cavity_config.hpp"
#include "hrc/errors.hpp"
#include "hrc/membrane.hpp"
#include "hrc/noise.hpp"

namespace hrc::cli {

// Parse or validation problem in a config file; location is "file:line" or
// the offending section/key.
class ConfigError : public ArgumentError {
 public:
  ConfigError(const std::string& location, const std::string& what)
      : ArgumentError(location + ": " + what), location_(location) {}
  const std::string& location() const noexcept { return location_; }

 private:
  std::string location_;
};

struct GridConfig {
  double f_min_hz = 1.0;
  double f_max_hz = 1e7;
  int points = 2000;
  bool log_spacing = true;

  std::vector<double> frequencies_hz() const;
  void validate() const;  // throws ConfigError naming `grid`
};

struct RunConfig {
  CavityConfig cavity;
  LaserConfig laser;
  MembraneGeometry membrane;
  std::optional<double> fundamental_hz;     // rescales the geometric ladder
  double mode_quality = 4.6e5;
  std::optional<double> mode_effective_mass;  // kg, default physical mass / 4
  int max_mode_index = 3;
  MechanicalMode mechanics;                 // test-mass dynamics for the noise budget
  GridConfig grid;
  int port = 2;
  double zeta = 1.5707963267948966;
  std::string output_dir = ".";
  std::string text;  // raw config bytes, for hashing

  void validate() const;
  ModeSet modes() const;
};

RunConfig parse_config(std::string_view text, const std::string& source = "<config>");
RunConfig load_config(const std::filesystem::path& path);
// Built-in defaults (the tabletop cavity), with an empty config text.
RunConfig default_config();

}  // namespace hrc::cli
