#include <filesystem>
#include <fstream>

#include "doctest.h"
#include "hrc/config.hpp"
#include "hrc/constants.hpp"

using namespace hrc;
using hrc::cli::ConfigError;
using hrc::cli::parse_config;

namespace {

std::string error_of(const std::string& text) {
  try {
    parse_config(text, "test.cfg");
  } catch (const ConfigError& e) {
    return e.what();
  }
  return "";
}

}  // namespace

TEST_CASE("defaults reproduce the tabletop cavity") {
  const auto cfg = cli::default_config();
  CHECK(cfg.cavity.round_trip_length() == doctest::Approx(0.391));
  CHECK(cfg.cavity.input_transmissivity == doctest::Approx(0.1));
  CHECK(cfg.cavity.mass_reflectivity == doctest::Approx(std::sqrt(0.046)));
  CHECK(cfg.laser.wavelength == 1550e-9);
  CHECK(cfg.laser.input_power == 1e-5);
  CHECK(cfg.grid.points == 2000);
  CHECK(cfg.port == 2);
  CHECK(cfg.mechanics.mass == doctest::Approx(cfg.membrane.physical_mass() / 4));
  CHECK(cfg.mechanics.resonance == 0.0);
  CHECK(cfg.text.empty());
}

TEST_CASE("full configuration") {
  const auto cfg = parse_config(R"(
# comment
[cavity]
round_trip_length_m = 0.5
arm1_fraction = 0.4 ; inline comment
input_power_transmission = 0.02
mass_power_reflectivity = 0.1
linewidth_hz = 0.84e6
carrier_branch = minus
[laser]
wavelength_m = 1064e-9
input_power_w = 2
[membrane]
fundamental_hz = 395.2e3
quality_factor = 1e5
max_mode_index = 2
[mechanics]
effective_mass_kg = 3
resonance_hz = 10
quality_factor = 5
[grid]
f_min_hz = 10
f_max_hz = 1000
points = 3
spacing = linear
[readout]
port = 1
zeta_rad = 1.0
[output]
dir = results
)");
  CHECK(cfg.cavity.arm1_length == doctest::Approx(0.2));
  CHECK(cfg.cavity.arm2_length == doctest::Approx(0.3));
  CHECK(cfg.cavity.branch == CarrierBranch::minus);
  CHECK(cfg.cavity.linewidth() == doctest::Approx(constants::two_pi * 0.84e6));
  CHECK(cfg.laser.input_power == 2.0);
  CHECK(cfg.mechanics.mass == 3.0);
  CHECK(cfg.mechanics.half_linewidth == doctest::Approx(constants::two_pi * 10 / 10));
  CHECK(cfg.grid.frequencies_hz() == std::vector<double>{10, 505, 1000});
  CHECK(cfg.port == 1);
  CHECK(cfg.zeta == 1.0);
  CHECK(cfg.output_dir == "results");
  const auto modes = cfg.modes();
  CHECK(modes.size() == 4);
  CHECK(modes[0].frequency_hz == doctest::Approx(395.2e3));
  CHECK(modes[0].quality == 1e5);
}

TEST_CASE("log grid") {
  cli::GridConfig g{1.0, 1e4, 5, true};
  const auto f = g.frequencies_hz();
  CHECK(f.front() == 1.0);
  CHECK(f[1] == doctest::Approx(10.0));
  CHECK(f.back() == doctest::Approx(1e4));
}

TEST_CASE("configuration errors carry a location") {
  CHECK(error_of("") .find("empty configuration") != std::string::npos);
  CHECK(error_of("[cavity]\nbogus = 1\n").find("test.cfg:2") != std::string::npos);
  CHECK(error_of("[nonsense]\nx = 1\n").find("unknown section") != std::string::npos);
  CHECK(error_of("x = 1\n[cavity]\n").find("outside any section") != std::string::npos);
  CHECK(error_of("[grid]\nf_min_hz = 10\nf_max_hz = 10\n").find("grid") != std::string::npos);
  CHECK(error_of("[grid]\npoints = 1\n").find("grid") != std::string::npos);
  CHECK(error_of("[cavity]\nround_trip_length_m = abc\n").find("round_trip_length_m") != std::string::npos);
  CHECK(error_of("[cavity]\nmass_power_reflectivity = 1.5\n") != "");
  CHECK(error_of("[cavity]\ncarrier_branch = sideways\n") != "");
  CHECK(error_of("[readout]\nport = 3\n") != "");
  CHECK(error_of("[grid]\nspacing = cubic\n") != "");
  CHECK(error_of("[cavity\n") != "");
}

TEST_CASE("load_config") {
  const auto path = std::filesystem::temp_directory_path() / "hrc_test_config.cfg";
  {
    std::ofstream out(path);
    out << "[laser]\ninput_power_w = 0.5\n";
  }
  const auto cfg = cli::load_config(path);
  CHECK(cfg.laser.input_power == 0.5);
  CHECK(cfg.text == "[laser]\ninput_power_w = 0.5\n");
  std::filesystem::remove(path);
  CHECK_THROWS_AS(cli::load_config(path), ConfigError);
}
