#pragma once

#include <optional>

namespace hrc {

// Which of the two split ring-cavity resonances the carrier sits on.
// plus: e^{ikL} = r - it, minus: e^{ikL} = -r - it.
enum class CarrierBranch { plus, minus };

// Geometry and mirror amplitudes of the ring cavity. Lengths in metres,
// reflectivities/transmissivities are field amplitudes.
struct CavityConfig {
  double arm1_length = 0.0;           // input mirror -> test mass, clockwise
  double arm2_length = 0.0;           // input mirror -> test mass, counter-clockwise
  double input_reflectivity = 0.0;    // R
  double input_transmissivity = 0.0;  // T
  double mass_reflectivity = 0.0;     // r
  double mass_transmissivity = 0.0;   // t
  std::optional<double> linewidth_override;      // rad/s, replaces cT^2/(2L)
  CarrierBranch branch = CarrierBranch::plus;

  // Lossless cavity from power coefficients: T^2 of the input mirror and r^2
  // of the test mass, split equally between the arms.
  static CavityConfig lossless(double round_trip_length, double input_power_transmission,
                               double mass_power_reflectivity);

  double round_trip_length() const { return arm1_length + arm2_length; }
  double round_trip_time() const;
  double free_spectral_range_hz() const;
  double derived_linewidth() const;  // cT^2/(2L), rad/s
  double linewidth() const;          // override if set, rad/s
  double mixing_angle() const;       // theta with r = cos(theta)

  // Throws ArgumentError / NonPhysicalMirrorError.
  void validate() const;
};

// Table values of the tabletop experiment: L = 0.391 m, T^2 = 1%, r^2 = 4.6%.
CavityConfig tabletop_cavity();

struct LaserConfig {
  double wavelength = 1550e-9;  // m
  double input_power = 1e-5;    // W

  double wavenumber() const;         // k_p, rad/m
  double angular_frequency() const;  // omega_p, rad/s
  // A with I_in = hbar k_p c A^2 / 2.
  double amplitude() const;
  // Photon-flux amplitude sqrt(I_in / (hbar omega_p)).
  double flux_amplitude() const;

  void validate() const;
};

}  // namespace hrc
