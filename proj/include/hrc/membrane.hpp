#pragma once

#include <span>
#include <vector>

#include "hrc/matrix.hpp"
#include "hrc/noise.hpp"

namespace hrc {

struct MembraneGeometry {
  double side_x = 1e-3;      // m
  double side_y = 1e-3;      // m
  double stress = 800e6;     // Pa
  double density = 2700.0;   // kg/m^3
  double thickness = 50e-9;  // m, only enters the physical mass

  double physical_mass() const { return density * side_x * side_y * thickness; }
  double sound_speed() const;  // sqrt(stress / (4 density)), m/s
  void validate() const;
};

struct MembraneMode {
  int m = 1, n = 1;
  double frequency_hz = 0.0;
  double effective_mass = 0.0;  // kg
  double quality = 0.0;

  MechanicalMode mechanical() const;
};

using ModeSet = std::vector<MembraneMode>;

// All (m, n) drum modes up to the given indices, sorted by frequency.
// Effective mass defaults to physical mass / 4.
ModeSet mode_frequencies(const MembraneGeometry& geom, int max_m, int max_n, double quality = 4.6e5);

// Rescales every frequency so the lowest mode sits at fundamental_hz
// (equivalent to fitting a single sound speed).
ModeSet rescale_to_fundamental(ModeSet modes, double fundamental_hz);

// Signal coefficient of the chosen port (single-mode, unit k_p A1 unless
// given) times the summed susceptibility of all modes.
std::vector<cplx> multimode_force_transfer(const ModeSet& modes, int port, double gamma,
                                           std::span<const double> omegas, double signal_scale = 1.0);

// 20 log10 |beta13 / beta23| at one frequency.
double port_ratio_db(double gamma, double omega);

// Quality factor from a ringdown recorded in dB (10 log10 of the decaying
// quantity): least-squares slope, then Q = -10 omega_m / (slope ln 10).
// Throws FitError if the trace does not decay.
double ringdown_q(std::span<const double> times, std::span<const double> level_db, double omega_m);

}  // namespace hrc
