#include "hrc/membrane.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "hrc/constants.hpp"
#include "hrc/errors.hpp"
#include "hrc/transfer.hpp"

namespace hrc {

double MembraneGeometry::sound_speed() const { return std::sqrt(stress / (4.0 * density)); }

void MembraneGeometry::validate() const {
  for (double v : {side_x, side_y, stress, density, thickness}) {
    if (!(v > 0.0) || !std::isfinite(v)) {
      throw ArgumentError("membrane: sides, stress, density and thickness must be positive");
    }
  }
}

MechanicalMode MembraneMode::mechanical() const {
  const double w = constants::two_pi * frequency_hz;
  return {effective_mass, w, w / (2.0 * quality)};
}

ModeSet mode_frequencies(const MembraneGeometry& geom, int max_m, int max_n, double quality) {
  geom.validate();
  if (max_m < 1 || max_n < 1) throw ArgumentError("membrane: mode indices must be >= 1");
  if (!(quality > 0.0)) throw ArgumentError("membrane: quality factor must be positive");
  ModeSet modes;
  const double v = geom.sound_speed();
  const double mass = geom.physical_mass() / 4.0;
  for (int m = 1; m <= max_m; ++m) {
    for (int n = 1; n <= max_n; ++n) {
      const double kx = m / geom.side_x;
      const double ky = n / geom.side_y;
      modes.push_back({m, n, v * std::sqrt(kx * kx + ky * ky), mass, quality});
    }
  }
  std::stable_sort(modes.begin(), modes.end(),
                   [](const auto& a, const auto& b) { return a.frequency_hz < b.frequency_hz; });
  return modes;
}

ModeSet rescale_to_fundamental(ModeSet modes, double fundamental_hz) {
  if (modes.empty()) throw ArgumentError("membrane: empty mode set");
  if (!(fundamental_hz > 0.0)) throw ArgumentError("membrane: fundamental must be positive");
  const double lowest = std::min_element(modes.begin(), modes.end(), [](const auto& a, const auto& b) {
                          return a.frequency_hz < b.frequency_hz;
                        })->frequency_hz;
  const double scale = fundamental_hz / lowest;
  for (auto& mode : modes) mode.frequency_hz *= scale;
  return modes;
}

std::vector<cplx> multimode_force_transfer(const ModeSet& modes, int port, double gamma,
                                           std::span<const double> omegas, double signal_scale) {
  if (modes.empty()) throw ArgumentError("membrane: empty mode set");
  if (port != 1 && port != 2) throw ArgumentError("membrane: port must be 1 or 2");
  std::vector<MechanicalMode> mech;
  mech.reserve(modes.size());
  for (const auto& mode : modes) mech.push_back(mode.mechanical());

  std::vector<cplx> out;
  out.reserve(omegas.size());
  for (double omega : omegas) {
    cplx chi = 0.0;
    for (const auto& m : mech) chi += mechanical_susceptibility(m, omega);
    const auto ts = transfer_single_mode(gamma, 1.0, signal_scale, omega);
    out.push_back((port == 1 ? ts.b13 : ts.b23) * chi);
  }
  return out;
}

double port_ratio_db(double gamma, double omega) {
  const auto ts = transfer_single_mode(gamma, 1.0, 1.0, omega);
  return 20.0 * std::log10(std::abs(ts.b13 / ts.b23));
}

double ringdown_q(std::span<const double> times, std::span<const double> level_db, double omega_m) {
  if (times.size() != level_db.size() || times.size() < 2) {
    throw ArgumentError("ringdown: need at least two (time, level) samples");
  }
  if (!(omega_m > 0.0)) throw ArgumentError("ringdown: mechanical frequency must be positive");
  const double n = static_cast<double>(times.size());
  const double t_mean = std::accumulate(times.begin(), times.end(), 0.0) / n;
  const double y_mean = std::accumulate(level_db.begin(), level_db.end(), 0.0) / n;
  double sxy = 0.0;
  double sxx = 0.0;
  for (std::size_t i = 0; i < times.size(); ++i) {
    sxy += (times[i] - t_mean) * (level_db[i] - y_mean);
    sxx += (times[i] - t_mean) * (times[i] - t_mean);
  }
  if (!(sxx > 0.0)) throw ArgumentError("ringdown: sample times must not all coincide");
  const double slope = sxy / sxx;
  if (!(slope < 0.0)) {
    throw FitError("ringdown: trace does not decay (slope " + std::to_string(slope) + " dB/s)");
  }
  return -10.0 * omega_m / (slope * std::log(10.0));
}

}  // namespace hrc
