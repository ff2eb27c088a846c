#include "hrc/meters.hpp"

#include <cmath>
#include <limits>

#include "hrc/constants.hpp"
#include "hrc/errors.hpp"

namespace hrc {

namespace {

using constants::c;
using constants::hbar;

MeterSpectra spectra_with_delay_factor(const MeterParams& p, double delay_factor) {
  const double A = p.amplitude();
  const double s = std::sin(p.zeta);
  const double d2 = delay_factor * delay_factor;
  MeterSpectra out;
  out.xx = std::abs(s) < 1e-15 ? std::numeric_limits<double>::infinity()
                    : 1.0 / (4.0 * p.k_p * p.k_p * A * A * d2 * s * s);
  out.ff = 4.0 * hbar * hbar * p.k_p * p.k_p * A * A * d2;
  out.xf = -hbar * std::cos(p.zeta) / s;
  return out;
}

}  // namespace

double MeterParams::amplitude() const { return std::sqrt(power / (hbar * k_p * c)); }

void MeterParams::validate(MeterKind kind) const {
  if (!(k_p > 0.0) || !(power > 0.0) || !(mass > 0.0)) {
    throw ArgumentError("meter: k_p, power and mass must be positive");
  }
  if (kind == MeterKind::speed && !(delay > 0.0)) {
    throw ArgumentError("meter: speedmeter delay must be positive");
  }
}

MeterSpectra meter_spectra(const MeterParams& p, MeterKind kind, double omega) {
  p.validate(kind);
  return spectra_with_delay_factor(p, kind == MeterKind::speed ? omega * p.delay : 1.0);
}

MeterSpectra speedmeter_spectra_exact_phase(const MeterParams& p, double omega) {
  p.validate(MeterKind::speed);
  return spectra_with_delay_factor(p, 2.0 * std::sin(0.5 * omega * p.delay));
}

double meter_sensitivity(const MeterParams& p, MeterKind kind, double omega) {
  const auto s = meter_spectra(p, kind, omega);
  const double mw2 = p.mass * omega * omega;
  return s.xx - 2.0 * s.xf / mw2 + s.ff / (mw2 * mw2);
}

double coupling_factor(const MeterParams& p, MeterKind kind, double omega) {
  p.validate(kind);
  const double base = 4.0 * p.k_p * p.power / (p.mass * c);
  return kind == MeterKind::speed ? base * p.delay * p.delay : base / (omega * omega);
}

double optimal_homodyne_angle(const MeterParams& p, MeterKind kind, double omega) {
  return std::atan2(1.0, -coupling_factor(p, kind, omega));
}

double optimal_sensitivity(const MeterParams& p, MeterKind kind, double omega) {
  p.validate(kind);
  const double base = hbar * c / (4.0 * p.k_p * p.power);
  return kind == MeterKind::speed ? base / (p.delay * p.delay * omega * omega) : base;
}

}  // namespace hrc
