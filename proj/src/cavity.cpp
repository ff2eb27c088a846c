#include "hrc/cavity.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "hrc/constants.hpp"
#include "hrc/errors.hpp"

namespace hrc {

namespace {

constexpr long double kTwoPiL = 6.283185307179586476925286766559005768L;

double wrap(long double phase) {
  phase = std::fmod(phase, kTwoPiL);
  if (phase < 0) phase += kTwoPiL;
  return static_cast<double>(phase);
}

double wrap(double phase) { return wrap(static_cast<long double>(phase)); }

}  // namespace

CavityConfig CavityConfig::lossless(double round_trip_length, double input_power_transmission,
                                    double mass_power_reflectivity) {
  CavityConfig cfg;
  cfg.arm1_length = 0.5 * round_trip_length;
  cfg.arm2_length = 0.5 * round_trip_length;
  cfg.input_transmissivity = std::sqrt(input_power_transmission);
  cfg.input_reflectivity = std::sqrt(1.0 - input_power_transmission);
  cfg.mass_reflectivity = std::sqrt(mass_power_reflectivity);
  cfg.mass_transmissivity = std::sqrt(1.0 - mass_power_reflectivity);
  return cfg;
}

CavityConfig tabletop_cavity() { return CavityConfig::lossless(0.391, 0.01, 0.046); }

double CavityConfig::round_trip_time() const { return round_trip_length() / constants::c; }

double CavityConfig::free_spectral_range_hz() const { return constants::c / round_trip_length(); }

double CavityConfig::derived_linewidth() const {
  return constants::c * input_transmissivity * input_transmissivity / (2.0 * round_trip_length());
}

double CavityConfig::linewidth() const { return linewidth_override.value_or(derived_linewidth()); }

double CavityConfig::mixing_angle() const { return std::atan2(mass_transmissivity, mass_reflectivity); }

void CavityConfig::validate() const {
  auto finite_nonneg = [](double v) { return std::isfinite(v) && v >= 0.0; };
  if (!(arm1_length > 0.0) || !(arm2_length > 0.0) || !std::isfinite(round_trip_length())) {
    throw ArgumentError("cavity: arm lengths must be positive and finite");
  }
  if (!finite_nonneg(input_reflectivity) || !finite_nonneg(input_transmissivity) ||
      !finite_nonneg(mass_reflectivity) || !finite_nonneg(mass_transmissivity)) {
    throw ArgumentError("cavity: mirror amplitudes must be finite and non-negative");
  }
  const double front = input_reflectivity * input_reflectivity +
                       input_transmissivity * input_transmissivity;
  const double mass = mass_reflectivity * mass_reflectivity +
                      mass_transmissivity * mass_transmissivity;
  if (front > 1.0 + 1e-12) {
    throw NonPhysicalMirrorError("cavity: input mirror R^2 + T^2 = " + std::to_string(front) + " > 1");
  }
  if (mass > 1.0 + 1e-12) {
    throw NonPhysicalMirrorError("cavity: test mass r^2 + t^2 = " + std::to_string(mass) + " > 1");
  }
  if (!(linewidth() > 0.0) || !std::isfinite(linewidth())) {
    throw ArgumentError("cavity: linewidth must be positive (input transmissivity or override)");
  }
}

double LaserConfig::wavenumber() const { return constants::two_pi / wavelength; }

double LaserConfig::angular_frequency() const { return wavenumber() * constants::c; }

double LaserConfig::amplitude() const {
  return std::sqrt(2.0 * input_power / (constants::hbar * wavenumber() * constants::c));
}

double LaserConfig::flux_amplitude() const {
  return std::sqrt(input_power / (constants::hbar * angular_frequency()));
}

void LaserConfig::validate() const {
  if (!(wavelength > 0.0) || !std::isfinite(wavelength)) {
    throw ArgumentError("laser: wavelength must be positive");
  }
  if (!(input_power > 0.0) || !std::isfinite(input_power)) {
    throw ArgumentError("laser: input power must be positive");
  }
}

double Carrier::round_trip_phase() const {
  return wrap(static_cast<long double>(arm1_phase) + arm2_phase);
}

Carrier carrier_at(const CavityConfig& cfg, double k) {
  return {k, reduced_phase(k, cfg.arm1_length), reduced_phase(k, cfg.arm2_length)};
}

Carrier tune_carrier(const CavityConfig& cfg, const LaserConfig& laser) {
  cfg.validate();
  laser.validate();
  const double r = cfg.mass_reflectivity;
  const double t = cfg.mass_transmissivity;
  const double sign = cfg.branch == CarrierBranch::plus ? 1.0 : -1.0;
  const long double target = wrap(std::atan2(-t, sign * r));
  const long double length = static_cast<long double>(cfg.arm1_length) + cfg.arm2_length;
  const long double order =
      std::round((static_cast<long double>(laser.wavenumber()) * length - target) / kTwoPiL);
  const long double total = target + kTwoPiL * order;
  Carrier carrier;
  carrier.wavenumber = static_cast<double>(total / length);
  carrier.arm1_phase = wrap(total * cfg.arm1_length / length);
  carrier.arm2_phase = wrap(target - carrier.arm1_phase);
  return carrier;
}

Complex2Matrix propagation_matrix(const CavityConfig& cfg, const Carrier& carrier, double omega) {
  if (!(cfg.arm1_length > 0.0) || !(cfg.arm2_length > 0.0)) {
    throw ArgumentError("propagation: arm lengths must be positive");
  }
  const double q = omega / constants::c;
  return phase_matrix(carrier.arm1_phase + q * cfg.arm1_length,
                      carrier.arm2_phase + q * cfg.arm2_length);
}

namespace {

cplx resonance_factor_at(const CavityConfig& cfg, double round_trip_phase) {
  const double R = cfg.input_reflectivity;
  const cplx e = std::polar(1.0, round_trip_phase);
  return R * R * e * e + cplx{0.0, 2.0 * R * cfg.mass_transmissivity} * e - 1.0;
}

}  // namespace

cplx resonance_factor(const CavityConfig& cfg, double k, double omega) {
  return resonance_factor(cfg, carrier_at(cfg, k), omega);
}

cplx resonance_factor(const CavityConfig& cfg, const Carrier& carrier, double omega) {
  return resonance_factor_at(cfg, carrier.round_trip_phase() +
                                      omega * cfg.round_trip_length() / constants::c);
}

ClassicalSolution classical_fields(const CavityConfig& cfg, const Carrier& carrier,
                                   const Complex2Vector& input) {
  cfg.validate();
  const auto P = propagation_matrix(cfg, carrier, 0.0);
  const auto M = mirror_matrix(cfg.mass_reflectivity, cfg.mass_transmissivity);
  const double R = cfg.input_reflectivity;
  const double T = cfg.input_transmissivity;
  const auto s1 = pauli(1);
  const auto round_trip = P * M * P;
  const auto K = invert2(Complex2Matrix::identity() - R * (round_trip * s1));

  ClassicalSolution sol;
  sol.C = K * (T * (round_trip * input));
  sol.B = T * sol.C - R * (s1 * input);
  sol.D = R * (s1 * sol.C) + T * input;
  sol.E = P * sol.D;
  sol.F = M * sol.E;
  sol.resonance_factor = resonance_factor(cfg, carrier, 0.0);
  return sol;
}

ClassicalSolution classical_fields(const CavityConfig& cfg, double k, const Complex2Vector& input) {
  return classical_fields(cfg, carrier_at(cfg, k), input);
}

Complex2Vector output_fields_closed_form(const CavityConfig& cfg, const Carrier& carrier,
                                         const Complex2Vector& input) {
  const double R = cfg.input_reflectivity;
  const double T = cfg.input_transmissivity;
  const double r = cfg.mass_reflectivity;
  const double t = cfg.mass_transmissivity;
  const cplx e = std::polar(1.0, carrier.round_trip_phase());
  const cplx d = resonance_factor(cfg, carrier, 0.0);
  const cplx cross = R * (1.0 - e * e) - cplx{0.0, t * (R * R + 1.0)} * e;
  const cplx direct1 = r * T * T * std::polar(1.0, 2.0 * carrier.arm1_phase);
  const cplx direct2 = r * T * T * std::polar(1.0, 2.0 * carrier.arm2_phase);
  return {(input.c1 * cross - input.c0 * direct1) / d, (input.c0 * cross - input.c1 * direct2) / d};
}

ResonancePair resonance_frequencies(const CavityConfig& cfg) {
  cfg.validate();
  const double R = cfg.input_reflectivity;
  const double t = cfg.mass_transmissivity;
  if (!(R > 0.0)) throw NoSplitResonanceError("resonance: input mirror reflectivity is zero");
  const double s = t * (1.0 + R * R) / (2.0 * R);
  if (s > 1.0) {
    throw NoSplitResonanceError("resonance: t(1+R^2)/(2R) = " + std::to_string(s) +
                                " exceeds 1, no split resonance pair");
  }
  const double a = wrap(std::asin(-s));
  const double b = wrap(constants::pi - std::asin(-s));
  const double to_omega = constants::c / cfg.round_trip_length();
  ResonancePair pair;
  pair.lower = std::min(a, b) * to_omega;
  pair.upper = std::max(a, b) * to_omega;
  // e^{i phase} with positive real part is the plus branch.
  const double plus = (std::cos(a) >= std::cos(b) ? a : b) * to_omega;
  const double minus = (std::cos(a) >= std::cos(b) ? b : a) * to_omega;
  pair.carrier_detuning = (cfg.branch == CarrierBranch::plus ? plus : minus) - pair.lower;
  return pair;
}

double mode_splitting(const CavityConfig& cfg) {
  if (!(cfg.round_trip_length() > 0.0)) throw ArgumentError("splitting: length must be positive");
  const double r = cfg.mass_reflectivity;
  if (!(r >= 0.0 && r <= 1.0)) throw ArgumentError("splitting: r must lie in [0, 1]");
  return 2.0 * constants::c / cfg.round_trip_length() * std::asin(r);
}

std::vector<std::pair<double, double>> intracavity_intensity_sweep(const CavityConfig& cfg,
                                                                  std::span<const double> phases) {
  if (phases.empty()) throw ArgumentError("sweep: empty phase grid");
  cfg.validate();
  const double L = cfg.round_trip_length();
  std::vector<std::pair<double, double>> out;
  out.reserve(phases.size());
  double peak = 0.0;
  for (double phase : phases) {
    Carrier carrier{0.0, wrap(phase * cfg.arm1_length / L), wrap(phase * cfg.arm2_length / L)};
    const auto sol = classical_fields(cfg, carrier, {1.0, 0.0});
    const double intensity = norm_squared(sol.C);
    peak = std::max(peak, intensity);
    out.emplace_back(phase, intensity);
  }
  for (auto& [phase, intensity] : out) intensity /= peak;
  return out;
}

}  // namespace hrc
