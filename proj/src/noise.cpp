#include "hrc/noise.hpp"

#include <cmath>
#include <limits>

#include "hrc/constants.hpp"
#include "hrc/errors.hpp"

namespace hrc {

namespace {

constexpr cplx I{0.0, 1.0};
constexpr double kInf = std::numeric_limits<double>::infinity();

void require_positive(double v, const char* what) {
  if (!(v > 0.0) || !std::isfinite(v)) throw ArgumentError(std::string(what) + " must be positive");
}

}  // namespace

void MechanicalMode::validate() const {
  require_positive(mass, "mechanical mode: mass");
  if (!(resonance >= 0.0) || !(half_linewidth >= 0.0) || !std::isfinite(resonance) ||
      !std::isfinite(half_linewidth)) {
    throw ArgumentError("mechanical mode: resonance and half-linewidth must be non-negative");
  }
}

ShotNoise shot_noise_displacement(double gamma, double input_power, double omega_p, double omega) {
  require_positive(gamma, "linewidth");
  require_positive(input_power, "input power");
  require_positive(omega_p, "optical frequency");
  const double base = constants::hbar * constants::c * constants::c / (4.0 * input_power * omega_p);
  const double g2 = gamma * gamma;
  const double w2 = omega * omega;
  ShotNoise s;
  s.port1 = base * (g2 + w2) / (g2 + 0.25 * w2);
  s.port2 = omega == 0.0 ? kInf : base * (g2 + w2) / w2;
  return s;
}

RadiationPressureNoise qrpn_spectral_density(double gamma, double input_power, double omega_p,
                                             double omega, double r, double t) {
  require_positive(gamma, "linewidth");
  const double scale = constants::hbar * omega_p * input_power / (constants::c * constants::c);
  const double contrast = r * r - t * t;
  const double mixing = contrast * contrast + r * r * t * t;
  const double g2 = gamma * gamma;
  const double w2 = omega * omega;
  return {2.0 * g2 * scale * mixing / (g2 + w2), w2 * scale * mixing / (g2 + w2)};
}

double fabry_perot_qrpn(double input_power, double omega_p, double length, double gamma,
                        double omega) {
  return 4.0 * constants::hbar * input_power * omega_p /
         (length * length * (gamma * gamma + omega * omega));
}

QuadratureCoefficients qrpn_force_coefficients(double gamma, double k_p, double flux_amplitude,
                                               double r, double t, double omega) {
  const cplx pole = gamma - I * omega;
  const cplx lead = 2.0 * gamma - I * omega;
  const cplx pre = constants::hbar * k_p * flux_amplitude / (std::sqrt(2.0) * pole);
  const double contrast = r * r - t * t;
  return {pre * contrast * lead, pre * I * r * t * omega, pre * (-I) * contrast * omega,
          pre * I * r * t * lead};
}

cplx qrpn_force_quadratures(const CavityConfig& cfg, const LaserConfig& laser, double omega,
                            const QuadratureState& a1, const QuadratureState& a2) {
  const auto f = qrpn_force_coefficients(cfg.linewidth(), laser.wavenumber(), laser.flux_amplitude(),
                                         cfg.mass_reflectivity, cfg.mass_transmissivity, omega);
  return f[a1c] * a1.c + f[a1s] * a1.s + f[a2c] * a2.c + f[a2s] * a2.s;
}

double optical_spring(double omega_p, double input_power, double t, double length, double gamma) {
  require_positive(length, "length");
  require_positive(gamma, "linewidth");
  return 4.0 * omega_p * input_power * t / (constants::c * length * gamma);
}

cplx mechanical_susceptibility(const MechanicalMode& mode, double omega, double spring_constant) {
  mode.validate();
  const double M = mode.mass;
  const double shifted2 = mode.resonance * mode.resonance - spring_constant / M;
  const cplx denom{M * (shifted2 - omega * omega), -2.0 * mode.half_linewidth * M * omega};
  if (denom == cplx{0.0, 0.0}) return {kInf, 0.0};
  return 1.0 / denom;
}

double standard_quantum_limit(double mass, double omega) {
  if (omega == 0.0) return kInf;
  return 2.0 * constants::hbar / (mass * omega * omega);
}

QuadratureRecord operator+(const QuadratureRecord& a, const QuadratureRecord& b) {
  QuadratureRecord out;
  for (std::size_t j = 0; j < 4; ++j) out.noise[j] = a.noise[j] + b.noise[j];
  out.signal = a.signal + b.signal;
  return out;
}

QuadratureRecord operator*(cplx s, const QuadratureRecord& r) {
  QuadratureRecord out;
  for (std::size_t j = 0; j < 4; ++j) out.noise[j] = s * r.noise[j];
  out.signal = s * r.signal;
  return out;
}

PortRecords port_records(const TwoPhotonTransfer& tpt, const Complex2Vector& carrier, double omega) {
  const auto sig1 = tpt.M1x * carrier + omega * (tpt.M1v * carrier);
  const auto sig2 = omega * (tpt.M2v * carrier);
  const auto& R1 = tpt.R1;
  const auto& R2 = tpt.R2;
  PortRecords p;
  p.port1_cos = {{R1.m00, R1.m01, R2.m00, R2.m01}, sig1.c0};
  p.port1_sin = {{R1.m10, R1.m11, R2.m10, R2.m11}, sig1.c1};
  p.port2_cos = {{R2.m00, R2.m01, R1.m00, R1.m01}, sig2.c0};
  p.port2_sin = {{R2.m10, R2.m11, R1.m10, R1.m11}, sig2.c1};
  return p;
}

QuadratureRecord homodyne(const QuadratureRecord& cosine, const QuadratureRecord& sine, double zeta) {
  return std::cos(zeta) * cosine + std::sin(zeta) * sine;
}

QuadratureRecord with_backaction(const QuadratureRecord& record, const QuadratureCoefficients& force,
                                 cplx chi) {
  QuadratureRecord out = record;
  for (std::size_t j = 0; j < 4; ++j) out.noise[j] += record.signal * chi * force[j];
  return out;
}

DisplacementSpectra displacement_spectra(const QuadratureRecord& record,
                                         const QuadratureCoefficients& force, cplx chi) {
  DisplacementSpectra s;
  for (const auto& f : force) s.ff += std::norm(f);
  if (std::abs(record.signal) == 0.0) {
    s.xx = kInf;
    s.total = kInf;
    return s;
  }
  for (std::size_t j = 0; j < 4; ++j) {
    const cplx n = record.noise[j] / record.signal;
    s.xx += std::norm(n);
    s.xf += std::conj(n) * force[j];
    s.total += std::norm(n + chi * force[j]);
  }
  return s;
}

cplx printed_backaction_coefficient(double gamma, double k_p, double A1, double mass, double omega) {
  return I * omega * constants::hbar * k_p * k_p * A1 * A1 /
         (std::sqrt(2.0) * mass * omega * omega * (gamma - I * omega));
}

ReadoutCombination optimal_readout_filter(double gamma, double k_p, double A1, double mass,
                                          double omega) {
  require_positive(mass, "optimal readout: mass");
  const auto tpt = two_photon_transfer(gamma, k_p, omega);
  const auto records = port_records(tpt, {std::sqrt(2.0) * A1, 0.0}, omega);
  const auto force = qrpn_force_coefficients(gamma, k_p, A1 / std::sqrt(2.0), 1.0, 0.0, omega);
  const cplx chi = mechanical_susceptibility(MechanicalMode::free_mass(mass), omega);
  const cplx backaction = records.port2_sin.signal * chi * force[a1c];
  const cplx K = backaction * (gamma - I * omega) / (2.0 * gamma - I * omega);
  return {-2.0 * K, K};
}

QuadratureRecord optimal_readout(const QuadratureRecord& port1_cos, const QuadratureRecord& port2_sin,
                                 cplx g) {
  return port2_sin + g * port1_cos;
}

std::vector<NoiseBudget> total_budget(const CavityConfig& cfg, const LaserConfig& laser,
                                      const MechanicalMode& mode, std::span<const double> omegas,
                                      const BudgetOptions& options) {
  cfg.validate();
  laser.validate();
  mode.validate();
  const double gamma = cfg.linewidth();
  const double k_p = laser.wavenumber();
  const double omega_p = laser.angular_frequency();
  const double power = laser.input_power;
  const double r = cfg.mass_reflectivity;
  const double t = cfg.mass_transmissivity;
  const double spring = optical_spring(omega_p, power, t, cfg.round_trip_length(), gamma);
  const auto carrier = carrier_quadrature(laser);

  std::vector<NoiseBudget> out;
  out.reserve(omegas.size());
  for (double omega : omegas) {
    if (!(omega > 0.0)) throw ArgumentError("noise budget: frequencies must be positive");
    const auto records = port_records(two_photon_transfer(gamma, k_p, omega), carrier, omega);
    const auto force = qrpn_force_coefficients(gamma, k_p, laser.flux_amplitude(), r, t, omega);
    const cplx chi =
        mechanical_susceptibility(mode, omega, options.include_optical_spring ? spring : 0.0);

    NoiseBudget b;
    b.omega = omega;
    const auto shot = shot_noise_displacement(gamma, power, omega_p, omega);
    b.shot_1 = shot.port1;
    b.shot_2 = shot.port2;
    const auto rp = qrpn_spectral_density(gamma, power, omega_p, omega, r, t);
    b.rp_position = rp.position;
    b.rp_speed = rp.speed;
    b.total_1 = displacement_spectra(homodyne(records.port1_cos, records.port1_sin, options.zeta),
                                     force, chi).total;
    if (options.optimal_readout) {
      const auto filter = optimal_readout_filter(gamma, k_p, laser.amplitude(), mode.mass, omega);
      b.total_2 = displacement_spectra(optimal_readout(records.port1_cos, records.port2_sin, filter.g),
                                       force, chi).total;
    } else {
      b.total_2 = displacement_spectra(homodyne(records.port2_cos, records.port2_sin, options.zeta),
                                       force, chi).total;
    }
    b.sql = standard_quantum_limit(mode.mass, omega);
    b.spring_constant = spring;
    out.push_back(b);
  }
  return out;
}

Table1 table1_comparison(double input_power, double omega_p, double T, double tau, double omega) {
  require_positive(input_power, "input power");
  require_positive(omega_p, "optical frequency");
  require_positive(tau, "delay");
  require_positive(omega, "frequency");
  const double base = constants::hbar * constants::c * constants::c / (4.0 * input_power * omega_p);
  const double wt2 = omega * omega * tau * tau;
  const double T4 = T * T * T * T;
  Table1 tab{};
  tab.free_speed = base / wt2;
  tab.free_position = base;
  tab.hrc_speed = base * T4 / wt2;
  tab.hrc_position = base;
  tab.standard_speed = base * (T4 / 4.0) * (T4 / (16.0 * wt2));
  tab.standard_position = base * T4 / 4.0;
  return tab;
}

}  // namespace hrc
