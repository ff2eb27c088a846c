#pragma once

#include <array>
#include <span>
#include <vector>

#include "hrc/cavity.hpp"
#include "hrc/matrix.hpp"
#include "hrc/transfer.hpp"

namespace hrc {

// Mirror dynamics M x'' + 2 M gamma_m x' + M omega_m^2 x = F. A free mass
// has resonance = half_linewidth = 0.
struct MechanicalMode {
  double mass = 1.0;            // kg
  double resonance = 0.0;       // omega_m, rad/s
  double half_linewidth = 0.0;  // gamma_m, rad/s; Q = omega_m / (2 gamma_m)

  static MechanicalMode free_mass(double mass) { return {mass, 0.0, 0.0}; }
  void validate() const;
};

struct ShotNoise {
  double port1 = 0.0;  // m^2/Hz
  double port2 = 0.0;  // m^2/Hz, +inf at Omega = 0
};

ShotNoise shot_noise_displacement(double gamma, double input_power, double omega_p, double omega);

struct RadiationPressureNoise {
  double position = 0.0;  // N^2/Hz, part surviving at Omega -> 0
  double speed = 0.0;     // N^2/Hz, part growing as Omega^2
  double total() const { return position + speed; }
};

// Closed form for the test-mass amplitudes (r, t); r = 1 gives the perfect
// reflector result.
RadiationPressureNoise qrpn_spectral_density(double gamma, double input_power, double omega_p,
                                             double omega, double r, double t);

// Conventional Fabry-Perot cavity of round-trip length L, same linewidth.
double fabry_perot_qrpn(double input_power, double omega_p, double length, double gamma,
                        double omega);

// Linear functional over the input quadratures (a1c, a1s, a2c, a2s).
using QuadratureCoefficients = std::array<cplx, 4>;

enum Quadrature : std::size_t { a1c = 0, a1s = 1, a2c = 2, a2s = 3 };

// Force amplitude per unit input quadrature. flux_amplitude is
// sqrt(I_in / (hbar omega_p)).
QuadratureCoefficients qrpn_force_coefficients(double gamma, double k_p, double flux_amplitude,
                                               double r, double t, double omega);

cplx qrpn_force_quadratures(const CavityConfig& cfg, const LaserConfig& laser, double omega,
                            const QuadratureState& a1, const QuadratureState& a2);

// Spring constant 4 omega_p I_in t / (c L gamma); positive softens the mode.
double optical_spring(double omega_p, double input_power, double t, double length, double gamma);

// 1 / (M(omega_m'^2 - Omega^2) - 2 i gamma_m M Omega), omega_m'^2 = omega_m^2 - K/M.
// An undamped mode driven exactly at omega_m' returns (+inf, 0).
cplx mechanical_susceptibility(const MechanicalMode& mode, double omega, double spring_constant = 0.0);

double standard_quantum_limit(double mass, double omega);  // 2 hbar / (M Omega^2)

// One output quadrature: noise . a + signal * x.
struct QuadratureRecord {
  QuadratureCoefficients noise{};
  cplx signal{};
};

QuadratureRecord operator+(const QuadratureRecord& a, const QuadratureRecord& b);
QuadratureRecord operator*(cplx s, const QuadratureRecord& r);

struct PortRecords {
  QuadratureRecord port1_cos, port1_sin, port2_cos, port2_sin;
};

PortRecords port_records(const TwoPhotonTransfer& tpt, const Complex2Vector& carrier, double omega);

// cos(zeta) b^c + sin(zeta) b^s.
QuadratureRecord homodyne(const QuadratureRecord& cosine, const QuadratureRecord& sine, double zeta);

// Closes the loop x -> x + chi F: the record's noise picks up signal * chi * force.
QuadratureRecord with_backaction(const QuadratureRecord& record, const QuadratureCoefficients& force,
                                 cplx chi);

struct DisplacementSpectra {
  double xx = 0.0;  // shot noise referred to displacement, m^2/Hz
  double ff = 0.0;  // force noise, N^2/Hz
  cplx xf{};        // cross spectrum, m N/Hz
  double total = 0.0;  // xx + 2 Re(chi xf) + |chi|^2 ff
};

// Vacuum inputs with unit one-sided spectra. A record without signal gives
// +inf for xx and total.
DisplacementSpectra displacement_spectra(const QuadratureRecord& record,
                                         const QuadratureCoefficients& force, cplx chi);

struct ReadoutCombination {
  cplx g{};  // filter applied to the position-port cosine quadrature
  cplx K{};  // back-action coefficient of a1c in the speed-port sine quadrature
};

// i Omega hbar k^2 A^2 / (sqrt(2) M Omega^2 (gamma - i Omega)).
cplx printed_backaction_coefficient(double gamma, double k_p, double A1, double mass, double omega);

// K such that the closed-loop speed-port sine record carries
// K (2 gamma - i Omega)/(gamma - i Omega) a1c; g = -2K.
ReadoutCombination optimal_readout_filter(double gamma, double k_p, double A1, double mass,
                                          double omega);

// Speed-port sine quadrature plus g times position-port cosine quadrature.
QuadratureRecord optimal_readout(const QuadratureRecord& port1_cos, const QuadratureRecord& port2_sin,
                                 cplx g);

struct NoiseBudget {
  double omega = 0.0;
  double shot_1 = 0.0, shot_2 = 0.0;   // m^2/Hz
  double rp_position = 0.0, rp_speed = 0.0;  // N^2/Hz
  double total_1 = 0.0, total_2 = 0.0;  // m^2/Hz
  double sql = 0.0;                     // m^2/Hz
  double spring_constant = 0.0;         // N/m
};

struct BudgetOptions {
  double zeta = 1.5707963267948966;  // homodyne angle, both ports
  bool optimal_readout = false;      // port 2 total uses the filtered combination
  bool include_optical_spring = false;
};

std::vector<NoiseBudget> total_budget(const CavityConfig& cfg, const LaserConfig& laser,
                                      const MechanicalMode& mode, std::span<const double> omegas,
                                      const BudgetOptions& options = {});

struct Table1 {
  double free_speed, free_position;
  double hrc_speed, hrc_position;
  double standard_speed, standard_position;
};

// Shot-noise-limited sensitivities; T is the input mirror amplitude
// transmissivity, tau the round-trip (or delay) time.
Table1 table1_comparison(double input_power, double omega_p, double T, double tau, double omega);

}  // namespace hrc
