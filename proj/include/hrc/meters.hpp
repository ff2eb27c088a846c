#pragma once

namespace hrc {

enum class MeterKind { speed, position };

// Free-space reference interferometers: a position meter, and a speedmeter
// that subtracts two position readings a delay tau apart.
struct MeterParams {
  double k_p = 0.0;    // rad/m
  double power = 0.0;  // W, P = hbar k_p c A^2
  double delay = 0.0;  // tau, s (speedmeter only)
  double mass = 0.0;   // kg
  double zeta = 1.5707963267948966;  // homodyne angle

  double amplitude() const;
  void validate(MeterKind kind) const;
};

struct MeterSpectra {
  double xx = 0.0;  // m^2/Hz, +inf when sin(zeta) = 0
  double ff = 0.0;  // N^2/Hz
  double xf = 0.0;  // m N/Hz
};

MeterSpectra meter_spectra(const MeterParams& p, MeterKind kind, double omega);

// Same as meter_spectra for the speedmeter, without expanding 1 - e^{i Omega tau}.
MeterSpectra speedmeter_spectra_exact_phase(const MeterParams& p, double omega);

// S_xx - 2 S_xF / (M Omega^2) + S_FF / (M^2 Omega^4).
double meter_sensitivity(const MeterParams& p, MeterKind kind, double omega);

// Homodyne angle with cot(zeta) = -K (K from coupling_factor).
double optimal_homodyne_angle(const MeterParams& p, MeterKind kind, double omega);

// Closed forms at the optimal angle: hbar c/(4 k P tau^2 Omega^2) and hbar c/(4 k P).
double optimal_sensitivity(const MeterParams& p, MeterKind kind, double omega);

// K with S(zeta = pi/2) = (S_SQL/2)(1/K + K): 4kP tau^2/(Mc) or 4kP/(M Omega^2 c).
double coupling_factor(const MeterParams& p, MeterKind kind, double omega);

}  // namespace hrc
