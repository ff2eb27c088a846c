#pragma once

#include <span>
#include <utility>
#include <vector>

#include "hrc/cavity_config.hpp"
#include "hrc/matrix.hpp"

namespace hrc {

// Carrier wavenumber together with its per-arm propagation phases, reduced
// modulo 2 pi. Keeping the reduced phases avoids re-deriving them from a
// large k (k*L ~ 1e6 rad) wherever the cavity is close to resonance.
struct Carrier {
  double wavenumber = 0.0;  // rad/m
  double arm1_phase = 0.0;  // k L1 mod 2 pi
  double arm2_phase = 0.0;  // k L2 mod 2 pi

  double round_trip_phase() const;  // in [0, 2 pi)
};

// Carrier at an arbitrary wavenumber.
Carrier carrier_at(const CavityConfig& cfg, double k);

// Carrier on the configured split resonance (e^{ikL} = +-r - it exactly),
// at the resonance order closest to the laser wavelength.
Carrier tune_carrier(const CavityConfig& cfg, const LaserConfig& laser);

// diag(e^{i(k + Omega/c) L1}, e^{i(k + Omega/c) L2}).
Complex2Matrix propagation_matrix(const CavityConfig& cfg, const Carrier& carrier, double omega);

// D(Omega) = R^2 e^{2i(k+Omega/c)L} + 2iRt e^{i(k+Omega/c)L} - 1.
cplx resonance_factor(const CavityConfig& cfg, double k, double omega);
cplx resonance_factor(const CavityConfig& cfg, const Carrier& carrier, double omega);

struct ClassicalSolution {
  Complex2Vector B;  // outputs
  Complex2Vector C;  // at the input mirror, heading out of the arms
  Complex2Vector D;  // leaving the input mirror into the arms
  Complex2Vector E;  // arriving at the test mass
  Complex2Vector F;  // leaving the test mass
  cplx resonance_factor;  // D(0)
};

// Steady-state fields by direct solution of the scattering chain.
// Throws SingularMatrixError when the round-trip operator is singular.
ClassicalSolution classical_fields(const CavityConfig& cfg, const Carrier& carrier,
                                   const Complex2Vector& input);
ClassicalSolution classical_fields(const CavityConfig& cfg, double k, const Complex2Vector& input);

// Closed-form outputs B1, B2 for arbitrary two-sided input (lossless test
// mass and symmetric arms are not required, the derivation is exact).
Complex2Vector output_fields_closed_form(const CavityConfig& cfg, const Carrier& carrier,
                                         const Complex2Vector& input);

struct ResonancePair {
  double lower = 0.0;  // rad/s in [0, 2 pi FSR)
  double upper = 0.0;
  double carrier_detuning = 0.0;  // configured branch minus lower, rad/s
  double splitting() const { return upper - lower; }
};

// Both solutions of sin(kL) = -t(1+R^2)/(2R), as angular frequencies
// reduced into one free spectral range. Throws NoSplitResonanceError when
// the argument leaves [-1, 1].
ResonancePair resonance_frequencies(const CavityConfig& cfg);

// 2 (c/L) arcsin(r), rad/s.
double mode_splitting(const CavityConfig& cfg);

// Round-trip phase (rad) -> intra-cavity intensity |C1|^2 + |C2|^2 for unit
// input in port 1, normalised to the maximum over the grid. The phase is
// shared between the arms in proportion to their lengths.
std::vector<std::pair<double, double>> intracavity_intensity_sweep(const CavityConfig& cfg,
                                                                  std::span<const double> phases);

}  // namespace hrc
