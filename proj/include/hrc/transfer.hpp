#pragma once

#include <utility>

#include "hrc/cavity.hpp"
#include "hrc/matrix.hpp"

namespace hrc {

// Sideband transfer coefficients at one frequency. b11..b22 map input field
// fluctuations to outputs; b13, b23 map test-mass displacement (per metre)
// to outputs and include the 2 i k_p A1 prefactor.
struct TransferSet {
  double omega = 0.0;
  cplx b11, b12, b21, b22, b13, b23;
};

// Exact coefficients for a carrier on resonance, light injected in port 1
// only, equal arms. A1 is the input carrier amplitude.
TransferSet transfer_full(const CavityConfig& cfg, const Carrier& carrier, double k_p, double A1,
                          double omega);
// Same, carrier tuned with tune_carrier and A1 = laser.amplitude().
TransferSet transfer_full(const CavityConfig& cfg, const LaserConfig& laser, double omega);

// One-pole forms valid for Omega << FSR and T << 1.
TransferSet transfer_single_mode(double gamma, double k_p, double A1, double omega);

// Two-photon quadrature transfer matrices.
struct TwoPhotonTransfer {
  Complex2Matrix R1, R2;        // noise: same port, cross port
  Complex2Matrix M1x, M1v, M2v; // signal: position and velocity parts
};

TwoPhotonTransfer two_photon_transfer(double gamma, double k_p, double omega);

struct QuadratureState {
  cplx c{};  // cosine (amplitude) quadrature
  cplx s{};  // sine (phase) quadrature
};

// Carrier quadrature vector sqrt(2) A (1, 0).
Complex2Vector carrier_quadrature(const LaserConfig& laser);

std::pair<QuadratureState, QuadratureState> output_quadratures(const TwoPhotonTransfer& tpt,
                                                               const QuadratureState& a1,
                                                               const QuadratureState& a2,
                                                               double x, double omega,
                                                               const Complex2Vector& carrier);

}  // namespace hrc
