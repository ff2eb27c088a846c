#include "hrc/transfer.hpp"

#include <cmath>

#include "hrc/constants.hpp"
#include "hrc/errors.hpp"

namespace hrc {

namespace {

constexpr cplx I{0.0, 1.0};

void require_positive_linewidth(double gamma) {
  if (!(gamma > 0.0) || !std::isfinite(gamma)) throw ArgumentError("linewidth must be positive");
}

}  // namespace

TransferSet transfer_full(const CavityConfig& cfg, const Carrier& carrier, double k_p, double A1,
                          double omega) {
  cfg.validate();
  const double R = cfg.input_reflectivity;
  const double T = cfg.input_transmissivity;
  const double r = cfg.mass_reflectivity;
  const double t = cfg.mass_transmissivity;
  const double L = cfg.round_trip_length();
  const double phase = carrier.round_trip_phase();
  const double sideband = omega * L / constants::c;

  const cplx d0 = resonance_factor(cfg, carrier, 0.0);
  const cplx dw = resonance_factor(cfg, carrier, omega);
  const double scale = std::max(1.0, R * R + 2.0 * R * t + 1.0);
  if (std::abs(d0) <= 1e-14 * scale || std::abs(dw) <= 1e-14 * scale) {
    throw SingularMatrixError("transfer: resonance factor is singular", std::min(std::abs(d0), std::abs(dw)));
  }

  const cplx e0 = std::polar(1.0, phase);
  const cplx ew = std::polar(1.0, phase + sideband);
  const cplx half = std::polar(1.0, phase + 0.5 * sideband);

  TransferSet ts;
  ts.omega = omega;
  ts.b11 = -r * T * T * ew / dw;
  ts.b22 = ts.b11;
  ts.b12 = -(-R + I * t * (1.0 + R * R) * ew + R * ew * ew) / dw;
  ts.b21 = ts.b12;
  ts.b13 = 2.0 * I * k_p * r * T * T * A1 * half / (d0 * dw) *
           (1.0 - R * e0 * (I * t + I * t * std::polar(1.0, sideband) + R * ew));
  ts.b23 = 2.0 * I * k_p * A1 * r * r * T * T * R * std::polar(1.0, 2.0 * phase + 0.5 * sideband) *
           (std::polar(1.0, sideband) - 1.0) / (d0 * dw);
  return ts;
}

TransferSet transfer_full(const CavityConfig& cfg, const LaserConfig& laser, double omega) {
  return transfer_full(cfg, tune_carrier(cfg, laser), laser.wavenumber(), laser.amplitude(), omega);
}

TransferSet transfer_single_mode(double gamma, double k_p, double A1, double omega) {
  require_positive_linewidth(gamma);
  const cplx pole = gamma - I * omega;
  const cplx signal = 2.0 * I * k_p * A1;
  TransferSet ts;
  ts.omega = omega;
  ts.b11 = gamma / pole;
  ts.b22 = ts.b11;
  ts.b12 = -I * omega / pole;
  ts.b21 = ts.b12;
  ts.b13 = signal * (1.0 + I * omega / (2.0 * pole));
  ts.b23 = I * omega * signal / (2.0 * pole);
  return ts;
}

TwoPhotonTransfer two_photon_transfer(double gamma, double k_p, double omega) {
  require_positive_linewidth(gamma);
  const cplx pole = gamma - I * omega;
  const auto id = Complex2Matrix::identity();
  const auto s2 = pauli(2);
  TwoPhotonTransfer tpt;
  tpt.R1 = (gamma / pole) * id;
  tpt.R2 = (-I * omega / pole) * id;
  tpt.M1x = (-I * k_p * gamma / pole) * s2;
  tpt.M1v = (-k_p / (2.0 * pole)) * s2;
  tpt.M2v = (k_p / pole) * s2;
  return tpt;
}

Complex2Vector carrier_quadrature(const LaserConfig& laser) {
  return {std::sqrt(2.0) * laser.amplitude(), 0.0};
}

std::pair<QuadratureState, QuadratureState> output_quadratures(const TwoPhotonTransfer& tpt,
                                                               const QuadratureState& a1,
                                                               const QuadratureState& a2,
                                                               double x, double omega,
                                                               const Complex2Vector& carrier) {
  const Complex2Vector v1{a1.c, a1.s};
  const Complex2Vector v2{a2.c, a2.s};
  const auto b1 = tpt.R1 * v1 + tpt.R2 * v2 + x * (tpt.M1x * carrier) +
                  (omega * x) * (tpt.M1v * carrier);
  const auto b2 = tpt.R2 * v1 + tpt.R1 * v2 + (omega * x) * (tpt.M2v * carrier);
  return {{b1.c0, b1.c1}, {b2.c0, b2.c1}};
}

}  // namespace hrc
