#include "hrc/matrix.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "hrc/errors.hpp"

namespace hrc {

Complex2Matrix Complex2Matrix::adjoint() const {
  return {std::conj(m00), std::conj(m10), std::conj(m01), std::conj(m11)};
}

double Complex2Matrix::norm_inf() const {
  return std::max(std::abs(m00) + std::abs(m01), std::abs(m10) + std::abs(m11));
}

Complex2Vector operator+(const Complex2Vector& a, const Complex2Vector& b) {
  return {a.c0 + b.c0, a.c1 + b.c1};
}

Complex2Vector operator-(const Complex2Vector& a, const Complex2Vector& b) {
  return {a.c0 - b.c0, a.c1 - b.c1};
}

Complex2Vector operator*(cplx s, const Complex2Vector& v) { return {s * v.c0, s * v.c1}; }

cplx dot(const Complex2Vector& a, const Complex2Vector& b) { return a.c0 * b.c0 + a.c1 * b.c1; }

double norm_squared(const Complex2Vector& v) { return std::norm(v.c0) + std::norm(v.c1); }

Complex2Matrix operator+(const Complex2Matrix& a, const Complex2Matrix& b) {
  return {a.m00 + b.m00, a.m01 + b.m01, a.m10 + b.m10, a.m11 + b.m11};
}

Complex2Matrix operator-(const Complex2Matrix& a, const Complex2Matrix& b) {
  return {a.m00 - b.m00, a.m01 - b.m01, a.m10 - b.m10, a.m11 - b.m11};
}

Complex2Matrix operator*(const Complex2Matrix& a, const Complex2Matrix& b) {
  return {a.m00 * b.m00 + a.m01 * b.m10, a.m00 * b.m01 + a.m01 * b.m11,
          a.m10 * b.m00 + a.m11 * b.m10, a.m10 * b.m01 + a.m11 * b.m11};
}

Complex2Matrix operator*(cplx s, const Complex2Matrix& m) {
  return {s * m.m00, s * m.m01, s * m.m10, s * m.m11};
}

Complex2Vector operator*(const Complex2Matrix& m, const Complex2Vector& v) {
  return {m.m00 * v.c0 + m.m01 * v.c1, m.m10 * v.c0 + m.m11 * v.c1};
}

double max_abs_diff(const Complex2Matrix& a, const Complex2Matrix& b) {
  return std::max({std::abs(a.m00 - b.m00), std::abs(a.m01 - b.m01), std::abs(a.m10 - b.m10),
                   std::abs(a.m11 - b.m11)});
}

Complex2Matrix pauli(int index) {
  const cplx i{0.0, 1.0};
  switch (index) {
    case 1: return {0.0, 1.0, 1.0, 0.0};
    case 2: return {0.0, -i, i, 0.0};
    case 3: return {1.0, 0.0, 0.0, -1.0};
    default: throw ArgumentError("pauli: index must be 1, 2 or 3, got " + std::to_string(index));
  }
}

Complex2Matrix mirror_matrix(double r, double t) {
  if (!std::isfinite(r) || !std::isfinite(t) || r * r + t * t > 1.0 + 1e-12) {
    throw NonPhysicalMirrorError("mirror: r^2 + t^2 = " + std::to_string(r * r + t * t) +
                                 " exceeds 1");
  }
  const cplx it{0.0, t};
  return {r, it, it, r};
}

double reduced_phase(double k, double length) {
  constexpr long double two_pi = 6.283185307179586476925286766559005768L;
  long double phase = std::fmod(static_cast<long double>(k) * static_cast<long double>(length), two_pi);
  if (phase < 0) phase += two_pi;
  return static_cast<double>(phase);
}

Complex2Matrix phase_matrix(double phase1, double phase2) {
  return Complex2Matrix::diag(std::polar(1.0, phase1), std::polar(1.0, phase2));
}

Complex2Matrix propagation_matrix(const CavityConfig& cfg, double k) {
  if (!(cfg.arm1_length > 0.0) || !(cfg.arm2_length > 0.0)) {
    throw ArgumentError("propagation: arm lengths must be positive");
  }
  return phase_matrix(reduced_phase(k, cfg.arm1_length), reduced_phase(k, cfg.arm2_length));
}

double singular_threshold(const Complex2Matrix& m) {
  const double n = m.norm_inf();
  return 1e-14 * std::max(1.0, n * n);
}

Complex2Matrix invert2(const Complex2Matrix& m) {
  const cplx d = m.det();
  const double threshold = singular_threshold(m);
  if (!(std::abs(d) > threshold)) {
    throw SingularMatrixError("invert2: |det| = " + std::to_string(std::abs(d)) +
                                  " below threshold " + std::to_string(threshold),
                              std::abs(d));
  }
  const cplx inv = 1.0 / d;
  return {inv * m.m11, -inv * m.m01, -inv * m.m10, inv * m.m00};
}

}  // namespace hrc
