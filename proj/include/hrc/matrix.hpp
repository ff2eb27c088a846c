#pragma once

#include <complex>

#include "hrc/cavity_config.hpp"

namespace hrc {

using cplx = std::complex<double>;

struct Complex2Vector {
  cplx c0{};
  cplx c1{};

  friend constexpr bool operator==(const Complex2Vector&, const Complex2Vector&) = default;
};

// Row-major 2x2 complex matrix.
struct Complex2Matrix {
  cplx m00{}, m01{}, m10{}, m11{};

  static Complex2Matrix identity() { return {1.0, 0.0, 0.0, 1.0}; }
  static Complex2Matrix diag(cplx a, cplx b) { return {a, 0.0, 0.0, b}; }

  cplx det() const { return m00 * m11 - m01 * m10; }
  cplx trace() const { return m00 + m11; }
  Complex2Matrix adjoint() const;
  Complex2Matrix transpose() const { return {m00, m10, m01, m11}; }
  double norm_inf() const;  // max absolute row sum

  friend constexpr bool operator==(const Complex2Matrix&, const Complex2Matrix&) = default;
};

Complex2Vector operator+(const Complex2Vector& a, const Complex2Vector& b);
Complex2Vector operator-(const Complex2Vector& a, const Complex2Vector& b);
Complex2Vector operator*(cplx s, const Complex2Vector& v);
cplx dot(const Complex2Vector& a, const Complex2Vector& b);  // sum a_i b_i, no conjugation
double norm_squared(const Complex2Vector& v);

Complex2Matrix operator+(const Complex2Matrix& a, const Complex2Matrix& b);
Complex2Matrix operator-(const Complex2Matrix& a, const Complex2Matrix& b);
Complex2Matrix operator*(const Complex2Matrix& a, const Complex2Matrix& b);
Complex2Matrix operator*(cplx s, const Complex2Matrix& m);
Complex2Vector operator*(const Complex2Matrix& m, const Complex2Vector& v);

// Largest entrywise magnitude of a - b.
double max_abs_diff(const Complex2Matrix& a, const Complex2Matrix& b);

// Pauli matrices sigma_1..3. Other indices throw ArgumentError.
Complex2Matrix pauli(int index);

// [[r, it], [it, r]]. Throws NonPhysicalMirrorError if r^2 + t^2 > 1 + 1e-12.
Complex2Matrix mirror_matrix(double r, double t);

// diag(e^{ikL1}, e^{ikL2}); the phases are reduced modulo 2 pi in extended
// precision before exponentiation.
Complex2Matrix propagation_matrix(const CavityConfig& cfg, double k);

// diag(e^{i phase1}, e^{i phase2}) for already-reduced phases.
Complex2Matrix phase_matrix(double phase1, double phase2);

// Singularity threshold 1e-14 * max(1, |m|_inf^2).
double singular_threshold(const Complex2Matrix& m);

// Cofactor inverse; throws SingularMatrixError below singular_threshold.
Complex2Matrix invert2(const Complex2Matrix& m);

// Phase k*L reduced into [0, 2 pi) using long double arithmetic.
double reduced_phase(double k, double length);

}  // namespace hrc
