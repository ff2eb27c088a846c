#include <random>

#include "doctest.h"
#include "hrc/cavity_config.hpp"
#include "hrc/errors.hpp"
#include "hrc/matrix.hpp"
#include "test_support.hpp"

using namespace hrc;

namespace {

constexpr cplx I{0.0, 1.0};

bool all_finite(const Complex2Matrix& m) {
  for (cplx v : {m.m00, m.m01, m.m10, m.m11}) {
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("pauli algebra: sigma_j sigma_k = delta_jk + i eps_jkl sigma_l") {
  const auto id = Complex2Matrix::identity();
  for (int j = 1; j <= 3; ++j) CHECK(max_abs_diff(pauli(j) * pauli(j), id) == 0.0);
  CHECK(max_abs_diff(pauli(1) * pauli(2), I * pauli(3)) == 0.0);
  CHECK(max_abs_diff(pauli(2) * pauli(3), I * pauli(1)) == 0.0);
  CHECK(max_abs_diff(pauli(3) * pauli(1), I * pauli(2)) == 0.0);
  CHECK_THROWS_AS(pauli(0), ArgumentError);
  CHECK_THROWS_AS(pauli(4), ArgumentError);
}

TEST_CASE("invert2 examples") {
  CHECK(invert2(Complex2Matrix::identity()) == Complex2Matrix::identity());
  CHECK(invert2(Complex2Matrix::diag(2.0, 4.0)) == Complex2Matrix::diag(0.5, 0.25));
}

TEST_CASE("invert2 round trip on random well-conditioned matrices") {
  std::mt19937_64 rng(1);
  std::normal_distribution<double> n(0.0, 1.0);
  int tested = 0;
  for (int i = 0; i < 1000; ++i) {
    const Complex2Matrix m{{n(rng), n(rng)}, {n(rng), n(rng)}, {n(rng), n(rng)}, {n(rng), n(rng)}};
    if (std::abs(m.det()) <= 1e-6) continue;
    ++tested;
    const auto inv = invert2(m);
    CHECK(max_abs_diff(m * inv, Complex2Matrix::identity()) < 1e-12 * std::max(1.0, m.norm_inf() * inv.norm_inf()));
    CHECK(all_finite(inv));
  }
  CHECK(tested > 990);
}

TEST_CASE("invert2 rejects singular matrices and reports |det|") {
  const Complex2Matrix m{1.0, 2.0, 2.0, 4.0};
  CHECK_THROWS_AS(invert2(m), SingularMatrixError);
  try {
    invert2(Complex2Matrix{1.0, 1.0, 1.0, 1.0 + 1e-16});
    FAIL("expected SingularMatrixError");
  } catch (const SingularMatrixError& e) {
    CHECK(e.abs_det() < 1e-15);
  }
  // Relative threshold: a tiny but well-conditioned matrix is fine.
  CHECK_NOTHROW(invert2(Complex2Matrix::diag(1e-3, 1e-3)));
}

TEST_CASE("lossless mirror matrices are unitary") {
  std::mt19937_64 rng(2);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int i = 0; i < 200; ++i) {
    const double r = u(rng);
    const double t = std::sqrt(1.0 - r * r);
    const auto m = mirror_matrix(r, t);
    CHECK(max_abs_diff(m.adjoint() * m, Complex2Matrix::identity()) < 1e-12);
    const auto s = r * pauli(1);
    const Complex2Matrix input{-r, t, t, r};  // real input-mirror block [[-R, T], [T, R]]
    CHECK(max_abs_diff(input.adjoint() * input, Complex2Matrix::identity()) < 1e-12);
    (void)s;
  }
}

TEST_CASE("mirror_matrix rejects non-physical amplitudes") {
  CHECK_THROWS_AS(mirror_matrix(0.8, 0.7), NonPhysicalMirrorError);
  CHECK_NOTHROW(mirror_matrix(0.6, 0.8 + 1e-13));
}

TEST_CASE("reduced_phase agrees with a direct reduction and stays in [0, 2pi)") {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int i = 0; i < 200; ++i) {
    const double k = 1e6 + 1e7 * u(rng);
    const double L = 0.01 + 10.0 * u(rng);
    const double p = reduced_phase(k, L);
    CHECK(p >= 0.0);
    CHECK(p < 2.0 * M_PI);
    const long double direct = std::fmod(static_cast<long double>(k) * L, 2.0L * 3.14159265358979323846264338327950288L);
    CHECK(std::abs(std::polar(1.0, p) - std::polar(1.0, static_cast<double>(direct))) < 1e-9);
  }
}

TEST_CASE("propagation_matrix is diagonal with unit-modulus entries") {
  const auto cfg = CavityConfig::lossless(0.391, 0.01, 0.046);
  const auto p = propagation_matrix(cfg, 4.05e6);
  CHECK(p.m01 == cplx{});
  CHECK(p.m10 == cplx{});
  CHECK(std::abs(std::abs(p.m00) - 1.0) < 1e-15);
  CHECK(std::abs(std::abs(p.m11) - 1.0) < 1e-15);
}

TEST_CASE("arithmetic keeps finite inputs finite") {
  const Complex2Matrix a{1e150, -1e-150, 3.0, cplx{0, 2}};
  CHECK(all_finite(a * a.adjoint()));
  CHECK(all_finite(a + a.transpose()));
  const Complex2Vector v{1.0, I};
  CHECK(dot(v, v) == cplx{0.0, 0.0});
  CHECK(norm_squared(v) == 2.0);
}
