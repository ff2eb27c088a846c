#include "doctest.h"
#include "hrc/constants.hpp"
#include "hrc/errors.hpp"
#include "hrc/membrane.hpp"
#include "hrc/transfer.hpp"
#include "test_support.hpp"

using namespace hrc;
using hrc::test::rel;

TEST_CASE("drum-mode frequencies") {
  const MembraneGeometry g;
  const auto modes = mode_frequencies(g, 3, 3);
  REQUIRE(modes.size() == 9);
  for (std::size_t i = 1; i < modes.size(); ++i) CHECK(modes[i].frequency_hz >= modes[i - 1].frequency_hz);
  for (const auto& m : modes) {
    const double expected = 0.5 * std::sqrt(g.stress / g.density) *
                            std::sqrt(std::pow(m.m / g.side_x, 2) + std::pow(m.n / g.side_y, 2));
    CHECK(rel(m.frequency_hz, expected) < 1e-14);
    CHECK(m.effective_mass == doctest::Approx(g.physical_mass() / 4));
    CHECK(m.quality == 4.6e5);
  }
  CHECK(modes[0].frequency_hz == doctest::Approx(384.9e3).epsilon(1e-3));
  CHECK(modes[1].frequency_hz / modes[0].frequency_hz == doctest::Approx(std::sqrt(2.5)));
  CHECK(modes[3].frequency_hz / modes[0].frequency_hz == doctest::Approx(2.0));
  CHECK(modes[4].frequency_hz / modes[0].frequency_hz == doctest::Approx(std::sqrt(5.0)));
}

TEST_CASE("frequency power laws in stress and density") {
  MembraneGeometry g;
  const double f = mode_frequencies(g, 1, 1)[0].frequency_hz;
  g.stress *= 2;
  CHECK(mode_frequencies(g, 1, 1)[0].frequency_hz == doctest::Approx(f * std::sqrt(2.0)));
  g.stress /= 2;
  g.density *= 2;
  CHECK(mode_frequencies(g, 1, 1)[0].frequency_hz == doctest::Approx(f / std::sqrt(2.0)));
  g.density = -1;
  CHECK_THROWS_AS(mode_frequencies(g, 1, 1), ArgumentError);
}

TEST_CASE("single sound-speed rescale") {
  const auto scaled = rescale_to_fundamental(mode_frequencies(MembraneGeometry{}, 3, 3), 395.2e3);
  CHECK(scaled[0].frequency_hz == doctest::Approx(395.2e3));
  CHECK(scaled[3].frequency_hz == doctest::Approx(790.4e3));
  CHECK_THROWS_AS(rescale_to_fundamental({}, 1.0), ArgumentError);
}

TEST_CASE("anti-resonance between modes and departure from the single-mode response") {
  const auto modes = mode_frequencies(MembraneGeometry{}, 3, 3);
  const double gamma = constants::two_pi * 0.84e6;
  const double f11 = modes[0].frequency_hz, f13 = modes[4].frequency_hz;
  std::vector<double> omegas;
  for (double f : test::linspace(f11 * 1.01, f13 * 0.99, 4001)) omegas.push_back(constants::two_pi * f);
  const auto multi = multimode_force_transfer(modes, 2, gamma, omegas);
  const auto single = multimode_force_transfer({modes[0]}, 2, gamma, omegas);
  double worst_db = 0.0;
  bool sign_change = false;
  for (std::size_t i = 0; i < omegas.size(); ++i) {
    worst_db = std::max(worst_db, std::abs(20 * std::log10(std::abs(multi[i]) / std::abs(single[i]))));
  }
  // Real part of the summed susceptibility crosses zero between f11 and f12.
  std::vector<double> gap;
  for (double f : test::linspace(f11 * 1.001, modes[1].frequency_hz * 0.999, 2001)) gap.push_back(constants::two_pi * f);
  const auto tf = multimode_force_transfer(modes, 2, gamma, gap);
  const auto sig = transfer_single_mode(gamma, 1.0, 1.0, gap.front()).b23;
  const double first = (tf.front() / sig).real();
  for (std::size_t i = 0; i < gap.size(); ++i) {
    const auto s = transfer_single_mode(gamma, 1.0, 1.0, gap[i]).b23;
    if ((tf[i] / s).real() * first < 0) sign_change = true;
  }
  CHECK(worst_db > 3.0);
  CHECK(sign_change);
  CHECK_THROWS_AS(multimode_force_transfer(modes, 3, gamma, omegas), ArgumentError);
}

TEST_CASE("port ratio") {
  const double gamma = 2.0;
  for (double w : {0.1, 1.0, 10.0}) {
    CHECK(port_ratio_db(gamma, w) == doctest::Approx(20 * std::log10(std::sqrt(4 * gamma * gamma + w * w) / w)));
  }
}

TEST_CASE("ringdown quality factor") {
  const double w = constants::two_pi * 395.2e3, Q = 4.6e5;
  auto level = [&](double t, double q) { return 10 * std::log10(std::exp(-w * t / q)); };
  const std::vector<double> t{0.0, 0.3};
  CHECK(ringdown_q(t, std::vector<double>{level(0, Q), level(0.3, Q)}, w) == doctest::Approx(Q).epsilon(1e-12));
  // Halving the decay time halves Q.
  const std::vector<double> faster{level(0, Q / 2), level(0.3, Q / 2)};
  CHECK(ringdown_q(t, faster, w) == doctest::Approx(Q / 2).epsilon(1e-12));
  CHECK_THROWS_AS(ringdown_q(t, std::vector<double>{0.0, 1.0}, w), FitError);
  CHECK_THROWS_AS(ringdown_q(std::vector<double>{0.0}, std::vector<double>{0.0}, w), ArgumentError);
}
