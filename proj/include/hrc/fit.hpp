#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace hrc::fit {

enum class SweepKind { transmission, tf_position, tf_speed, ringdown };

// Sampled data: abscissa in Hz (or s for ringdown), strictly increasing.
struct SweepData {
  std::vector<double> x;
  std::vector<double> y;
  SweepKind kind = SweepKind::transmission;

  void validate() const;  // >= 8 points, increasing abscissa, finite values
};

struct Parameter {
  std::string name;
  double value = 0.0;
  double sigma = 0.0;
  bool at_bound = false;
};

struct FitResult {
  std::vector<Parameter> params;
  std::vector<double> covariance;  // row-major, fitted parameters only
  double residual_norm = 0.0;      // RMS of the residual vector
  double gradient_norm = 0.0;      // |J^T r| in scaled coordinates at the end
  int iterations = 0;
  int evaluations = 0;
  bool converged = false;
  std::string message;

  const Parameter& param(const std::string& name) const;  // throws std::out_of_range
  double value(const std::string& name) const { return param(name).value; }
};

// Writes m residuals for parameter vector x.
using ResidualFn = std::function<void(std::span<const double> x, std::span<double> residuals)>;

struct Problem {
  ResidualFn residuals;
  std::size_t residual_count = 0;
  std::vector<double> start;
  std::vector<std::string> names;   // defaults to p0, p1, ...
  std::vector<double> scales;       // typical magnitude per parameter; defaults to max(|start|, 1)
  std::vector<double> lower, upper; // empty means unbounded
};

struct Options {
  int max_iterations = 10000;
  double step_tolerance = 1e-10;      // relative parameter step
  double residual_tolerance = 1e-12;  // relative decrease of the sum of squares
};

// Minimises the sum of squared residuals: Nelder-Mead simplex to get into the
// basin, then damped Gauss-Newton to polish. Bounds are enforced by
// projection. Hitting the iteration cap yields converged = false; a
// non-finite objective at the start throws FitError.
FitResult minimize(const Problem& problem, const Options& options = {});

// Two Lorentzian peaks plus offset, a gamma^2 / ((f - f0)^2 + gamma^2) each.
// Reports amplitude_1/2, center_1/2_hz, linewidth_1/2_hz, offset and the
// derived splitting_hz and amplitude_ratio. With the round-trip length the
// splitting is also converted to the test-mass reflectivity, both as
// amplitude and as power.
FitResult fit_double_lorentzian(const SweepData& data,
                                std::optional<double> round_trip_length = std::nullopt);

// Amplitude-modulation transfer magnitudes: gain_position * gamma/|gamma - i Omega|
// and gain_speed * Omega/|gamma - i Omega| sharing one linewidth (linewidth_hz = gamma/2pi).
// Fitted on log magnitudes, so the result does not depend on the overall data scale.
FitResult fit_optical_tf(const SweepData& position, const SweepData& speed);
// Single channel; the kind of the data selects the model.
FitResult fit_optical_tf(const SweepData& channel);

// Straight line through a dB ringdown; reports quality_factor via
// Q = -10 omega_m / (slope ln 10).
FitResult fit_ringdown(const SweepData& data, double omega_m);

// Synthetic data used by the tests, the acceptance run and the shipped samples.
struct LorentzianPair {
  double center_1 = 0.0, linewidth_1 = 0.84e6, amplitude_1 = 1.0;
  double center_2 = 49.28e6, linewidth_2 = 0.95e6, amplitude_2 = 0.7;
  double offset = 0.0;
};

double double_lorentzian(const LorentzianPair& p, double f);

// Additive Gaussian noise with standard deviation noise * max(amplitude).
SweepData synthetic_transmission(const LorentzianPair& p, std::span<const double> freqs, double noise,
                                 std::uint64_t seed);
// Multiplicative Gaussian noise of relative size noise.
SweepData synthetic_tf(SweepKind kind, double linewidth_hz, double gain, std::span<const double> freqs,
                       double noise, std::uint64_t seed);
// 10 log10 of an exponential decay exp(-omega_m t / Q) with multiplicative noise.
SweepData synthetic_ringdown(double quality, double omega_m, std::span<const double> times,
                             double noise, std::uint64_t seed);

}  // namespace hrc::fit
