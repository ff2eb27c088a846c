#include "hrc/fit.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <random>
#include <stdexcept>

#include "hrc/constants.hpp"
#include "hrc/errors.hpp"

namespace hrc::fit {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Works in scaled coordinates u = x / scale, with projection onto the bounds.
class ScaledProblem {
 public:
  explicit ScaledProblem(const Problem& p) : p_(p), n_(p.start.size()), x_(n_), r_(p.residual_count) {
    scale_.resize(n_);
    lo_.assign(n_, -kInf);
    hi_.assign(n_, kInf);
    for (std::size_t i = 0; i < n_; ++i) {
      scale_[i] = p.scales.empty() ? std::max(std::abs(p.start[i]), 1.0) : p.scales[i];
      if (!(scale_[i] > 0.0)) throw ArgumentError("minimize: parameter scales must be positive");
      if (!p.lower.empty()) lo_[i] = p.lower[i] / scale_[i];
      if (!p.upper.empty()) hi_[i] = p.upper[i] / scale_[i];
    }
  }

  std::size_t size() const { return n_; }
  std::size_t residual_count() const { return r_.size(); }
  int evaluations() const { return evaluations_; }
  double scale(std::size_t i) const { return scale_[i]; }
  double lower(std::size_t i) const { return lo_[i]; }
  double upper(std::size_t i) const { return hi_[i]; }

  Eigen::VectorXd project(Eigen::VectorXd u) const {
    for (std::size_t i = 0; i < n_; ++i) u[i] = std::clamp(u[i], lo_[i], hi_[i]);
    return u;
  }

  // Sum of squares at u (already projected); +inf if anything is non-finite.
  double sse(const Eigen::VectorXd& u) const {
    const auto& r = residuals(u);
    double s = 0.0;
    for (double v : r) {
      if (!std::isfinite(v)) return kInf;
      s += v * v;
    }
    return s;
  }

  const std::vector<double>& residuals(const Eigen::VectorXd& u) const {
    for (std::size_t i = 0; i < n_; ++i) x_[i] = u[i] * scale_[i];
    ++evaluations_;
    p_.residuals(x_, r_);
    return r_;
  }

  Eigen::VectorXd residual_vector(const Eigen::VectorXd& u) const {
    const auto& r = residuals(u);
    return Eigen::Map<const Eigen::VectorXd>(r.data(), static_cast<Eigen::Index>(r.size()));
  }

  Eigen::MatrixXd jacobian(const Eigen::VectorXd& u) const {
    Eigen::MatrixXd J(static_cast<Eigen::Index>(r_.size()), static_cast<Eigen::Index>(n_));
    for (std::size_t i = 0; i < n_; ++i) {
      const double h = 1e-6 * std::max(1.0, std::abs(u[i]));
      Eigen::VectorXd up = u;
      Eigen::VectorXd down = u;
      double span = 2.0 * h;
      if (u[i] + h > hi_[i]) {
        span = h;
      } else {
        up[i] += h;
      }
      if (u[i] - h < lo_[i]) {
        span -= h;
      } else {
        down[i] -= h;
      }
      if (span <= 0.0) {
        J.col(static_cast<Eigen::Index>(i)).setZero();
        continue;
      }
      const Eigen::VectorXd rp = residual_vector(up);
      const Eigen::VectorXd rm = residual_vector(down);
      J.col(static_cast<Eigen::Index>(i)) = (rp - rm) / span;
    }
    return J;
  }

 private:
  const Problem& p_;
  std::size_t n_;
  std::vector<double> scale_, lo_, hi_;
  mutable std::vector<double> x_;
  mutable std::vector<double> r_;
  mutable int evaluations_ = 0;
};

struct Iterate {
  Eigen::VectorXd u;
  double f;
};

Iterate nelder_mead(const ScaledProblem& sp, Iterate start, int max_evaluations, int& iterations) {
  const std::size_t n = sp.size();
  std::vector<Iterate> simplex{start};
  for (std::size_t i = 0; i < n; ++i) {
    Eigen::VectorXd u = start.u;
    u[i] += 0.1;
    if (u[i] > sp.upper(i)) u[i] = start.u[i] - 0.1;
    u = sp.project(u);
    simplex.push_back({u, sp.sse(u)});
  }
  auto by_f = [](const Iterate& a, const Iterate& b) { return a.f < b.f; };
  const int budget = sp.evaluations() + max_evaluations;
  while (sp.evaluations() < budget) {
    std::sort(simplex.begin(), simplex.end(), by_f);
    ++iterations;
    const double spread = simplex.back().f - simplex.front().f;
    double diameter = 0.0;
    for (std::size_t i = 1; i <= n; ++i) {
      diameter = std::max(diameter, (simplex[i].u - simplex[0].u).lpNorm<Eigen::Infinity>());
    }
    if (spread <= 1e-14 * std::abs(simplex.front().f) + 1e-300 || diameter < 1e-9) break;

    Eigen::VectorXd centroid = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(n));
    for (std::size_t i = 0; i < n; ++i) centroid += simplex[i].u;
    centroid /= static_cast<double>(n);
    const Iterate& worst = simplex.back();

    auto point = [&](double coeff) {
      Eigen::VectorXd u = sp.project(centroid + coeff * (worst.u - centroid));
      return Iterate{u, sp.sse(u)};
    };
    Iterate reflected = point(-1.0);
    if (reflected.f < simplex.front().f) {
      Iterate expanded = point(-2.0);
      simplex.back() = expanded.f < reflected.f ? expanded : reflected;
    } else if (reflected.f < simplex[n - 1].f) {
      simplex.back() = reflected;
    } else {
      Iterate contracted = reflected.f < worst.f ? point(-0.5) : point(0.5);
      if (contracted.f < std::min(reflected.f, worst.f)) {
        simplex.back() = contracted;
      } else {
        for (std::size_t i = 1; i <= n; ++i) {
          Eigen::VectorXd u = sp.project(simplex[0].u + 0.5 * (simplex[i].u - simplex[0].u));
          simplex[i] = {u, sp.sse(u)};
        }
      }
    }
  }
  return *std::min_element(simplex.begin(), simplex.end(), by_f);
}

}  // namespace

void SweepData::validate() const {
  if (x.size() != y.size()) throw ArgumentError("sweep: column lengths differ");
  if (x.size() < 8) throw ArgumentError("sweep: need at least 8 points");
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (!std::isfinite(x[i]) || !std::isfinite(y[i])) throw ArgumentError("sweep: non-finite value");
    if (i > 0 && !(x[i] > x[i - 1])) throw ArgumentError("sweep: abscissa must be strictly increasing");
  }
}

const Parameter& FitResult::param(const std::string& name) const {
  for (const auto& p : params) {
    if (p.name == name) return p;
  }
  throw std::out_of_range("fit result has no parameter '" + name + "'");
}

FitResult minimize(const Problem& problem, const Options& options) {
  const std::size_t n = problem.start.size();
  if (n == 0) throw ArgumentError("minimize: no parameters");
  if (problem.residual_count == 0) throw ArgumentError("minimize: no residuals");
  if ((!problem.lower.empty() && problem.lower.size() != n) ||
      (!problem.upper.empty() && problem.upper.size() != n) ||
      (!problem.scales.empty() && problem.scales.size() != n) ||
      (!problem.names.empty() && problem.names.size() != n)) {
    throw ArgumentError("minimize: bounds, scales and names must match the parameter count");
  }
  ScaledProblem sp(problem);
  Eigen::VectorXd u0(static_cast<Eigen::Index>(n));
  for (std::size_t i = 0; i < n; ++i) u0[i] = problem.start[i] / sp.scale(i);
  u0 = sp.project(u0);
  Iterate best{u0, sp.sse(u0)};
  if (!std::isfinite(best.f)) throw FitError("minimize: objective is not finite at the start point");

  FitResult result;
  int iterations = 0;
  best = nelder_mead(sp, best, std::min(options.max_iterations, 400 * static_cast<int>(n + 1)), iterations);

  // Damped Gauss-Newton (Levenberg-Marquardt style) polish.
  double lambda = 1e-3;
  bool converged = best.f == 0.0;
  std::string message = converged ? "exact fit" : "";
  Eigen::MatrixXd J;
  while (!converged && iterations < options.max_iterations) {
    ++iterations;
    J = sp.jacobian(best.u);
    const Eigen::VectorXd r = sp.residual_vector(best.u);
    const Eigen::VectorXd g = J.transpose() * r;
    const Eigen::MatrixXd H = J.transpose() * J;
    bool accepted = false;
    while (lambda < 1e16) {
      Eigen::MatrixXd A = H;
      const double floor = 1e-12 * std::max(H.diagonal().maxCoeff(), 1e-300);
      for (Eigen::Index i = 0; i < A.rows(); ++i) A(i, i) += lambda * std::max(H(i, i), floor);
      const Eigen::VectorXd step = A.ldlt().solve(-g);
      const Eigen::VectorXd trial_u = sp.project(best.u + step);
      const double trial_f = sp.sse(trial_u);
      if (std::isfinite(trial_f) && trial_f <= best.f) {
        const double moved = (trial_u - best.u).norm();
        const double decrease = best.f - trial_f;
        best = {trial_u, trial_f};
        lambda = std::max(lambda / 3.0, 1e-12);
        accepted = true;
        if (moved <= options.step_tolerance * (best.u.norm() + options.step_tolerance)) {
          converged = true;
          message = "parameter step below tolerance";
        } else if (decrease <= options.residual_tolerance * best.f) {
          converged = true;
          message = "residual decrease below tolerance";
        }
        break;
      }
      lambda *= 4.0;
    }
    if (!accepted) {
      converged = true;
      message = "no further decrease possible";
    }
  }
  if (!converged) message = "iteration cap reached";

  J = sp.jacobian(best.u);
  const Eigen::VectorXd r = sp.residual_vector(best.u);
  result.gradient_norm = (J.transpose() * r).norm();
  const auto m = static_cast<double>(sp.residual_count());
  const double dof = std::max(1.0, m - static_cast<double>(n));
  const Eigen::MatrixXd H = J.transpose() * J;
  Eigen::MatrixXd cov_u = H.completeOrthogonalDecomposition().pseudoInverse() * (best.f / dof);

  result.covariance.assign(n * n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    const double xi = best.u[static_cast<Eigen::Index>(i)] * sp.scale(i);
    Parameter p;
    p.name = problem.names.empty() ? "p" + std::to_string(i) : problem.names[i];
    p.value = xi;
    p.sigma = std::sqrt(std::max(0.0, cov_u(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(i)))) *
              sp.scale(i);
    const double tol = 1e-12 * std::max(1.0, std::abs(best.u[static_cast<Eigen::Index>(i)]));
    p.at_bound = std::abs(best.u[static_cast<Eigen::Index>(i)] - sp.lower(i)) <= tol ||
                 std::abs(best.u[static_cast<Eigen::Index>(i)] - sp.upper(i)) <= tol;
    result.params.push_back(p);
    for (std::size_t j = 0; j < n; ++j) {
      result.covariance[i * n + j] =
          cov_u(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) * sp.scale(i) * sp.scale(j);
    }
  }
  result.residual_norm = std::sqrt(best.f / m);
  result.iterations = iterations;
  result.evaluations = sp.evaluations();
  result.converged = converged;
  result.message = message;
  return result;
}

namespace {

double covariance_at(const FitResult& fit, std::size_t i, std::size_t j) {
  const std::size_t n = static_cast<std::size_t>(std::sqrt(static_cast<double>(fit.covariance.size())));
  return fit.covariance[i * n + j];
}

double median(std::vector<double> v) {
  const auto mid = v.begin() + static_cast<std::ptrdiff_t>(v.size() / 2);
  std::nth_element(v.begin(), mid, v.end());
  return *mid;
}

struct PeakGuess {
  std::size_t index;
  double height;
  double half_width;
};

// Contiguous regions above threshold, merged across gaps of <= 2 samples;
// one peak (the maximum) per region.
std::vector<PeakGuess> pick_peaks(const SweepData& d, double baseline) {
  const double top = *std::max_element(d.y.begin(), d.y.end());
  const double threshold = std::max(3.0 * baseline, baseline + 0.1 * (top - baseline));
  std::vector<PeakGuess> peaks;
  std::size_t i = 0;
  const std::size_t n = d.y.size();
  while (i < n) {
    if (d.y[i] <= threshold) {
      ++i;
      continue;
    }
    std::size_t end = i;
    std::size_t gap = 0;
    for (std::size_t j = i; j < n && gap <= 2; ++j) {
      if (d.y[j] > threshold) {
        end = j;
        gap = 0;
      } else {
        ++gap;
      }
    }
    std::size_t best = i;
    for (std::size_t j = i; j <= end; ++j) {
      if (d.y[j] > d.y[best]) best = j;
    }
    const double half = baseline + 0.5 * (d.y[best] - baseline);
    std::size_t left = best;
    while (left > 0 && d.y[left] > half) --left;
    std::size_t right = best;
    while (right + 1 < n && d.y[right] > half) ++right;
    const double width = 0.5 * (d.x[right] - d.x[left]);
    peaks.push_back({best, d.y[best] - baseline, std::max(width, d.x[1] - d.x[0])});
    i = end + 1;
  }
  std::sort(peaks.begin(), peaks.end(), [](const auto& a, const auto& b) { return a.height > b.height; });
  return peaks;
}

void append_derived(FitResult& fit, const std::string& name, double value, double sigma) {
  fit.params.push_back({name, value, std::max(0.0, sigma), false});
}

}  // namespace

double double_lorentzian(const LorentzianPair& p, double f) {
  const double d1 = f - p.center_1;
  const double d2 = f - p.center_2;
  const double g1 = p.linewidth_1 * p.linewidth_1;
  const double g2 = p.linewidth_2 * p.linewidth_2;
  return p.amplitude_1 * g1 / (d1 * d1 + g1) + p.amplitude_2 * g2 / (d2 * d2 + g2) + p.offset;
}

FitResult fit_double_lorentzian(const SweepData& data, std::optional<double> round_trip_length) {
  data.validate();
  if (data.kind != SweepKind::transmission) throw ArgumentError("double Lorentzian fit needs transmission data");
  const double baseline = median(data.y);
  const auto peaks = pick_peaks(data, baseline);
  if (peaks.size() < 2) {
    throw FitError("double Lorentzian fit: found " + std::to_string(peaks.size()) +
                   " peak(s); data look like a single resonance, use a single-Lorentzian model");
  }
  auto first = peaks[0];
  auto second = peaks[1];
  if (data.x[second.index] < data.x[first.index]) std::swap(first, second);

  const double span = data.x.back() - data.x.front();
  Problem prob;
  prob.residual_count = data.x.size();
  prob.names = {"amplitude_1", "center_1_hz", "linewidth_1_hz", "amplitude_2",
                "center_2_hz", "linewidth_2_hz", "offset"};
  prob.start = {first.height, data.x[first.index], first.half_width, second.height,
                data.x[second.index], second.half_width, baseline};
  const double height = std::max(first.height, second.height);
  prob.scales = {height, first.half_width, first.half_width, height,
                 second.half_width, second.half_width, height};
  const double inf = std::numeric_limits<double>::infinity();
  prob.lower = {0.0, -inf, 1e-9 * span, 0.0, -inf, 1e-9 * span, -inf};
  prob.upper = {inf, inf, span, inf, inf, span, inf};
  prob.residuals = [&data](std::span<const double> p, std::span<double> r) {
    const LorentzianPair model{p[1], p[2], p[0], p[4], p[5], p[3], p[6]};
    for (std::size_t i = 0; i < data.x.size(); ++i) r[i] = double_lorentzian(model, data.x[i]) - data.y[i];
  };
  FitResult fit = minimize(prob);

  const double splitting = fit.value("center_2_hz") - fit.value("center_1_hz");
  const double split_var = covariance_at(fit, 1, 1) + covariance_at(fit, 4, 4) - 2.0 * covariance_at(fit, 1, 4);
  append_derived(fit, "splitting_hz", splitting, std::sqrt(std::max(0.0, split_var)));
  const double a1 = fit.value("amplitude_1");
  const double a2 = fit.value("amplitude_2");
  const double ratio = a2 / a1;
  const double ratio_var = ratio * ratio *
                           (covariance_at(fit, 0, 0) / (a1 * a1) + covariance_at(fit, 3, 3) / (a2 * a2) -
                            2.0 * covariance_at(fit, 0, 3) / (a1 * a2));
  append_derived(fit, "amplitude_ratio", ratio, std::sqrt(std::max(0.0, ratio_var)));

  if (round_trip_length) {
    // Splitting (Hz) = (c / (pi L)) arcsin r.
    const double L = *round_trip_length;
    if (!(L > 0.0)) throw ArgumentError("double Lorentzian fit: round-trip length must be positive");
    const double arg = constants::pi * L * std::abs(splitting) / constants::c;
    if (arg <= 1.0) {
      const double r = std::sin(arg);
      const double dr = std::cos(arg) * constants::pi * L / constants::c * std::sqrt(std::max(0.0, split_var));
      append_derived(fit, "membrane_reflectivity_amplitude", r, dr);
      append_derived(fit, "membrane_reflectivity_power", r * r, 2.0 * r * dr);
    }
  }
  return fit;
}

namespace {

double tf_shape(SweepKind kind, double gamma, double omega) {
  const double mag = std::hypot(gamma, omega);
  return kind == SweepKind::tf_position ? gamma / mag : omega / mag;
}

FitResult fit_tf_channels(std::span<const SweepData* const> channels) {
  std::size_t total = 0;
  double f_lo = std::numeric_limits<double>::infinity();
  double f_hi = 0.0;
  for (const SweepData* ch : channels) {
    ch->validate();
    if (ch->kind != SweepKind::tf_position && ch->kind != SweepKind::tf_speed) {
      throw ArgumentError("optical TF fit needs tf_position or tf_speed data");
    }
    for (double y : ch->y) {
      if (!(y > 0.0)) throw ArgumentError("optical TF fit: magnitudes must be positive");
    }
    if (ch->x.front() <= 0.0) throw ArgumentError("optical TF fit: frequencies must be positive");
    total += ch->x.size();
    f_lo = std::min(f_lo, ch->x.front());
    f_hi = std::max(f_hi, ch->x.back());
  }
  if (channels.size() == 2 &&
      (channels[0]->x.back() < channels[1]->x.front() || channels[1]->x.back() < channels[0]->x.front())) {
    throw ArgumentError("optical TF fit: channel frequency ranges do not overlap");
  }

  // Log residuals: gains enter additively, so for a trial linewidth the best
  // log-gain is the mean log ratio. Coarse scan for the start point.
  auto best_log_gain = [](const SweepData& ch, double gamma) {
    double s = 0.0;
    for (std::size_t i = 0; i < ch.x.size(); ++i) {
      s += std::log(ch.y[i]) - std::log(tf_shape(ch.kind, gamma, constants::two_pi * ch.x[i]));
    }
    return s / static_cast<double>(ch.x.size());
  };
  auto scan_cost = [&](double gamma) {
    double cost = 0.0;
    for (const SweepData* ch : channels) {
      const double lg = best_log_gain(*ch, gamma);
      for (std::size_t i = 0; i < ch->x.size(); ++i) {
        const double d = lg + std::log(tf_shape(ch->kind, gamma, constants::two_pi * ch->x[i])) - std::log(ch->y[i]);
        cost += d * d;
      }
    }
    return cost;
  };
  const double centre = std::sqrt(f_lo * f_hi);
  double gamma0 = constants::two_pi * centre;
  double best_cost = std::numeric_limits<double>::infinity();
  for (int i = -60; i <= 60; ++i) {
    const double gamma = constants::two_pi * centre * std::pow(10.0, i / 20.0);
    const double cost = scan_cost(gamma);
    if (cost < best_cost) {
      best_cost = cost;
      gamma0 = gamma;
    }
  }

  Problem prob;
  prob.residual_count = total;
  prob.names = {"linewidth_hz"};
  prob.start = {gamma0 / constants::two_pi};
  prob.scales = {gamma0 / constants::two_pi};
  prob.lower = {1e-6 * gamma0 / constants::two_pi};
  prob.upper = {std::numeric_limits<double>::infinity()};
  for (const SweepData* ch : channels) {
    const bool pos = ch->kind == SweepKind::tf_position;
    prob.names.push_back(pos ? "gain_position" : "gain_speed");
    const double g0 = std::exp(best_log_gain(*ch, gamma0));
    prob.start.push_back(g0);
    prob.scales.push_back(g0);
    prob.lower.push_back(0.0);
    prob.upper.push_back(std::numeric_limits<double>::infinity());
  }
  prob.residuals = [channels](std::span<const double> p, std::span<double> r) {
    const double gamma = constants::two_pi * p[0];
    std::size_t k = 0;
    for (std::size_t c = 0; c < channels.size(); ++c) {
      const SweepData& ch = *channels[c];
      const double lg = std::log(p[1 + c]);
      for (std::size_t i = 0; i < ch.x.size(); ++i) {
        r[k++] = lg + std::log(tf_shape(ch.kind, gamma, constants::two_pi * ch.x[i])) - std::log(ch.y[i]);
      }
    }
  };
  return minimize(prob);
}

}  // namespace

FitResult fit_optical_tf(const SweepData& position, const SweepData& speed) {
  if (position.kind != SweepKind::tf_position || speed.kind != SweepKind::tf_speed) {
    throw ArgumentError("optical TF fit: expected one position and one speed channel");
  }
  const SweepData* channels[] = {&position, &speed};
  return fit_tf_channels(channels);
}

FitResult fit_optical_tf(const SweepData& channel) {
  const SweepData* channels[] = {&channel};
  return fit_tf_channels(channels);
}

FitResult fit_ringdown(const SweepData& data, double omega_m) {
  data.validate();
  if (data.kind != SweepKind::ringdown) throw ArgumentError("ringdown fit needs ringdown data");
  if (!(omega_m > 0.0)) throw ArgumentError("ringdown fit: mechanical frequency must be positive");
  const double n = static_cast<double>(data.x.size());
  const double t_mean = std::accumulate(data.x.begin(), data.x.end(), 0.0) / n;
  const double y_mean = std::accumulate(data.y.begin(), data.y.end(), 0.0) / n;
  double sxy = 0.0;
  double sxx = 0.0;
  for (std::size_t i = 0; i < data.x.size(); ++i) {
    sxy += (data.x[i] - t_mean) * (data.y[i] - y_mean);
    sxx += (data.x[i] - t_mean) * (data.x[i] - t_mean);
  }
  const double slope0 = sxy / sxx;
  if (!(slope0 < 0.0)) throw FitError("ringdown fit: trace does not decay");
  const double intercept0 = y_mean - slope0 * t_mean;

  Problem prob;
  prob.residual_count = data.x.size();
  prob.names = {"intercept_db", "slope_db_per_s"};
  prob.start = {intercept0, slope0};
  const double duration = data.x.back() - data.x.front();
  prob.scales = {std::max(std::abs(intercept0), std::abs(slope0) * duration), std::abs(slope0)};
  prob.residuals = [&data](std::span<const double> p, std::span<double> r) {
    for (std::size_t i = 0; i < data.x.size(); ++i) r[i] = p[0] + p[1] * data.x[i] - data.y[i];
  };
  FitResult fit = minimize(prob);
  const double slope = fit.value("slope_db_per_s");
  if (!(slope < 0.0)) throw FitError("ringdown fit: fitted slope does not decay");
  const double q = -10.0 * omega_m / (slope * std::log(10.0));
  append_derived(fit, "quality_factor", q, q * fit.param("slope_db_per_s").sigma / std::abs(slope));
  return fit;
}

SweepData synthetic_transmission(const LorentzianPair& p, std::span<const double> freqs, double noise,
                                 std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, noise * std::max(p.amplitude_1, p.amplitude_2));
  SweepData d;
  d.kind = SweepKind::transmission;
  for (double f : freqs) {
    d.x.push_back(f);
    d.y.push_back(double_lorentzian(p, f) + (noise > 0.0 ? gauss(rng) : 0.0));
  }
  return d;
}

SweepData synthetic_tf(SweepKind kind, double linewidth_hz, double gain, std::span<const double> freqs,
                       double noise, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  SweepData d;
  d.kind = kind;
  for (double f : freqs) {
    d.x.push_back(f);
    const double clean = gain * tf_shape(kind, constants::two_pi * linewidth_hz, constants::two_pi * f);
    d.y.push_back(clean * (1.0 + (noise > 0.0 ? noise * gauss(rng) : 0.0)));
  }
  return d;
}

SweepData synthetic_ringdown(double quality, double omega_m, std::span<const double> times, double noise,
                             std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  SweepData d;
  d.kind = SweepKind::ringdown;
  for (double t : times) {
    d.x.push_back(t);
    const double level = std::exp(-omega_m * t / quality) * (1.0 + (noise > 0.0 ? noise * gauss(rng) : 0.0));
    d.y.push_back(10.0 * std::log10(level));
  }
  return d;
}

}  // namespace hrc::fit
