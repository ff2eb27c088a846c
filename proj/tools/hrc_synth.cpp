// Writes the synthetic sweep files shipped in data/.

#include <CLI11.hpp>
#include <cmath>
#include <cstdint>
#include <filesystem>
#include <iostream>
#include <string>
#include <vector>

#include "hrc/constants.hpp"
#include "hrc/errors.hpp"
#include "hrc/fit.hpp"
#include "hrc/membrane.hpp"
#include "hrc/table_io.hpp"

namespace fs = std::filesystem;
using namespace hrc;

namespace {

std::vector<double> linspace(double a, double b, int n) {
  std::vector<double> v(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) v[static_cast<std::size_t>(i)] = a + (b - a) * i / (n - 1);
  return v;
}

std::vector<double> logspace(double a, double b, int n) {
  auto v = linspace(std::log10(a), std::log10(b), n);
  for (auto& x : v) x = std::pow(10.0, x);
  return v;
}

void write(const fs::path& path, const fit::SweepData& data, bool time_axis, std::uint64_t seed,
           const std::vector<std::string>& truth) {
  cli::CsvTable table{time_axis ? std::vector<std::string>{"time_s", "amplitude_db"}
                                : std::vector<std::string>{"frequency_hz", "value"},
                      {}};
  for (std::size_t i = 0; i < data.x.size(); ++i) table.rows.push_back({data.x[i], data.y[i]});
  auto comments = cli::provenance_comments("", seed, truth);
  cli::write_atomic(path, table.render(comments));
  std::cout << "wrote " << path.string() << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Synthetic sweep generator"};
  std::string out_dir = "data";
  std::uint64_t seed = 20240611;
  double noise = 0.01;
  app.add_option("--out-dir", out_dir);
  app.add_option("--seed", seed);
  app.add_option("--noise", noise, "Relative noise level");
  CLI11_PARSE(app, argc, argv);

  try {
    const fs::path dir(out_dir);

    const fit::LorentzianPair pair;
    const auto f_tr = linspace(-10e6, 60e6, 1401);
    write(dir / "transmission.csv", fit::synthetic_transmission(pair, f_tr, noise, seed), false, seed,
          {"truth linewidth_1_hz 0.84e6 linewidth_2_hz 0.95e6 splitting_hz 49.28e6"});

    const double linewidth_hz = 0.9e6;
    const auto f_tf = logspace(1e4, 1e8, 400);
    write(dir / "tf_position.csv", fit::synthetic_tf(fit::SweepKind::tf_position, linewidth_hz, 1.0, f_tf, noise, seed + 1),
          false, seed + 1, {"truth linewidth_hz 0.9e6 gain 1"});
    write(dir / "tf_speed.csv", fit::synthetic_tf(fit::SweepKind::tf_speed, linewidth_hz, 1.0, f_tf, noise, seed + 2),
          false, seed + 2, {"truth linewidth_hz 0.9e6 gain 1"});

    const double quality = 4.6e5;
    const double omega_m = constants::two_pi * 395.2e3;
    const auto t = linspace(0.0, 0.5, 501);
    write(dir / "ringdown.csv", fit::synthetic_ringdown(quality, omega_m, t, noise, seed + 3), true, seed + 3,
          {"truth quality_factor 4.6e5 fundamental_hz 395.2e3"});
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
