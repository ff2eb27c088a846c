// Command-line front end: one subcommand per simulation or fit recipe.

#include <CLI11.hpp>
#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <filesystem>
#include <iostream>
#include <limits>
#include <string>
#include <vector>

#include "hrc/cavity.hpp"
#include "hrc/config.hpp"
#include "hrc/constants.hpp"
#include "hrc/errors.hpp"
#include "hrc/fit.hpp"
#include "hrc/membrane.hpp"
#include "hrc/meters.hpp"
#include "hrc/noise.hpp"
#include "hrc/table_io.hpp"
#include "hrc/transfer.hpp"

namespace fs = std::filesystem;
using namespace hrc;
using hrc::cli::CsvTable;
using hrc::cli::RunConfig;

namespace {

constexpr int kOk = 0;
constexpr int kValidation = 2;
constexpr int kNumerical = 3;

struct Globals {
  std::string config_path;
  std::string out_dir;
  std::uint64_t seed = 0;
};

struct Context {
  RunConfig cfg;
  fs::path out_dir;
  std::uint64_t seed;

  void emit(const std::string& name, const CsvTable& table, const std::vector<std::string>& extra = {}) const {
    const auto path = out_dir / name;
    cli::write_atomic(path, table.render(cli::provenance_comments(cfg.text, seed, extra)));
    std::cerr << "wrote " << path.string() << "\n";
  }

  std::vector<double> omegas() const {
    auto f = cfg.grid.frequencies_hz();
    for (auto& v : f) v *= constants::two_pi;
    return f;
  }
};

double hz(double omega) { return omega / constants::two_pi; }

int run_resonance(const Context& ctx) {
  const auto& cav = ctx.cfg.cavity;
  constexpr int n = 20000;
  std::vector<double> phases(n);
  for (int i = 0; i < n; ++i) phases[static_cast<std::size_t>(i)] = constants::two_pi * i / n;
  CsvTable table{{"phase_rad", "intensity_norm"}, {}};
  for (const auto& [phase, intensity] : intracavity_intensity_sweep(cav, phases)) {
    table.rows.push_back({phase, intensity});
  }
  const double split = hz(mode_splitting(cav));
  std::vector<std::string> extra{"splitting_hz " + cli::format_number(split)};
  std::string pair_note;
  try {
    const auto pair = resonance_frequencies(cav);
    extra.push_back("resonance_lower_hz " + cli::format_number(hz(pair.lower)));
    extra.push_back("resonance_upper_hz " + cli::format_number(hz(pair.upper)));
    extra.push_back("carrier_detuning_hz " + cli::format_number(hz(pair.carrier_detuning)));
    pair_note = ", pair " + cli::format_number(hz(pair.lower) / 1e6) + " / " +
                cli::format_number(hz(pair.upper) / 1e6) + " MHz";
  } catch (const NoSplitResonanceError&) {
    pair_note = ", no split pair";
  }
  ctx.emit("resonance.csv", table, extra);
  std::cout << "splitting " << split / 1e6 << " MHz, FSR " << cav.free_spectral_range_hz() / 1e6 << " MHz"
            << pair_note << "\n";
  return kOk;
}

int run_tf(const Context& ctx, const std::string& port) {
  const auto carrier = tune_carrier(ctx.cfg.cavity, ctx.cfg.laser);
  const double k = ctx.cfg.laser.wavenumber();
  const double A = ctx.cfg.laser.amplitude();
  const bool p1 = port != "2";
  const bool p2 = port != "1";
  CsvTable table;
  table.columns = {"omega_hz"};
  auto add = [&](const char* name) {
    table.columns.push_back(std::string("abs_") + name);
    table.columns.push_back(std::string("arg_") + name);
  };
  if (p1) add("b11"), add("b12");
  if (p2) add("b21"), add("b22");
  if (p1) add("b13");
  if (p2) add("b23");
  double worst_unitarity = 0.0;
  for (double w : ctx.omegas()) {
    const auto ts = transfer_full(ctx.cfg.cavity, carrier, k, A, w);
    std::vector<double> row{hz(w)};
    auto push = [&](cplx v) {
      row.push_back(std::abs(v));
      row.push_back(std::arg(v));
    };
    if (p1) push(ts.b11), push(ts.b12);
    if (p2) push(ts.b21), push(ts.b22);
    if (p1) push(ts.b13);
    if (p2) push(ts.b23);
    table.rows.push_back(std::move(row));
    worst_unitarity = std::max(worst_unitarity, std::abs(std::norm(ts.b11) + std::norm(ts.b21) - 1.0));
  }
  ctx.emit("tf.csv", table, {"full model, carrier on the configured split resonance"});
  std::cout << "linewidth " << hz(ctx.cfg.cavity.linewidth()) / 1e6 << " MHz, max unitarity defect "
            << worst_unitarity << "\n";
  return kOk;
}

int run_noise(const Context& ctx, double zeta, int port, bool optimal) {
  BudgetOptions opt;
  opt.zeta = zeta;
  opt.optimal_readout = optimal;
  const auto budget = total_budget(ctx.cfg.cavity, ctx.cfg.laser, ctx.cfg.mechanics, ctx.omegas(), opt);
  CsvTable table{{"omega_hz", "s_shot_1", "s_shot_2", "s_rp_x", "s_rp_v", "s_total_1", "s_total_2", "s_sql"}, {}};
  double best = std::numeric_limits<double>::infinity();
  double best_f = 0.0;
  for (const auto& b : budget) {
    table.rows.push_back({hz(b.omega), b.shot_1, b.shot_2, b.rp_position, b.rp_speed, b.total_1, b.total_2, b.sql});
    const double ratio = (port == 1 ? b.total_1 : b.total_2) / b.sql;
    if (ratio < best) {
      best = ratio;
      best_f = hz(b.omega);
    }
  }
  ctx.emit("noise.csv", table,
           {"zeta_rad " + cli::format_number(zeta), std::string("optimal_readout ") + (optimal ? "1" : "0"),
            "spring_constant_n_per_m " + cli::format_number(budget.front().spring_constant)});
  std::cout << "port " << port << (optimal && port == 2 ? " (filtered)" : "") << ": min S/S_SQL " << best
            << " at " << best_f << " Hz\n";
  return kOk;
}

int run_membrane(const Context& ctx) {
  const auto modes = ctx.cfg.modes();
  const auto omegas = ctx.omegas();
  const double gamma = ctx.cfg.cavity.linewidth();
  const auto tf1 = multimode_force_transfer(modes, 1, gamma, omegas);
  const auto tf2 = multimode_force_transfer(modes, 2, gamma, omegas);
  CsvTable table{{"omega_hz", "abs_tf_port1", "abs_tf_port2", "ratio_db"}, {}};
  for (std::size_t i = 0; i < omegas.size(); ++i) {
    const double a1 = std::abs(tf1[i]);
    const double a2 = std::abs(tf2[i]);
    table.rows.push_back({hz(omegas[i]), a1, a2, 20.0 * std::log10(a1 / a2)});
  }
  std::vector<std::string> extra;
  std::string ladder;
  for (const auto& m : modes) {
    extra.push_back("mode " + std::to_string(m.m) + "," + std::to_string(m.n) + " " +
                    cli::format_number(m.frequency_hz) + " Hz");
    if (ladder.size() < 60) ladder += (ladder.empty() ? "" : ", ") + cli::format_number(std::round(m.frequency_hz / 1e2) / 10.0);
  }
  ctx.emit("membrane.csv", table, extra);
  std::cout << "modes (kHz): " << ladder << "\n";
  return kOk;
}

int run_compare(const Context& ctx) {
  const auto& c = ctx.cfg;
  MeterParams meter{c.laser.wavenumber(), c.laser.input_power, c.cavity.round_trip_time(), c.mechanics.mass};
  BudgetOptions plain;
  plain.zeta = c.zeta;
  BudgetOptions filtered = plain;
  filtered.optimal_readout = true;
  const auto omegas = ctx.omegas();
  const auto hrc_plain = total_budget(c.cavity, c.laser, c.mechanics, omegas, plain);
  const auto hrc_filtered = total_budget(c.cavity, c.laser, c.mechanics, omegas, filtered);
  CsvTable table{{"omega_hz", "free_speed", "free_position", "hrc_port1", "hrc_port2", "hrc_postprocessed"}, {}};
  std::vector<double> mins(5, std::numeric_limits<double>::infinity());
  for (std::size_t i = 0; i < omegas.size(); ++i) {
    const double w = omegas[i];
    const double sql = standard_quantum_limit(c.mechanics.mass, w);
    const std::vector<double> v{meter_sensitivity(meter, MeterKind::speed, w) / sql,
                                meter_sensitivity(meter, MeterKind::position, w) / sql,
                                hrc_plain[i].total_1 / sql, hrc_plain[i].total_2 / sql,
                                hrc_filtered[i].total_2 / sql};
    std::vector<double> row{hz(w)};
    for (std::size_t j = 0; j < v.size(); ++j) {
      row.push_back(v[j]);
      mins[j] = std::min(mins[j], v[j]);
    }
    table.rows.push_back(std::move(row));
  }
  ctx.emit("compare.csv", table, {"values are S_x / S_SQL"});
  std::cout << "min S/S_SQL: free speed " << mins[0] << ", free position " << mins[1] << ", HRC port 1 "
            << mins[2] << ", HRC port 2 " << mins[3] << ", post-processed " << mins[4] << "\n";
  return kOk;
}

int run_fit(const Context& ctx, const std::string& kind, const std::vector<std::string>& inputs,
            const std::string& out) {
  fit::FitResult result;
  std::string summary;
  if (kind == "transmission") {
    if (inputs.size() != 1) throw ArgumentError("fit --kind transmission takes one --in file");
    const auto data = cli::read_sweep_csv(inputs[0], fit::SweepKind::transmission);
    result = fit::fit_double_lorentzian(data, ctx.cfg.cavity.round_trip_length());
    summary = "linewidths " + cli::format_number(result.value("linewidth_1_hz") / 1e6) + " / " +
              cli::format_number(result.value("linewidth_2_hz") / 1e6) + " MHz, splitting " +
              cli::format_number(result.value("splitting_hz") / 1e6) + " MHz";
  } else if (kind == "tf") {
    if (inputs.size() != 2) throw ArgumentError("fit --kind tf takes two --in files: position then speed");
    const auto pos = cli::read_sweep_csv(inputs[0], fit::SweepKind::tf_position);
    const auto speed = cli::read_sweep_csv(inputs[1], fit::SweepKind::tf_speed);
    result = fit::fit_optical_tf(pos, speed);
    summary = "linewidth " + cli::format_number(result.value("linewidth_hz") / 1e6) + " MHz";
  } else {
    if (inputs.size() != 1) throw ArgumentError("fit --kind ringdown takes one --in file");
    const auto data = cli::read_sweep_csv(inputs[0], fit::SweepKind::ringdown);
    const auto modes = ctx.cfg.modes();
    result = fit::fit_ringdown(data, constants::two_pi * modes.front().frequency_hz);
    summary = "Q " + cli::format_number(result.value("quality_factor"));
  }
  const fs::path path = out.empty() ? ctx.out_dir / ("fit_" + kind + ".json") : fs::path(out);
  cli::write_atomic(path, cli::fit_to_json(result));
  std::cerr << "wrote " << path.string() << "\n";
  std::cout << summary << (result.converged ? "" : " (not converged)") << "\n";
  return result.converged ? kOk : kNumerical;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hybrid readout cavity simulator and fitter"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  app.add_option("--config", g.config_path, "Configuration file (INI sections)");
  app.add_option("--out-dir", g.out_dir, "Directory for output files (overrides [output] dir)");
  app.add_option("--seed", g.seed, "Seed recorded in outputs");

  auto* resonance = app.add_subcommand("resonance", "Intra-cavity intensity vs phase and mode splitting");
  auto* tf = app.add_subcommand("tf", "Sideband transfer coefficients");
  std::string tf_port = "both";
  tf->add_option("--port", tf_port)->check(CLI::IsMember({"1", "2", "both"}));
  auto* noise = app.add_subcommand("noise", "Displacement-referred noise budget");
  double zeta = constants::pi / 2.0;
  int noise_port = 2;
  bool optimal = false;
  noise->add_option("--zeta", zeta, "Homodyne angle (rad)");
  noise->add_option("--port", noise_port)->check(CLI::IsMember({1, 2}));
  noise->add_flag("--optimal-readout", optimal, "Filter the speed port with the position-port cosine quadrature");
  auto* membrane = app.add_subcommand("membrane", "Multi-mode membrane force transfer");
  auto* compare = app.add_subcommand("compare", "S/S_SQL of reference meters and HRC ports");
  auto* fitcmd = app.add_subcommand("fit", "Fit sweep data");
  std::string kind;
  std::vector<std::string> inputs;
  std::string out;
  fitcmd->add_option("--kind", kind)->required()->check(CLI::IsMember({"transmission", "tf", "ringdown"}));
  fitcmd->add_option("--in", inputs, "Input CSV (tf: position file, then speed file)")->required();
  fitcmd->add_option("--out", out, "Output JSON");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kValidation;
  }

  try {
    Context ctx;
    ctx.cfg = g.config_path.empty() ? cli::default_config() : cli::load_config(g.config_path);
    ctx.out_dir = g.out_dir.empty() ? fs::path(ctx.cfg.output_dir) : fs::path(g.out_dir);
    ctx.seed = g.seed;
    if (*resonance) return run_resonance(ctx);
    if (*tf) return run_tf(ctx, tf_port);
    if (*noise) return run_noise(ctx, zeta, noise_port, optimal);
    if (*membrane) return run_membrane(ctx);
    if (*compare) return run_compare(ctx);
    if (*fitcmd) return run_fit(ctx, kind, inputs, out);
  } catch (const ArgumentError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kValidation;
  } catch (const NumericalError& e) {
    std::cerr << "numerical failure: " << e.what() << "\n";
    return kNumerical;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kNumerical;
  }
  return kValidation;
}
