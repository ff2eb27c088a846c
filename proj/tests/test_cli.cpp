// Drives the hrc binary end to end: exit codes, CSV/JSON outputs, determinism.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <sys/wait.h>

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "json.hpp"

namespace fs = std::filesystem;

namespace {

const fs::path kTool = HRC_CLI_PATH;
const fs::path kSource = HRC_SOURCE_DIR;

struct Run {
  int code = -1;
  std::string out;
};

Run run(const std::string& args) {
  const auto log = fs::temp_directory_path() / "hrc_cli_stdout.txt";
  const std::string cmd = kTool.string() + " " + args + " > " + log.string() + " 2>/dev/null";
  const int status = std::system(cmd.c_str());
  std::ifstream in(log);
  std::stringstream s;
  s << in.rdbuf();
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, s.str()};
}

fs::path fresh_dir(const std::string& name) {
  const auto dir = fs::temp_directory_path() / ("hrc_cli_" + name);
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

struct Csv {
  std::vector<std::string> comments;
  std::vector<std::string> header;
  std::vector<std::vector<double>> rows;
};

std::vector<std::string> split(const std::string& line) {
  std::vector<std::string> out;
  std::stringstream s(line);
  std::string cell;
  while (std::getline(s, cell, ',')) out.push_back(cell);
  return out;
}

Csv read_csv(const fs::path& p) {
  Csv csv;
  std::ifstream in(p);
  std::string line;
  while (std::getline(in, line)) {
    if (line.rfind("#", 0) == 0) {
      csv.comments.push_back(line);
    } else if (csv.header.empty()) {
      csv.header = split(line);
    } else {
      std::vector<double> row;
      for (const auto& cell : split(line)) row.push_back(std::stod(cell));
      csv.rows.push_back(row);
    }
  }
  return csv;
}

std::string config(const std::string& name) { return "--config " + (kSource / "configs" / name).string(); }

}  // namespace

TEST_CASE("resonance") {
  const auto dir = fresh_dir("resonance");
  const auto r = run("resonance " + config("paper.cfg") + " --out-dir " + dir.string());
  CHECK(r.code == 0);
  CHECK(r.out.find("splitting 52.75") != std::string::npos);
  const auto csv = read_csv(dir / "resonance.csv");
  CHECK(csv.header == std::vector<std::string>{"phase_rad", "intensity_norm"});
  CHECK(csv.comments.size() >= 3);
  CHECK(csv.comments[0].rfind("# hrc ", 0) == 0);
  CHECK(csv.comments[1].rfind("# config_fnv1a64 ", 0) == 0);
}

TEST_CASE("tf") {
  const auto dir = fresh_dir("tf");
  CHECK(run("tf --port both " + config("paper.cfg") + " --out-dir " + dir.string()).code == 0);
  const auto csv = read_csv(dir / "tf.csv");
  REQUIRE(csv.header.size() == 13);
  CHECK(csv.header.front() == "omega_hz");
  CHECK(csv.header.back() == "arg_b23");
  CHECK(csv.rows.size() == 2000);
  CHECK(run("tf --port 1 --out-dir " + dir.string()).code == 0);
  CHECK(read_csv(dir / "tf.csv").header.size() == 7);
  CHECK(run("tf --port 3").code == 2);
}

TEST_CASE("noise") {
  const auto dir = fresh_dir("noise");
  const auto r = run("noise --zeta 1.5707963267948966 --port 2 --optimal-readout " + config("km_scale.cfg") +
                     " --out-dir " + dir.string());
  CHECK(r.code == 0);
  CHECK(r.out.find("min S/S_SQL") != std::string::npos);
  const auto csv = read_csv(dir / "noise.csv");
  CHECK(csv.header == std::vector<std::string>{"omega_hz", "s_shot_1", "s_shot_2", "s_rp_x", "s_rp_v", "s_total_1",
                                               "s_total_2", "s_sql"});
  for (const auto& row : csv.rows) {
    for (double v : row) CHECK(v >= 0.0);
  }
}

TEST_CASE("compare: reference position meter touches the SQL") {
  const auto dir = fresh_dir("compare");
  CHECK(run("compare " + config("paper.cfg") + " --out-dir " + dir.string()).code == 0);
  const auto csv = read_csv(dir / "compare.csv");
  REQUIRE(csv.header.size() == 6);
  CHECK(csv.header[2] == "free_position");
  double best = 1e300;
  for (const auto& row : csv.rows) best = std::min(best, row[2]);
  CHECK(best == doctest::Approx(1.0).epsilon(1e-3));
}

TEST_CASE("membrane") {
  const auto dir = fresh_dir("membrane");
  const auto r = run("membrane " + config("paper.cfg") + " --out-dir " + dir.string());
  CHECK(r.code == 0);
  CHECK(r.out.find("395.2") != std::string::npos);
  CHECK(read_csv(dir / "membrane.csv").header ==
        std::vector<std::string>{"omega_hz", "abs_tf_port1", "abs_tf_port2", "ratio_db"});
}

TEST_CASE("fit on the shipped synthetic data") {
  const auto dir = fresh_dir("fit");
  const auto data = kSource / "data";
  const auto out = dir / "transmission.json";
  CHECK(run("fit --kind transmission --in " + (data / "transmission.csv").string() + " --out " + out.string() + " " +
            config("paper.cfg"))
            .code == 0);
  const auto j = nlohmann::json::parse(slurp(out));
  CHECK(j["params"]["linewidth_1_hz"]["value"].get<double>() == doctest::Approx(0.84e6).epsilon(0.02));
  CHECK(j["converged"] == true);

  CHECK(run("fit --kind tf --in " + (data / "tf_position.csv").string() + " --in " + (data / "tf_speed.csv").string() +
            " --out " + (dir / "tf.json").string())
            .code == 0);
  const auto tf = nlohmann::json::parse(slurp(dir / "tf.json"));
  CHECK(tf["params"]["linewidth_hz"]["value"].get<double>() == doctest::Approx(0.9e6).epsilon(0.05));

  CHECK(run("fit --kind ringdown --in " + (data / "ringdown.csv").string() + " --out " + (dir / "rd.json").string() +
            " " + config("paper.cfg"))
            .code == 0);
  const auto rd = nlohmann::json::parse(slurp(dir / "rd.json"));
  CHECK(rd["params"]["quality_factor"]["value"].get<double>() == doctest::Approx(4.6e5).epsilon(0.02));
}

TEST_CASE("exit codes") {
  const auto dir = fresh_dir("errors");
  CHECK(run("").code == 2);
  CHECK(run("bogus").code == 2);
  CHECK(run("resonance --config " + (dir / "missing.cfg").string()).code == 2);
  {
    std::ofstream(dir / "empty.cfg");
  }
  CHECK(run("resonance --config " + (dir / "empty.cfg").string()).code == 2);
  {
    std::ofstream(dir / "grid.cfg") << "[grid]\nf_min_hz = 5\nf_max_hz = 5\n";
  }
  CHECK(run("resonance --config " + (dir / "grid.cfg").string()).code == 2);
  // A single resonance cannot be fitted by the two-peak model: numerical failure.
  {
    std::ofstream out(dir / "single.csv");
    out << "frequency_hz,value\n";
    for (int i = 0; i < 201; ++i) {
      const double f = -10e6 + 1e5 * i;
      out << f << "," << 1.0 / (1.0 + f * f / 0.7e12) << "\n";
    }
  }
  CHECK(run("fit --kind transmission --in " + (dir / "single.csv").string() + " --out " + (dir / "x.json").string())
            .code == 3);
  CHECK(run("fit --kind tf --in " + (dir / "single.csv").string() + " --out " + (dir / "x.json").string()).code == 2);
}

TEST_CASE("identical config and seed give byte-identical outputs") {
  const auto a = fresh_dir("det_a");
  const auto b = fresh_dir("det_b");
  for (const auto& d : {a, b}) {
    REQUIRE(run("compare " + config("paper.cfg") + " --seed 5 --out-dir " + d.string()).code == 0);
    REQUIRE(run("tf " + config("paper.cfg") + " --seed 5 --out-dir " + d.string()).code == 0);
  }
  CHECK(slurp(a / "compare.csv") == slurp(b / "compare.csv"));
  CHECK(slurp(a / "tf.csv") == slurp(b / "tf.csv"));
}
