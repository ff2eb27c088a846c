#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "hrc/errors.hpp"
#include "hrc/table_io.hpp"
#include "json.hpp"

using namespace hrc;
namespace fs = std::filesystem;

namespace {

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

fs::path scratch(const std::string& name) { return fs::temp_directory_path() / ("hrc_test_" + name); }

}  // namespace

TEST_CASE("FNV-1a reference vectors") {
  CHECK(cli::fnv1a64("") == 0xcbf29ce484222325ULL);
  CHECK(cli::fnv1a64("a") == 0xaf63dc4c8601ec8cULL);
  CHECK(cli::fnv1a64("foobar") == 0x85944171f73967e8ULL);
}

TEST_CASE("number formatting round-trips") {
  CHECK(cli::format_number(0.1) == "0.1");
  CHECK(cli::format_number(1e-300) == "1e-300");
  CHECK(cli::format_number(std::numeric_limits<double>::infinity()) == "inf");
  const double v = 0.1 + 0.2;
  CHECK(std::stod(cli::format_number(v)) == v);
}

TEST_CASE("csv rendering and provenance") {
  cli::CsvTable t{{"a", "b"}, {{1.0, 2.5}, {3.0, 0.25}}};
  const auto comments = cli::provenance_comments("[x]\n", 7, {"extra line"});
  const auto text = t.render(comments);
  CHECK(text.rfind("# hrc ", 0) == 0);
  CHECK(text.find("# seed 7\n") != std::string::npos);
  CHECK(text.find("# extra line\n") != std::string::npos);
  CHECK(text.find("a,b\n1,2.5\n3,0.25\n") != std::string::npos);
  std::ostringstream hash;
  hash << std::hex << cli::fnv1a64("[x]\n");
  CHECK(text.find(hash.str()) != std::string::npos);
}

TEST_CASE("atomic write and sweep read-back") {
  const auto path = scratch("sweep.csv");
  std::string body = "# comment\nfrequency_hz,value\n";
  for (int i = 1; i <= 10; ++i) body += std::to_string(i) + "," + std::to_string(i * i) + "\n";
  cli::write_atomic(path, body);
  CHECK(slurp(path) == body);
  CHECK_FALSE(fs::exists(path.string() + ".tmp"));
  const auto data = cli::read_sweep_csv(path, fit::SweepKind::tf_speed);
  CHECK(data.kind == fit::SweepKind::tf_speed);
  CHECK(data.x.size() == 10);
  CHECK(data.y.back() == 100.0);

  cli::write_atomic(path, "time_s,amplitude_db\n" + std::string("0,0\n1,-1\n2,-2\n3,-3\n4,-4\n5,-5\n6,-6\n7,-7\n"));
  CHECK(cli::read_sweep_csv(path, fit::SweepKind::transmission).kind == fit::SweepKind::ringdown);

  cli::write_atomic(path, "freq,value\n1,2\n");
  CHECK_THROWS_AS(cli::read_sweep_csv(path, fit::SweepKind::transmission), ArgumentError);
  cli::write_atomic(path, "frequency_hz,value\n1,2x\n");
  CHECK_THROWS_AS(cli::read_sweep_csv(path, fit::SweepKind::transmission), ArgumentError);
  fs::remove(path);
  CHECK_THROWS_AS(cli::read_sweep_csv(path, fit::SweepKind::transmission), ArgumentError);
}

TEST_CASE("fit JSON") {
  fit::FitResult r;
  r.params = {{"gamma", 1.5, 0.1, false}, {"q", 2.0, 0.0, true}};
  r.residual_norm = 0.01;
  r.iterations = 12;
  r.converged = true;
  const auto j = nlohmann::json::parse(cli::fit_to_json(r));
  CHECK(j["params"]["gamma"]["value"] == 1.5);
  CHECK(j["params"]["gamma"]["sigma"] == 0.1);
  CHECK(j["iterations"] == 12);
  CHECK(j["converged"] == true);
}
