#include "hrc/table_io.hpp"

#include <charconv>
#include <cstdio>
#include <fstream>
#include "json.hpp"
#include <sstream>
#include <system_error>

#include "hrc/config.hpp"

namespace hrc::cli {

std::uint64_t fnv1a64(std::string_view bytes) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char ch : bytes) {
    h ^= ch;
    h *= 1099511628211ull;
  }
  return h;
}

std::string format_number(double v) {
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

std::string CsvTable::render(const std::vector<std::string>& comments) const {
  std::string out;
  for (const auto& c : comments) out += "# " + c + "\n";
  for (std::size_t i = 0; i < columns.size(); ++i) out += (i ? "," : "") + columns[i];
  out += "\n";
  for (const auto& row : rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) out += ",";
      out += format_number(row[i]);
    }
    out += "\n";
  }
  return out;
}

std::vector<std::string> provenance_comments(std::string_view config_text, std::uint64_t seed,
                                             const std::vector<std::string>& extra) {
  char hash[17];
  std::snprintf(hash, sizeof hash, "%016llx", static_cast<unsigned long long>(fnv1a64(config_text)));
  std::vector<std::string> lines{std::string("hrc ") + HRC_VERSION, std::string("config_fnv1a64 ") + hash,
                                 "seed " + std::to_string(seed)};
  lines.insert(lines.end(), extra.begin(), extra.end());
  return lines;
}

void write_atomic(const std::filesystem::path& path, std::string_view content) {
  namespace fs = std::filesystem;
  if (path.has_parent_path()) fs::create_directories(path.parent_path());
  fs::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write " + tmp.string());
    out.write(content.data(), static_cast<std::streamsize>(content.size()));
    out.flush();
    if (!out) throw std::runtime_error("write failed for " + tmp.string());
  }
  fs::rename(tmp, path);
}

fit::SweepData read_sweep_csv(const std::filesystem::path& path, fit::SweepKind frequency_kind) {
  std::ifstream in(path);
  if (!in) throw ArgumentError("cannot open " + path.string());
  fit::SweepData data;
  std::string line;
  int n = 0;
  bool header_seen = false;
  while (std::getline(in, line)) {
    ++n;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    const std::string where = path.string() + ":" + std::to_string(n);
    if (!header_seen) {
      if (line == "frequency_hz,value") {
        data.kind = frequency_kind;
      } else if (line == "time_s,amplitude_db") {
        data.kind = fit::SweepKind::ringdown;
      } else {
        throw ConfigError(where, "expected header 'frequency_hz,value' or 'time_s,amplitude_db'");
      }
      header_seen = true;
      continue;
    }
    const auto comma = line.find(',');
    if (comma == std::string::npos || line.find(',', comma + 1) != std::string::npos) {
      throw ConfigError(where, "expected two comma-separated values");
    }
    double a = 0.0;
    double b = 0.0;
    const auto ra = std::from_chars(line.data(), line.data() + comma, a);
    const auto rb = std::from_chars(line.data() + comma + 1, line.data() + line.size(), b);
    if (ra.ec != std::errc{} || ra.ptr != line.data() + comma || rb.ec != std::errc{} ||
        rb.ptr != line.data() + line.size()) {
      throw ConfigError(where, "malformed number");
    }
    data.x.push_back(a);
    data.y.push_back(b);
  }
  if (!header_seen) throw ConfigError(path.string(), "no header line");
  data.validate();
  return data;
}

std::string fit_to_json(const fit::FitResult& fit) {
  nlohmann::ordered_json j;
  j["params"] = nlohmann::ordered_json::object();
  for (const auto& p : fit.params) j["params"][p.name] = {{"value", p.value}, {"sigma", p.sigma}};
  j["residual_norm"] = fit.residual_norm;
  j["iterations"] = fit.iterations;
  j["converged"] = fit.converged;
  return j.dump(2) + "\n";
}

}  // namespace hrc::cli
