#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "hrc/fit.hpp"

namespace hrc::cli {

// FNV-1a, 64 bit. Stable across platforms, used to tag outputs with the config.
std::uint64_t fnv1a64(std::string_view bytes);

// Shortest round-trip decimal representation.
std::string format_number(double v);

struct CsvTable {
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;

  // '#'-prefixed comment lines, header row, then data.
  std::string render(const std::vector<std::string>& comments) const;
};

// Standard comment block: tool version, config hash, seed, and extra lines.
std::vector<std::string> provenance_comments(std::string_view config_text, std::uint64_t seed,
                                             const std::vector<std::string>& extra = {});

// Writes via a temporary file in the same directory and renames it into place.
void write_atomic(const std::filesystem::path& path, std::string_view content);

// Two-column CSV with header frequency_hz,value or time_s,amplitude_db;
// '#' lines are skipped. The header decides ringdown vs frequency data; for
// frequency data the caller supplies the kind.
fit::SweepData read_sweep_csv(const std::filesystem::path& path, fit::SweepKind frequency_kind);

// {"params": {name: {"value", "sigma"}}, "residual_norm", "iterations", "converged"}.
std::string fit_to_json(const fit::FitResult& fit);

}  // namespace hrc::cli
