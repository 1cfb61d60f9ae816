#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hllab/spaces.hpp"

namespace hllab {

/// Effective run parameters: defaults, overlaid by a key=value config file,
/// overlaid by command-line flags. Every report echoes these back.
struct RunConfig {
  std::uint64_t seed = 2024;
  Resolution res;
  std::vector<std::size_t> degrees = {64, 128, 256, 512};
  std::string out_format = "json";  // json | csv

  std::map<std::string, std::string> echo() const;
};

/// Flat key=value file, '#' starts a comment. Unknown keys are an error so
/// typos surface instead of silently keeping defaults.
void apply_config_file(RunConfig& cfg, const std::string& path);

void apply_config_line(RunConfig& cfg, const std::string& key, const std::string& value);

/// Write-temp-then-rename so readers never observe partial files.
void atomic_write(const std::string& path, const std::string& content);

/// "64,128,256" -> {64,128,256}; rejects empty/non-numeric items.
std::vector<std::size_t> parse_degree_list(const std::string& text);

}  // namespace hllab
