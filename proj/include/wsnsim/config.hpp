#ifndef WSNSIM_CONFIG_HPP
#define WSNSIM_CONFIG_HPP

#include <cstdint>
#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "wsnsim/simulation.hpp"

namespace wsnsim {

class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct ExperimentConfig {
  SimulationSetup setup;
  std::vector<std::uint64_t> seeds;
  std::string output_dir = "results";

  /// Validates every parameter block; throws ConfigError naming the field.
  void validate() const;
};

/**
 * Parses the line-oriented `key = value` format. Blank lines and lines
 * starting with '#' are ignored. Unknown keys, duplicate keys and malformed
 * values are reported with their line number. Missing keys take defaults;
 * base station position, gamma, alpha and leach_p default relative to the
 * side length and cluster fraction given in the same file.
 */
ExperimentConfig parse_config(std::string_view text);

ExperimentConfig load_config(const std::filesystem::path& path);

/// Fully resolved config in the same format; parse_config(dump_config(c))
/// reproduces c exactly.
std::string dump_config(const ExperimentConfig& config);

/// "1-20", "1,4,9" or a mix such as "1-3,7".
std::vector<std::uint64_t> parse_seed_list(std::string_view text);

}  // namespace wsnsim

#endif  // WSNSIM_CONFIG_HPP
