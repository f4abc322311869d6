#pragma once
// Experiment configuration shared by the CLI and tests. A parsed
// configuration round-trips through JSON serialization unchanged.

#include <optional>
#include <string>
#include <vector>

#include "acor/core.hpp"

namespace acor {

struct ExperimentConfig {
  std::string subcommand;

  // Domain parameters.
  std::string domain = "integers";
  u64 x = 1;
  u64 y = 0;
  u64 q = 0;
  u64 r = 0;

  // Function / shift / weight selections.
  std::string fn;
  std::vector<i64> shifts;
  std::string terms;  // correlate factor list, e.g. "mu@0,mu@1"
  std::string weight = "unit";
  std::string name;   // constants selection
  std::string which;  // audit selection
  i64 param = 1;      // audit shift/offset
  double hypothesis_b = 0.0;

  // Cutoffs and table window.
  u64 cutoff = 0;
  u64 lo = 1;
  u64 hi = 1;
  i64 mod_q = 1;  // constants: modulus for correlation constants

  // Output and execution.
  std::string format = "json";  // "json" or "csv"
  int threads = 1;
  u64 segment = u64{1} << 22;
  std::optional<std::string> cache_dir;

  friend bool operator==(const ExperimentConfig&,
                         const ExperimentConfig&) = default;
};

std::string to_json_string(const ExperimentConfig& c);
ExperimentConfig config_from_json(const std::string& text);

}  // namespace acor
