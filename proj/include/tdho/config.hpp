#pragma once

// TOML scenario files.
//
//   omega_c = 0.2
//   t_max = 30.0
//   n_samples = 3001
//   outputs = ["S_L", "S_von"]
//   entropy_units = "nats"      # or "bits"
//
//   [quench.initial]
//   omega1 = 1.0
//   omega2 = 1.5
//   J = 1.1
//
//   [quench.final]
//   omega1 = 1.3
//   omega2 = 1.8
//   J = 0.9
//
// Everything but the quench tables is optional.

#include <filesystem>
#include <string_view>

#include "tdho/scenario.hpp"

namespace tdho {

/// Throws ConfigError on syntax errors, missing or mistyped keys, unknown
/// keys and physically invalid values.
ScenarioConfig parse_config(std::string_view text, std::string_view source = "<string>");
ScenarioConfig load_config(const std::filesystem::path& path);

}  // namespace tdho
