#pragma once

// Scenario runner: time evolution of a quench, parameter sweeps and the
// figure presets.

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "tdho/params.hpp"

namespace tdho {

enum class EntropyUnits { nats, bits };

/// Quantities a scenario can export. The canonical CSV always carries the
/// first seven; gamma1, gamma2, h1, h2 go to the auxiliary table.
inline constexpr std::string_view kKnownOutputs[] = {"S_L", "S_von", "negativity", "U1", "U2",
                                                     "alpha", "gamma", "gamma1", "gamma2", "h1", "h2"};

struct ScenarioConfig {
  QuenchSpec quench = QuenchSpec::constant({});
  double t_max = 30.0;
  std::size_t n_samples = 3001;
  std::vector<std::string> outputs{"S_L", "S_von", "negativity", "U1", "U2", "alpha", "gamma"};
  EntropyUnits entropy_units = EntropyUnits::nats;

  /// Throws ConfigError unless t_max > 0, n_samples >= 2 and every output is known.
  void validate() const;
  /// t_k = t_max * k / (n_samples - 1).
  double sample_time(std::size_t k) const;
};

/// Values above this are clamped and the sample is marked diverged.
inline constexpr double kDivergenceCap = 1e12;

struct DynamicsRecord {
  double t = 0.0;
  double S_L = 0.0;
  double S_von = 0.0;     // nats
  double negativity = 0.0;  // nats
  double U1 = 1.0;
  double U2 = 1.0;
  double alpha = 1.0;
  double gamma = 0.0;  // Schmidt parameter
  bool diverged = false;

  // auxiliary outputs
  double gamma1 = 0.0;
  double gamma2 = 0.0;
  double h1 = 1.0;
  double h2 = 1.0;
};

/// One record at time t of the quench.
DynamicsRecord make_record(const QuenchSpec& quench, double t);

/// Records for every sample time, in time order. Identical for any worker count.
std::vector<DynamicsRecord> run_evolve(const ScenarioConfig& config, unsigned workers = 0);

enum class SweepAxis { omega_c, J_f, omega_f2 };

std::string_view axis_name(SweepAxis axis);
/// Accepts "omega_c", "J_f", "omega_f2". Throws ConfigError otherwise.
SweepAxis parse_axis(std::string_view name);

/// The config with one parameter replaced.
ScenarioConfig with_axis_value(const ScenarioConfig& base, SweepAxis axis, double value);

struct SweepEntry {
  double value = 0.0;
  std::optional<std::vector<DynamicsRecord>> records;
  std::string error;  // set when records is empty
  bool invalid_input = false;  // error came from a rejected parameter, not the numerics
};

/// One run_evolve per value, parallel across values, output in input order.
/// A failing value is reported in its entry and does not stop the others.
std::vector<SweepEntry> run_sweep(const ScenarioConfig& base, SweepAxis axis, std::span<const double> values,
                                  unsigned workers = 0);

struct FigurePreset {
  int number = 1;
  std::string title;
  std::vector<std::string> quantities;  // what the figure plots
  ScenarioConfig base;
  SweepAxis axis = SweepAxis::omega_c;
  std::vector<double> values;
};

/// The nine standard figure datasets: three sweeps (omega_c, J_f, omega_f2)
/// for each of mixedness, uncertainty and entanglement.
std::vector<FigurePreset> figure_presets();
const FigurePreset& figure_preset(int number);

}  // namespace tdho
