// tdho: entanglement and uncertainty dynamics of quenched coupled oscillators
// in a magnetic field.
//
//   tdho evolve  --config run.toml --out dir [--svg] [--bits] [--jobs N]
//   tdho sweep   --config run.toml --axis J_f --values 0.5,0.9 --out dir
//   tdho figures --which all --out dir
//   tdho validate [--json]
//
// Exit codes: 0 ok, 1 bad config or parameters, 2 numeric failure,
// 3 validation failure.

#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "tdho/config.hpp"
#include "tdho/error.hpp"
#include "tdho/output.hpp"
#include "tdho/scenario.hpp"
#include "tdho/validation.hpp"

namespace fs = std::filesystem;
using namespace tdho;

namespace {

enum Exit { kOk = 0, kConfig = 1, kNumeric = 2, kValidation = 3 };

std::vector<double> parse_values(const std::string& list) {
  std::vector<double> out;
  std::stringstream ss(list);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    while (used < item.size() && std::isspace(static_cast<unsigned char>(item[used]))) ++used;
    if (used == 0 || used != item.size()) throw ConfigError("bad sweep value '" + item + "'");
    out.push_back(v);
  }
  if (out.empty()) throw ConfigError("no sweep values given");
  return out;
}

void write_run(const fs::path& dir, const std::string& stem, const std::vector<DynamicsRecord>& records,
               const ScenarioConfig& cfg) {
  write_file(dir / (stem + ".csv"), format_csv(records, cfg.entropy_units));
  const std::string aux = format_aux_csv(records, cfg.outputs);
  if (!aux.empty()) write_file(dir / (stem + "_aux.csv"), aux);
}

void write_plots(const fs::path& dir, const std::string& title, const std::vector<std::string>& quantities,
                 const std::vector<Series>& series, EntropyUnits units) {
  for (const auto& q : quantities) write_file(dir / (q + ".svg"), render_svg(title, q, series, units));
}

/// Writes one CSV per successful entry; returns the exit code for the batch.
int emit_sweep(const fs::path& dir, std::string_view axis, const std::vector<SweepEntry>& entries,
               const ScenarioConfig& cfg, const std::string& title, const std::vector<std::string>& plot,
               bool svg) {
  int code = kOk;
  std::vector<Series> series;
  for (const auto& e : entries) {
    const std::string stem = std::string(axis) + "_" + value_tag(e.value);
    if (!e.records) {
      std::cerr << "error: " << axis << " = " << value_tag(e.value) << ": " << e.error << "\n";
      code = std::max(code, e.invalid_input ? int(kConfig) : int(kNumeric));
      continue;
    }
    write_run(dir, stem, *e.records, cfg);
    series.push_back({std::string(axis) + " = " + value_tag(e.value), *e.records});
  }
  if (svg) write_plots(dir, title, plot, series, cfg.entropy_units);
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Entanglement, mixedness and uncertainty dynamics of quenched coupled oscillators"};
  app.require_subcommand(1);

  std::string config_path, out_dir, axis_name_arg, values_arg, which = "all";
  bool svg = false, bits = false, json = false;
  unsigned jobs = 0;

  auto* evolve = app.add_subcommand("evolve", "Time evolution of one quench");
  evolve->add_option("--config", config_path, "TOML scenario file")->required();
  evolve->add_option("--out", out_dir, "Output directory")->required();

  auto* sweep = app.add_subcommand("sweep", "Repeat a scenario over values of one parameter");
  sweep->add_option("--config", config_path, "TOML scenario file")->required();
  sweep->add_option("--axis", axis_name_arg, "omega_c, J_f or omega_f2")->required();
  sweep->add_option("--values", values_arg, "Comma-separated values")->required();
  sweep->add_option("--out", out_dir, "Output directory")->required();

  auto* figures = app.add_subcommand("figures", "Datasets of the preset figures");
  figures->add_option("--which", which, "1..9 or all");
  figures->add_option("--out", out_dir, "Output directory")->required();

  for (auto* sub : {evolve, sweep, figures}) {
    sub->add_flag("--svg", svg, "Also write SVG line plots");
    sub->add_flag("--bits", bits, "Entropies in bits instead of nats");
    sub->add_option("--jobs", jobs, "Worker threads (0 = all cores)");
  }

  auto* validate = app.add_subcommand("validate", "Run the self-check suite");
  validate->add_flag("--json", json, "Machine-readable report");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kConfig;
  }

  try {
    if (*evolve) {
      ScenarioConfig cfg = load_config(config_path);
      if (bits) cfg.entropy_units = EntropyUnits::bits;
      const auto records = run_evolve(cfg, jobs);
      write_run(out_dir, "dynamics", records, cfg);
      if (svg) write_plots(out_dir, "evolve", cfg.outputs, {{"", records}}, cfg.entropy_units);
      return kOk;
    }
    if (*sweep) {
      ScenarioConfig cfg = load_config(config_path);
      if (bits) cfg.entropy_units = EntropyUnits::bits;
      const SweepAxis axis = parse_axis(axis_name_arg);
      const auto values = parse_values(values_arg);
      const auto entries = run_sweep(cfg, axis, values, jobs);
      return emit_sweep(out_dir, axis_name(axis), entries, cfg, "sweep over " + std::string(axis_name(axis)),
                        cfg.outputs, svg);
    }
    if (*figures) {
      std::vector<int> numbers;
      if (which == "all") {
        for (const auto& p : figure_presets()) numbers.push_back(p.number);
      } else {
        for (double v : parse_values(which)) {
          if (v != static_cast<int>(v)) throw ConfigError("--which takes figure numbers or 'all'");
          numbers.push_back(static_cast<int>(v));
        }
      }
      int code = kOk;
      for (int n : numbers) {
        const FigurePreset& p = figure_preset(n);
        ScenarioConfig cfg = p.base;
        if (bits) cfg.entropy_units = EntropyUnits::bits;
        const auto entries = run_sweep(cfg, p.axis, p.values, jobs);
        code = std::max(code, emit_sweep(fs::path(out_dir) / ("fig" + std::to_string(n)), axis_name(p.axis), entries,
                                         cfg, p.title, p.quantities, svg));
      }
      return code;
    }
    if (*validate) {
      const ValidationReport report = run_validate();
      std::cout << (json ? report.to_json() : report.to_text());
      return report.all_passed() ? kOk : kValidation;
    }
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kConfig;
  } catch (const DomainError& e) {
    std::cerr << "invalid parameters: " << e.what() << "\n";
    return kConfig;
  } catch (const NumericError& e) {
    std::cerr << "numeric failure: " << e.what() << "\n";
    return kNumeric;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kNumeric;
  }
  return kOk;
}
