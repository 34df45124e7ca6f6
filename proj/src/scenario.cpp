#include "tdho/scenario.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "tdho/error.hpp"
#include "tdho/observables.hpp"
#include "tdho/parallel.hpp"
#include "tdho/symplectic.hpp"
#include "tdho/vacuum.hpp"
#include "tdho/wigner.hpp"

namespace tdho {

void ScenarioConfig::validate() const {
  if (!(t_max > 0.0)) throw ConfigError("t_max must be positive");
  if (n_samples < 2) throw ConfigError("n_samples must be at least 2");
  for (const auto& name : outputs) {
    if (std::find(std::begin(kKnownOutputs), std::end(kKnownOutputs), name) == std::end(kKnownOutputs)) {
      throw ConfigError("unknown output '" + name + "'");
    }
  }
}

double ScenarioConfig::sample_time(std::size_t k) const {
  return t_max * static_cast<double>(k) / static_cast<double>(n_samples - 1);
}

namespace {

// Clamp a value into the exported range; returns true if it had to be capped.
bool cap(double& v) {
  if (std::isfinite(v) && v <= kDivergenceCap) return false;
  v = kDivergenceCap;
  return true;
}

}  // namespace

DynamicsRecord make_record(const QuenchSpec& quench, double t) {
  const Snapshot s = evaluate_snapshot(quench, t);

  DynamicsRecord r;
  r.t = t;
  r.S_L = s.S_L;
  r.gamma = s.kernel.gamma;
  r.gamma1 = s.wigner.gamma1;
  r.gamma2 = s.wigner.gamma2;
  r.h1 = s.h1.h;
  r.h2 = s.h2.h;
  r.S_von = von_neumann(std::clamp(r.gamma, 0.0, 1.0));
  r.alpha = std::sqrt(standard_form_alpha_sq(s.phi, s.scale1, s.scale2));
  if (r.S_L < 1.0) {
    r.negativity = log_negativity_from_SL(r.S_L);
    r.U1 = uncertainty_product(r.S_L, r.gamma1).U;
    r.U2 = uncertainty_product(r.S_L, r.gamma2).U;
  } else {
    r.negativity = r.U1 = r.U2 = kDivergenceCap;
    r.diverged = true;
  }

  for (double* v : {&r.S_von, &r.negativity, &r.U1, &r.U2, &r.alpha, &r.h1, &r.h2}) {
    if (cap(*v)) r.diverged = true;
  }
  for (double* v : {&r.gamma1, &r.gamma2}) {
    if (!std::isfinite(*v) || std::abs(*v) > kDivergenceCap) {
      *v = std::copysign(kDivergenceCap, std::isnan(*v) ? 1.0 : *v);
      r.diverged = true;
    }
  }
  if (!std::isfinite(r.S_L) || !std::isfinite(r.gamma)) {
    throw NumericError("non-finite linear entropy at t = " + std::to_string(t));
  }
  return r;
}

std::vector<DynamicsRecord> run_evolve(const ScenarioConfig& config, unsigned workers) {
  config.validate();
  // Fail fast on an invalid quench before spinning up workers.
  (void)make_record(config.quench, 0.0);

  std::vector<DynamicsRecord> out(config.n_samples);
  parallel_for(config.n_samples, workers,
               [&](std::size_t k) { out[k] = make_record(config.quench, config.sample_time(k)); });
  return out;
}

std::string_view axis_name(SweepAxis axis) {
  switch (axis) {
    case SweepAxis::omega_c: return "omega_c";
    case SweepAxis::J_f: return "J_f";
    case SweepAxis::omega_f2: return "omega_f2";
  }
  return "?";
}

SweepAxis parse_axis(std::string_view name) {
  for (auto a : {SweepAxis::omega_c, SweepAxis::J_f, SweepAxis::omega_f2}) {
    if (axis_name(a) == name) return a;
  }
  throw ConfigError("unknown sweep axis '" + std::string(name) + "' (expected omega_c, J_f or omega_f2)");
}

ScenarioConfig with_axis_value(const ScenarioConfig& base, SweepAxis axis, double value) {
  SystemParams initial = base.quench.initial();
  SystemParams final = base.quench.final();
  switch (axis) {
    case SweepAxis::omega_c: initial.omega_c = final.omega_c = value; break;
    case SweepAxis::J_f: final.J = value; break;
    case SweepAxis::omega_f2: final.omega2 = value; break;
  }
  ScenarioConfig out = base;
  out.quench = QuenchSpec(initial, final);
  return out;
}

std::vector<SweepEntry> run_sweep(const ScenarioConfig& base, SweepAxis axis, std::span<const double> values,
                                  unsigned workers) {
  std::vector<SweepEntry> out(values.size());
  parallel_for(values.size(), workers, [&](std::size_t i) {
    out[i].value = values[i];
    try {
      out[i].records = run_evolve(with_axis_value(base, axis, values[i]), 1);
    } catch (const NumericError& e) {
      out[i].error = e.what();
    } catch (const std::exception& e) {
      out[i].error = e.what();
      out[i].invalid_input = true;
    }
  });
  return out;
}

namespace {

ScenarioConfig preset_config(SystemParams initial, SystemParams final) {
  ScenarioConfig c;
  c.quench = QuenchSpec(initial, final);
  c.t_max = 30.0;
  c.n_samples = 3001;
  return c;
}

}  // namespace

std::vector<FigurePreset> figure_presets() {
  const SystemParams initial{1.0, 1.5, 1.1, 0.0};
  const auto with_wc = [](SystemParams p, double wc) {
    p.omega_c = wc;
    return p;
  };
  const SystemParams final_a{1.3, 1.8, 0.9, 0.0};  // figures 1, 2, 4, 5, 7, 8
  const SystemParams final_b{0.4, 3.0, 0.9, 0.0};  // figures 3, 6
  const SystemParams final_c{1.3, 3.0, 0.9, 0.0};  // figure 9

  const auto field = preset_config(initial, final_a);
  const auto coupling = preset_config(with_wc(initial, 0.2), with_wc(final_a, 0.2));
  const auto soft = preset_config(with_wc(initial, 0.1), with_wc(final_b, 0.1));
  const auto stiff = preset_config(with_wc(initial, 0.1), with_wc(final_c, 0.1));

  const std::vector<std::string> mixedness{"S_L"};
  const std::vector<std::string> uncertainty{"U1"};
  const std::vector<std::string> entanglement{"S_von", "negativity"};

  return {
      {1, "Magnetic field effect on mixedness", mixedness, field, SweepAxis::omega_c, {0.0, 0.3, 0.8, 1.5}},
      {2, "Quenched coupling effect on mixedness", mixedness, coupling, SweepAxis::J_f,
       {0.5, 0.9, 1.2, 2.3, 2.4}},
      {3, "Quenched frequency effect on mixedness", mixedness, soft, SweepAxis::omega_f2, {3.0, 2.5, 2.0, 0.5}},
      {4, "Magnetic field effect on uncertainty", uncertainty, field, SweepAxis::omega_c, {0.0, 0.3, 0.8, 1.5}},
      {5, "Quenched coupling effect on uncertainty", uncertainty, coupling, SweepAxis::J_f,
       {0.5, 0.9, 1.2, 2.3, 2.33}},
      {6, "Quenched frequency effect on uncertainty", uncertainty, soft, SweepAxis::omega_f2,
       {4.0, 3.0, 2.5, 2.3}},
      {7, "Magnetic field effect on entanglement", entanglement, field, SweepAxis::omega_c,
       {0.0, 0.3, 0.8, 1.5, 3.0}},
      {8, "Quenched coupling effect on entanglement", entanglement, coupling, SweepAxis::J_f,
       {0.5, 0.9, 1.2, 2.3, 2.33}},
      {9, "Quenched frequency effect on entanglement", entanglement, stiff, SweepAxis::omega_f2,
       {3.0, 2.5, 2.3, 2.2}},
  };
}

const FigurePreset& figure_preset(int number) {
  static const std::vector<FigurePreset> presets = figure_presets();
  for (const auto& p : presets) {
    if (p.number == number) return p;
  }
  throw ConfigError("no figure preset " + std::to_string(number));
}

}  // namespace tdho
