#pragma once

// One time sample of a quench: the full chain from parameters to every
// entanglement, mixedness and uncertainty measure.

#include "tdho/ermakov.hpp"
#include "tdho/params.hpp"
#include "tdho/vacuum.hpp"
#include "tdho/wigner.hpp"

namespace tdho {

/// Initial and final normal modes of a quench, plus omega_c.
struct QuenchModes {
  NormalModes initial;
  NormalModes final;
  double omega_c = 0.0;

  explicit QuenchModes(const QuenchSpec& spec);

  /// sigma^2(t > 0, B) of a mode, the right-continuous frequency profile fed
  /// to the Ermakov integrator.
  double final_sq(Mode m) const;
  /// sigma^2(0, B).
  double initial_sq(Mode m) const;
  /// True when the final mode has sigma_f^2 + omega_c^2 < 0.
  bool hyperbolic(Mode m) const { return final_sq(m) < 0.0; }
};

struct Snapshot {
  double t = 0.0;
  double phi = 0.0;
  ErmakovState h1, h2;
  ModeScale scale1, scale2;
  VacuumCoefficients vacuum;
  ReducedKernel kernel;
  WignerCoefficients wigner;
  double purity = 1.0;
  double S_L = 0.0;
};

/// params_at -> normal_modes -> quench_h per mode -> vacuum -> kernel -> Wigner.
/// The mixing angle is the one of the parameters in force at t.
Snapshot evaluate_snapshot(const QuenchSpec& spec, double t);

}  // namespace tdho
