#include "tdho/observables.hpp"

namespace tdho {

QuenchModes::QuenchModes(const QuenchSpec& spec)
    : initial(normal_modes(spec.initial())), final(normal_modes(spec.final())), omega_c(spec.omega_c()) {}

double QuenchModes::final_sq(Mode m) const {
  return (m == Mode::first ? final.sigma1_sq : final.sigma2_sq) + omega_c * omega_c;
}

double QuenchModes::initial_sq(Mode m) const {
  return (m == Mode::first ? initial.sigma1_sq : initial.sigma2_sq) + omega_c * omega_c;
}

Snapshot evaluate_snapshot(const QuenchSpec& spec, double t) {
  const QuenchModes modes(spec);
  Snapshot s;
  s.t = t;
  s.phi = normal_modes(params_at(spec, t)).phi;
  s.h1 = quench_h(modes.initial.sigma1_sq, modes.final.sigma1_sq, modes.omega_c, t);
  s.h2 = quench_h(modes.initial.sigma2_sq, modes.final.sigma2_sq, modes.omega_c, t);
  s.scale1 = mode_scale(s.h1);
  s.scale2 = mode_scale(s.h2);
  s.vacuum = vacuum_coefficients(s.phi, s.scale1, s.scale2);
  s.kernel = reduced_kernel(s.vacuum);
  s.wigner = wigner_coefficients(s.phi, s.scale1, s.scale2, s.vacuum);
  s.purity = marginal_purity(s.vacuum);
  s.S_L = 1.0 - s.purity;
  return s;
}

}  // namespace tdho
