#include "tdho/params.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "tdho/error.hpp"

namespace tdho {

void validate(const SystemParams& p) {
  if (!(p.omega1 > 0.0) || !(p.omega2 > 0.0)) {
    throw DomainError("oscillator frequencies must be positive (omega1=" +
                      std::to_string(p.omega1) + ", omega2=" + std::to_string(p.omega2) + ")");
  }
  if (!(p.J >= 0.0)) throw DomainError("coupling J must be non-negative");
  if (!(p.omega_c >= 0.0)) throw DomainError("cyclotron frequency must be non-negative");
}

QuenchSpec::QuenchSpec(SystemParams initial, SystemParams final)
    : initial_(initial), final_(final) {
  validate(initial_);
  validate(final_);
  if (initial_.omega_c != final_.omega_c) {
    throw DomainError("omega_c must be identical before and after the quench (static field)");
  }
}

double mixing_angle(double omega1_sq, double omega2_sq, double J) {
  if (J == 0.0) return 0.0;
  const double diff = omega1_sq - omega2_sq;
  if (diff == 0.0) return std::numbers::pi / 4.0;
  return 0.5 * std::atan(2.0 * J / diff);
}

NormalModes normal_modes(const SystemParams& p) {
  const double w1sq = p.omega1 * p.omega1;
  const double w2sq = p.omega2 * p.omega2;
  const double diff = w1sq - w2sq;
  const double mean = 0.5 * (w1sq + w2sq);
  const double half_split = 0.5 * std::sqrt(4.0 * p.J * p.J + diff * diff);

  NormalModes m;
  m.kappa_tilde = diff < 0.0 ? -1 : 1;
  m.sigma1_sq = mean + m.kappa_tilde * half_split;
  m.sigma2_sq = mean - m.kappa_tilde * half_split;
  m.phi = mixing_angle(w1sq, w2sq, p.J);
  return m;
}

RotatedPotential rotated_potential(const SystemParams& p, double phi) {
  const double w1sq = p.omega1 * p.omega1;
  const double w2sq = p.omega2 * p.omega2;
  const double c = std::cos(phi);
  const double s = std::sin(phi);
  const double s2 = std::sin(2.0 * phi);
  return {
      w1sq * c * c + w2sq * s * s + p.J * s2,
      w1sq * s * s + w2sq * c * c - p.J * s2,
      0.5 * (w1sq - w2sq) * s2 - p.J * std::cos(2.0 * phi),
  };
}

SystemParams params_at(const QuenchSpec& spec, double t) {
  if (t < 0.0) throw DomainError("quench timeline starts at t = 0");
  return t == 0.0 ? spec.initial() : spec.final();
}

}  // namespace tdho
