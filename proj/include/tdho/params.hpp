#pragma once

// Physical parameters of two coupled oscillators in a static magnetic field,
// the piecewise-constant quench timeline and the normal-mode decomposition.
//
// Units: hbar = m = 1. The field enters only through the cyclotron frequency
// omega_c = eB/2c, which is supplied directly.

namespace tdho {

struct SystemParams {
  double omega1 = 1.0;
  double omega2 = 1.0;
  double J = 0.0;        // coupling, frequency-squared units
  double omega_c = 0.0;  // cyclotron frequency
};

/// Throws DomainError unless omega1, omega2 > 0 and J, omega_c >= 0.
void validate(const SystemParams& p);

/// Parameters before (t = 0) and after (t > 0) an instantaneous quench.
/// The magnetic field is static, so omega_c must agree on both sides.
class QuenchSpec {
 public:
  QuenchSpec(SystemParams initial, SystemParams final);

  /// No quench: the same parameters for all t.
  static QuenchSpec constant(SystemParams p) { return {p, p}; }

  const SystemParams& initial() const { return initial_; }
  const SystemParams& final() const { return final_; }
  double omega_c() const { return initial_.omega_c; }

 private:
  SystemParams initial_;
  SystemParams final_;
};

/// Normal-mode frequencies at B = 0. Add omega_c^2 to obtain the
/// magnetically shifted values.
struct NormalModes {
  double sigma1_sq = 0.0;
  double sigma2_sq = 0.0;
  int kappa_tilde = 1;  // sign(omega1^2 - omega2^2), +1 when degenerate
  double phi = 0.0;     // mixing angle, principal branch
};

/// phi = atan(2J / (w1^2 - w2^2)) / 2 on the principal branch of atan, so
/// 2*phi lies in (-pi/2, pi/2]. Degenerate frequencies with J != 0 give pi/4;
/// J == 0 gives 0.
double mixing_angle(double omega1_sq, double omega2_sq, double J);

NormalModes normal_modes(const SystemParams& p);

/// Diagonal and off-diagonal potential coefficients after rotating the
/// coordinates by phi. At the mixing angle, `coupling` vanishes and the
/// diagonal entries are the normal-mode frequencies.
struct RotatedPotential {
  double sigma1_sq = 0.0;
  double sigma2_sq = 0.0;
  double coupling = 0.0;  // sigma_3
};

/// Rotated potential at B = 0 (the shift omega_c^2 is common to both
/// diagonal entries and cancels in the coupling).
RotatedPotential rotated_potential(const SystemParams& p, double phi);

/// initial for t == 0, final for t > 0. Rejects t < 0.
SystemParams params_at(const QuenchSpec& spec, double t);

}  // namespace tdho
