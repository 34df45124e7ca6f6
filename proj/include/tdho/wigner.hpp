#pragma once

// Two-mode Gaussian Wigner function of the vacuum,
//
//   W(x1,x2,p1,p2) = pi^-2 exp(-eta1 x1^2 - eta2 x2^2 - beta1 p1^2 - beta2 p2^2
//                              + 2 eta12 x1 x2 + 2 beta12 p1 p2
//                              + 2 delta1 x1 p2 + 2 delta2 x2 p1
//                              + 2 gamma1 x1 p1 + 2 gamma2 x2 p2),
//
// with the transform W = pi^-2 int dq psi*(x+q) psi(x-q) exp(-2i p.q). Note
// that this phase convention mirrors p relative to the usual definition, so
// x-p correlations carry the opposite sign of <{x, p}>/2 for the state.

#include <array>
#include <optional>

#include <Eigen/Dense>

#include "tdho/ermakov.hpp"
#include "tdho/vacuum.hpp"

namespace tdho {

struct WignerCoefficients {
  double eta1 = 1.0;
  double eta2 = 1.0;
  double eta12 = 0.0;
  double beta1 = 1.0;
  double beta2 = 1.0;
  double beta12 = 0.0;
  double delta1 = 0.0;
  double delta2 = 0.0;
  double gamma1 = 0.0;
  double gamma2 = 0.0;
};

/// Single-mode marginal  W(x, p) = sqrt(det)/pi exp(-Delta1 x^2 - Delta2 p^2 + 2 Delta12 x p),
/// det = Delta1 Delta2 - Delta12^2. norm_det is the traced mode's
/// beta*eta - gamma^2 factor, 1/det at the vacuum.
struct MarginalWigner {
  double Delta1 = 1.0;
  double Delta2 = 1.0;
  double Delta12 = 0.0;
  double norm_det = 1.0;

  double det() const { return Delta1 * Delta2 - Delta12 * Delta12; }
};

/// Second moments of a marginal, all means vanish. xp is the symmetric
/// cross moment in the Wigner convention above.
struct SecondMoments {
  double x2 = 0.5;
  double p2 = 0.5;
  double xp = 0.0;
};

struct UncertaintyReport {
  std::optional<double> dx;  // only known when built from moments
  std::optional<double> dp;
  double product = 0.5;
  double U = 1.0;  // (2 dx dp)^2
  double lower_bound = 0.5;
};

enum class Mode { first, second };

WignerCoefficients wigner_coefficients(double phi, const ModeScale& scale1, const ModeScale& scale2,
                                       const VacuumCoefficients& vc);

/// M such that W = exp(-z^T M z) / pi^2 for z = (x1, p1, x2, p2).
Eigen::Matrix4d wigner_quadratic_form(const WignerCoefficients& wc);

/// Closed-form value of the two-mode Wigner function at z = (x1, p1, x2, p2).
double wigner_value(const WignerCoefficients& wc, const std::array<double, 4>& z);

/// Marginal of one oscillator after integrating the other out.
MarginalWigner marginal_wigner(const WignerCoefficients& wc, Mode keep = Mode::first);

/// <x^2> = Delta2 / (2 det), <p^2> = Delta1 / (2 det), xp = Delta12 / (2 det).
SecondMoments moments(const MarginalWigner& mw);

/// Dx Dp = sqrt(1/(1 - S_L)^2 + gamma_i^2) / 2, bound sqrt(1 + gamma_i^2) / 2.
/// Throws DomainError for S_L outside [0, 1).
UncertaintyReport uncertainty_product(double S_L, double gamma_i);

/// Same as above but also reports dx, dp from the marginal moments.
UncertaintyReport uncertainty_product(double S_L, double gamma_i, const SecondMoments& m);

}  // namespace tdho
