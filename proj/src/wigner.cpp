#include "tdho/wigner.hpp"

#include <cmath>
#include <numbers>

#include "tdho/error.hpp"

namespace tdho {

WignerCoefficients wigner_coefficients(double phi, const ModeScale& scale1, const ModeScale& scale2,
                                       const VacuumCoefficients& vc) {
  const double c2 = std::cos(phi) * std::cos(phi);
  const double s2 = std::sin(phi) * std::sin(phi);
  const double sin2phi = std::sin(2.0 * phi);
  const double st1 = scale1.sigma_tilde;
  const double st2 = scale2.sigma_tilde;
  const double g1 = scale1.hdot_over_h;
  const double g2 = scale2.hdot_over_h;
  const double d = st1 * st2;

  WignerCoefficients w;
  w.eta1 = (d * vc.A1.real() + st2 * g1 * g1 * c2 + st1 * g2 * g2 * s2) / d;
  w.eta2 = (d * vc.A2.real() + st1 * g2 * g2 * c2 + st2 * g1 * g1 * s2) / d;
  w.eta12 = sin2phi / (2.0 * d) * (d * (st1 - st2) + st2 * g1 * g1 - st1 * g2 * g2);
  w.beta1 = vc.A2.real() / d;
  w.beta2 = vc.A1.real() / d;
  w.beta12 = -sin2phi / (2.0 * d) * (st1 - st2);
  w.delta1 = sin2phi / (2.0 * d) * (g1 * st2 - g2 * st1);
  w.delta2 = w.delta1;
  w.gamma1 = -(st2 * g1 * c2 + st1 * g2 * s2) / d;
  w.gamma2 = -(st1 * g2 * c2 + st2 * g1 * s2) / d;
  return w;
}

Eigen::Matrix4d wigner_quadratic_form(const WignerCoefficients& w) {
  Eigen::Matrix4d m;
  // clang-format off
  m <<  w.eta1,   -w.gamma1, -w.eta12,  -w.delta1,
       -w.gamma1,  w.beta1,  -w.delta2, -w.beta12,
       -w.eta12,  -w.delta2,  w.eta2,   -w.gamma2,
       -w.delta1, -w.beta12, -w.gamma2,  w.beta2;
  // clang-format on
  return m;
}

double wigner_value(const WignerCoefficients& wc, const std::array<double, 4>& z) {
  const Eigen::Vector4d v(z[0], z[1], z[2], z[3]);
  const double pi2 = std::numbers::pi * std::numbers::pi;
  return std::exp(-v.dot(wigner_quadratic_form(wc) * v)) / pi2;
}

MarginalWigner marginal_wigner(const WignerCoefficients& wc, Mode keep) {
  MarginalWigner mw;
  if (keep == Mode::first) {
    mw.norm_det = wc.beta2 * wc.eta2 - wc.gamma2 * wc.gamma2;
    mw.Delta1 = wc.eta1 / mw.norm_det;
    mw.Delta2 = wc.beta1 / mw.norm_det;
    mw.Delta12 = wc.gamma1 / mw.norm_det;
  } else {
    mw.norm_det = wc.beta1 * wc.eta1 - wc.gamma1 * wc.gamma1;
    mw.Delta1 = wc.eta2 / mw.norm_det;
    mw.Delta2 = wc.beta2 / mw.norm_det;
    mw.Delta12 = wc.gamma2 / mw.norm_det;
  }
  return mw;
}

SecondMoments moments(const MarginalWigner& mw) {
  const double twice_det = 2.0 * mw.det();
  return {mw.Delta2 / twice_det, mw.Delta1 / twice_det, mw.Delta12 / twice_det};
}

UncertaintyReport uncertainty_product(double S_L, double gamma_i) {
  if (!(S_L >= 0.0 && S_L < 1.0)) {
    throw DomainError("uncertainty product needs 0 <= S_L < 1 (S_L -> 1 is the divergent limit)");
  }
  const double inv_purity = 1.0 / (1.0 - S_L);
  UncertaintyReport r;
  r.product = 0.5 * std::sqrt(inv_purity * inv_purity + gamma_i * gamma_i);
  r.U = 4.0 * r.product * r.product;
  r.lower_bound = 0.5 * std::sqrt(1.0 + gamma_i * gamma_i);
  return r;
}

UncertaintyReport uncertainty_product(double S_L, double gamma_i, const SecondMoments& m) {
  UncertaintyReport r = uncertainty_product(S_L, gamma_i);
  r.dx = std::sqrt(m.x2);
  r.dp = std::sqrt(m.p2);
  return r;
}

}  // namespace tdho
