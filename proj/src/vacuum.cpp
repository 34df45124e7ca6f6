#include "tdho/vacuum.hpp"

#include <cmath>
#include <limits>
#include <numbers>

#include "tdho/error.hpp"

namespace tdho {

VacuumCoefficients vacuum_coefficients(double phi, const ModeScale& scale1, const ModeScale& scale2) {
  const double c = std::cos(phi);
  const double s = std::sin(phi);
  VacuumCoefficients vc;
  vc.A1 = scale1.rho * (c * c) + scale2.rho * (s * s);
  vc.A2 = scale2.rho * (c * c) + scale1.rho * (s * s);
  vc.A12 = (s * c) * (scale1.rho - scale2.rho);
  vc.phi = phi;
  vc.scale1 = scale1;
  vc.scale2 = scale2;
  return vc;
}

ReducedKernel reduced_kernel(const VacuumCoefficients& vc) {
  const double c2 = std::cos(vc.phi) * std::cos(vc.phi);
  const double s2 = std::sin(vc.phi) * std::sin(vc.phi);
  const double st1 = vc.scale1.sigma_tilde;
  const double st2 = vc.scale2.sigma_tilde;
  const double g1 = vc.scale1.hdot_over_h;
  const double g2 = vc.scale2.hdot_over_h;
  const double reA2 = vc.A2.real();
  const double width = st1 * s2 + st2 * c2;  // equals Re A2

  ReducedKernel k;
  k.D1 = vc.A1 - vc.A12 * vc.A12 / (2.0 * reA2);
  k.D12 = std::norm(vc.A12) / reA2;
  k.alpha1 = st1 * st2 / (2.0 * reA2);
  k.alpha2 = (g1 * st2 * c2 + g2 * st1 * s2) / (2.0 * width);
  const double dst = st1 - st2;
  const double dg = g1 - g2;
  k.alpha3 = 0.25 * s2 * c2 * (dst * dst + dg * dg) / width;
  k.kappa = 2.0 * std::sqrt(k.alpha1 * (k.alpha1 + 2.0 * k.alpha3));
  k.gamma = k.alpha3 / ((k.alpha1 + k.alpha3) + 0.5 * k.kappa);
  return k;
}

double marginal_purity(const VacuumCoefficients& vc) {
  const double d = vc.scale1.sigma_tilde * vc.scale2.sigma_tilde;
  return std::sqrt(d / (d + std::norm(vc.A12)));
}

std::vector<double> schmidt_spectrum(double gamma, std::size_t n_max) {
  if (!(gamma >= 0.0 && gamma < 1.0)) throw DomainError("Schmidt parameter must lie in [0, 1)");
  std::vector<double> p(n_max + 1);
  double g_pow = 1.0;
  for (auto& pn : p) {
    pn = (1.0 - gamma) * g_pow;
    g_pow *= gamma;
  }
  return p;
}

double von_neumann(double gamma) {
  if (!(gamma >= 0.0 && gamma <= 1.0)) throw DomainError("Schmidt parameter must lie in [0, 1]");
  if (gamma == 0.0) return 0.0;
  if (gamma == 1.0) return std::numeric_limits<double>::infinity();
  return -std::log1p(-gamma) - gamma / (1.0 - gamma) * std::log(gamma);
}

double von_neumann_from_linear(double S_L) {
  if (!(S_L >= 0.0 && S_L <= 1.0)) throw DomainError("linear entropy must lie in [0, 1]");
  if (S_L == 0.0) return 0.0;
  if (S_L == 1.0) return std::numeric_limits<double>::infinity();
  return -std::log((1.0 - S_L) / (1.0 + S_L)) -
         2.0 * S_L / (1.0 - S_L) * std::log(2.0 * S_L / (1.0 + S_L));
}

GeneralizedEntropies generalized_entropies(double gamma, double nu) {
  if (!(gamma >= 0.0 && gamma < 1.0)) throw DomainError("Schmidt parameter must lie in [0, 1)");
  if (!(nu > 0.0)) throw DomainError("entropy order must be positive");
  if (nu == 1.0) throw DomainError("order 1 is the von Neumann limit; use von_neumann()");
  const double trace = std::pow(1.0 - gamma, nu) / (1.0 - std::pow(gamma, nu));
  return {(1.0 - trace) / (nu - 1.0), std::log(trace) / (1.0 - nu)};
}

double hermite(int n, double x) {
  if (n < 0) throw DomainError("Hermite degree must be non-negative");
  if (n == 0) return 1.0;
  double prev = 1.0;
  double cur = 2.0 * x;
  for (int k = 1; k < n; ++k) {
    const double next = 2.0 * x * cur - 2.0 * k * prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

std::complex<double> chi_eigenfunction(int n, double kappa, double alpha2, double x) {
  if (n < 0 || n > 20) throw DomainError("eigenfunction index must lie in [0, 20]");
  if (!(kappa > 0.0)) throw DomainError("kappa must be positive");
  const double norm = std::pow(kappa / std::numbers::pi, 0.25) /
                      std::sqrt(std::ldexp(std::tgamma(n + 1.0), n));
  const double envelope = norm * hermite(n, std::sqrt(kappa) * x) * std::exp(-0.5 * kappa * x * x);
  const double phase = alpha2 * x * x;
  return {envelope * std::cos(phase), envelope * std::sin(phase)};
}

}  // namespace tdho
