#pragma once

// Vacuum-state Gaussian exponents, the reduced single-oscillator density
// kernel, its geometric Schmidt spectrum and the entropy measures built on it.
//
// The two-mode vacuum in the lab frame is
//   psi(x1, x2) ~ exp(-A1 x1^2 / 2 - A2 x2^2 / 2 + A12 x1 x2).
// Tracing out x2 gives
//   rho_A(x, x') ~ exp(-D1 x^2 / 2 - conj(D1) x'^2 / 2 + D12 x x' / 2)
// with D1 = 2(alpha1 + alpha3 - i alpha2) and D12 = 4 alpha3.
//
// Entropies are in nats.

#include <complex>
#include <cstddef>
#include <vector>

#include "tdho/ermakov.hpp"

namespace tdho {

struct VacuumCoefficients {
  std::complex<double> A1;
  std::complex<double> A2;
  std::complex<double> A12;
  double phi = 0.0;
  ModeScale scale1;
  ModeScale scale2;
};

struct ReducedKernel {
  std::complex<double> D1;
  double D12 = 0.0;
  double alpha1 = 0.0;
  double alpha2 = 0.0;
  double alpha3 = 0.0;
  double kappa = 0.0;
  double gamma = 0.0;  // Schmidt parameter, p_n = (1 - gamma) gamma^n
};

struct EntropyReport {
  double purity = 1.0;
  double S_L = 0.0;
  double gamma = 0.0;
  double S_von = 0.0;
  double negativity = 0.0;
};

/// A1 = rho1 cos^2 phi + rho2 sin^2 phi, A2 = rho2 cos^2 phi + rho1 sin^2 phi,
/// A12 = sin phi cos phi (rho1 - rho2).
VacuumCoefficients vacuum_coefficients(double phi, const ModeScale& scale1, const ModeScale& scale2);

ReducedKernel reduced_kernel(const VacuumCoefficients& vc);

/// Tr[(rho_A)^2] = sqrt(s1 s2 / (s1 s2 + |A12|^2)).
double marginal_purity(const VacuumCoefficients& vc);

/// p_0 .. p_{n_max} of the geometric spectrum. Throws DomainError unless 0 <= gamma < 1.
std::vector<double> schmidt_spectrum(double gamma, std::size_t n_max);

/// Entanglement entropy of the geometric spectrum,
/// -ln(1 - gamma) - gamma/(1 - gamma) ln(gamma); 0 at gamma = 0, +inf at gamma = 1.
double von_neumann(double gamma);

/// Commonly quoted closed form in terms of the linear entropy:
/// -ln((1 - S_L)/(1 + S_L)) - 2 S_L/(1 - S_L) ln(2 S_L/(1 + S_L)).
/// This corresponds to gamma = 2 S_L / (1 + S_L), which does NOT match the
/// geometric spectrum (there S_L = 2 gamma / (1 + gamma)). Kept for comparison
/// only; use von_neumann(gamma) for the entanglement entropy.
double von_neumann_from_linear(double S_L);

struct GeneralizedEntropies {
  double tsallis = 0.0;  // (1 - Tr rho^nu) / (nu - 1)
  double renyi = 0.0;    // ln(Tr rho^nu) / (1 - nu)
};

/// Uses Tr rho^nu = (1 - gamma)^nu / (1 - gamma^nu). Rejects nu <= 0 and nu == 1.
GeneralizedEntropies generalized_entropies(double gamma, double nu);

/// Physicists' Hermite polynomial by the recurrence H_{n+1} = 2x H_n - 2n H_{n-1}.
double hermite(int n, double x);

/// Normalized Schmidt eigenfunction
///   chi_n(x) = (2^n n!)^{-1/2} (kappa/pi)^{1/4} H_n(sqrt(kappa) x) exp(-kappa x^2/2 + i alpha2 x^2).
/// Valid for n <= 20.
std::complex<double> chi_eigenfunction(int n, double kappa, double alpha2, double x);

}  // namespace tdho
