#pragma once

// Brute-force reference computations. Everything here starts from the
// vacuum wavefunction itself and integrates numerically; nothing reuses the
// closed-form kernel, purity, spectrum or Wigner expressions it is checked
// against. Uniform grids with equal weights (trapezoid with negligible tails).

#include <array>
#include <complex>
#include <cstddef>
#include <vector>

#include <Eigen/Dense>

#include "tdho/vacuum.hpp"
#include "tdho/wigner.hpp"

namespace tdho::oracle {

struct Grid1D {
  double x_min = -1.0;
  double x_max = 1.0;
  std::size_t n_points = 64;

  /// Throws DomainError for fewer than 64 points or an empty range.
  Grid1D(double x_min, double x_max, std::size_t n_points);

  /// Symmetric window of half-width 8 / sqrt(min sigma_tilde).
  static Grid1D for_state(const VacuumCoefficients& vc, std::size_t n_points);

  double spacing() const { return (x_max - x_min) / static_cast<double>(n_points - 1); }
  double at(std::size_t i) const { return x_min + spacing() * static_cast<double>(i); }
};

/// K(i, j) = rho_A(x_i, x_j) * spacing, obtained by summing psi psi* over the
/// traced coordinate on the same grid.
struct KernelMatrix {
  Eigen::MatrixXcd K;
  Grid1D grid;
};

struct KernelSpectrum {
  std::vector<double> values;  // descending
  Eigen::MatrixXcd vectors;    // columns normalized to sum |v|^2 dx = 1
};

/// Normalized two-mode vacuum (time-dependent global phase dropped).
std::complex<double> vacuum_wavefunction(const VacuumCoefficients& vc, double x1, double x2);

KernelMatrix discretize_kernel(const VacuumCoefficients& vc, const Grid1D& grid);

/// Tr(K^2) as the discrete double integral.
double grid_purity(const KernelMatrix& kernel);

/// Purity at n_points and 2 n_points; throws InsufficientGrid if the two
/// differ by more than 1e-6. Returns the refined value.
double converged_grid_purity(const VacuumCoefficients& vc, std::size_t n_points = 256);

/// The k largest eigenvalues (and eigenvectors) of the Hermitian kernel.
KernelSpectrum kernel_spectrum(const KernelMatrix& kernel, std::size_t k);

/// |<v_index | f>| on the kernel grid, f sampled pointwise.
double eigenvector_overlap(const KernelSpectrum& spectrum, const Grid1D& grid, std::size_t index,
                           const std::vector<std::complex<double>>& f);

/// -sum p ln p over the non-negligible eigenvalues.
double spectral_entropy(const std::vector<double>& eigenvalues);

/// Direct quadrature of the Wigner transform at z = (x1, p1, x2, p2):
/// pi^-2 sum_q psi*(x + q) psi(x - q) exp(-2i p.q) dq1 dq2.
double numeric_wigner(const VacuumCoefficients& vc, const Grid1D& q_grid, const std::array<double, 4>& z);

/// numeric_wigner on an auto-sized grid at n and 2n points; throws
/// InsufficientGrid if they differ by more than 1e-6.
double converged_numeric_wigner(const VacuumCoefficients& vc, const std::array<double, 4>& z,
                                std::size_t n_points = 128);

/// Second moments of oscillator 1 by quadrature of psi and its analytic
/// gradient, reported in the Wigner convention of wigner.hpp (xp mirrored).
SecondMoments numeric_moments(const VacuumCoefficients& vc, const Grid1D& grid);

}  // namespace tdho::oracle
