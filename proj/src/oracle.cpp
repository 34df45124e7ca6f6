#include "tdho/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "tdho/error.hpp"

namespace tdho::oracle {

namespace {

constexpr double kRefineTol = 1e-6;
constexpr std::size_t kMinPoints = 64;

}  // namespace

Grid1D::Grid1D(double lo, double hi, std::size_t n) : x_min(lo), x_max(hi), n_points(n) {
  if (n < kMinPoints) throw DomainError("oracle grids need at least 64 points");
  if (!(hi > lo)) throw DomainError("oracle grid range is empty");
}

Grid1D Grid1D::for_state(const VacuumCoefficients& vc, std::size_t n_points) {
  const double narrowest = std::min(vc.scale1.sigma_tilde, vc.scale2.sigma_tilde);
  if (!(narrowest > 0.0)) throw DomainError("mode widths must be positive");
  const double half = 8.0 / std::sqrt(narrowest);
  return {-half, half, n_points};
}

std::complex<double> vacuum_wavefunction(const VacuumCoefficients& vc, double x1, double x2) {
  const double d = vc.scale1.sigma_tilde * vc.scale2.sigma_tilde;
  const double norm = std::pow(d / (std::numbers::pi * std::numbers::pi), 0.25);
  return norm * std::exp(-0.5 * vc.A1 * x1 * x1 - 0.5 * vc.A2 * x2 * x2 + vc.A12 * x1 * x2);
}

KernelMatrix discretize_kernel(const VacuumCoefficients& vc, const Grid1D& grid) {
  const auto n = static_cast<Eigen::Index>(grid.n_points);
  Eigen::MatrixXcd psi(n, n);  // psi(x1_i, x2_k)
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index k = 0; k < n; ++k) {
      psi(i, k) = vacuum_wavefunction(vc, grid.at(static_cast<std::size_t>(i)),
                                      grid.at(static_cast<std::size_t>(k)));
    }
  }
  const double dx = grid.spacing();
  KernelMatrix out{Eigen::MatrixXcd(n, n), grid};
  out.K.noalias() = psi * psi.adjoint();
  out.K *= dx * dx;
  return out;
}

double grid_purity(const KernelMatrix& kernel) {
  // Tr(K^2) for Hermitian K
  return kernel.K.cwiseAbs2().sum();
}

double converged_grid_purity(const VacuumCoefficients& vc, std::size_t n_points) {
  const double coarse = grid_purity(discretize_kernel(vc, Grid1D::for_state(vc, n_points)));
  const double fine = grid_purity(discretize_kernel(vc, Grid1D::for_state(vc, 2 * n_points)));
  if (std::abs(fine - coarse) > kRefineTol) {
    throw InsufficientGrid("grid purity moved by " + std::to_string(std::abs(fine - coarse)) +
                           " under refinement");
  }
  return fine;
}

KernelSpectrum kernel_spectrum(const KernelMatrix& kernel, std::size_t k) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(kernel.K);
  if (es.info() != Eigen::Success) throw NumericError("kernel eigensolve failed");
  const auto n = kernel.K.rows();
  const auto take = std::min<Eigen::Index>(static_cast<Eigen::Index>(k), n);

  KernelSpectrum out;
  out.vectors.resize(n, take);
  const double inv_sqrt_dx = 1.0 / std::sqrt(kernel.grid.spacing());
  for (Eigen::Index j = 0; j < take; ++j) {
    const Eigen::Index src = n - 1 - j;  // eigenvalues come out ascending
    out.values.push_back(es.eigenvalues()(src));
    out.vectors.col(j) = es.eigenvectors().col(src) * inv_sqrt_dx;
  }
  return out;
}

double eigenvector_overlap(const KernelSpectrum& spectrum, const Grid1D& grid, std::size_t index,
                           const std::vector<std::complex<double>>& f) {
  const auto col = static_cast<Eigen::Index>(index);
  std::complex<double> acc = 0.0;
  for (std::size_t i = 0; i < f.size(); ++i) {
    acc += std::conj(spectrum.vectors(static_cast<Eigen::Index>(i), col)) * f[i];
  }
  return std::abs(acc) * grid.spacing();
}

double spectral_entropy(const std::vector<double>& eigenvalues) {
  double s = 0.0;
  for (double p : eigenvalues) {
    if (p > 1e-300) s -= p * std::log(p);
  }
  return s;
}

double numeric_wigner(const VacuumCoefficients& vc, const Grid1D& q_grid, const std::array<double, 4>& z) {
  const double x1 = z[0], p1 = z[1], x2 = z[2], p2 = z[3];
  const double dq = q_grid.spacing();
  std::complex<double> acc = 0.0;
  for (std::size_t a = 0; a < q_grid.n_points; ++a) {
    const double q1 = q_grid.at(a);
    for (std::size_t b = 0; b < q_grid.n_points; ++b) {
      const double q2 = q_grid.at(b);
      const std::complex<double> kernel =
          std::conj(vacuum_wavefunction(vc, x1 + q1, x2 + q2)) * vacuum_wavefunction(vc, x1 - q1, x2 - q2);
      const double phase = -2.0 * (p1 * q1 + p2 * q2);
      acc += kernel * std::complex<double>(std::cos(phase), std::sin(phase));
    }
  }
  const double pi2 = std::numbers::pi * std::numbers::pi;
  return acc.real() * dq * dq / pi2;
}

double converged_numeric_wigner(const VacuumCoefficients& vc, const std::array<double, 4>& z,
                                std::size_t n_points) {
  const double coarse = numeric_wigner(vc, Grid1D::for_state(vc, n_points), z);
  const double fine = numeric_wigner(vc, Grid1D::for_state(vc, 2 * n_points), z);
  if (std::abs(fine - coarse) > kRefineTol) {
    throw InsufficientGrid("Wigner quadrature moved by " + std::to_string(std::abs(fine - coarse)) +
                           " under refinement");
  }
  return fine;
}

SecondMoments numeric_moments(const VacuumCoefficients& vc, const Grid1D& grid) {
  const double dx = grid.spacing();
  double x2 = 0.0, p2 = 0.0, xp = 0.0;
  for (std::size_t i = 0; i < grid.n_points; ++i) {
    const double x = grid.at(i);
    for (std::size_t k = 0; k < grid.n_points; ++k) {
      const double y = grid.at(k);
      const double dens = std::norm(vacuum_wavefunction(vc, x, y));
      // -i d/dx1 psi = -i (-A1 x1 + A12 x2) psi
      const std::complex<double> grad = -vc.A1 * x + vc.A12 * y;
      x2 += x * x * dens;
      p2 += std::norm(grad) * dens;
      // Re <x p> = <{x, p}>/2; the Wigner convention mirrors p.
      xp -= x * grad.imag() * dens;
    }
  }
  const double w = dx * dx;
  return {x2 * w, p2 * w, xp * w};
}

}  // namespace tdho::oracle
