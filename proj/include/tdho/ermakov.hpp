#pragma once

#include <complex>
#include <functional>
#include <span>
#include <vector>

namespace tdho {

/// Scale function h(t) of one normal mode and its time derivative.
/// sigma0_sq is the initial-time frequency squared sigma^2(0, B), the
/// right-hand side constant of  h'' + sigma^2(t) h = sigma0^2 / h^3.
struct ErmakovState {
  double h = 1.0;
  double hdot = 0.0;
  double sigma0_sq = 1.0;
};

/// Instantaneous Gaussian width and chirp of a mode:
///   sigma_tilde = sqrt(sigma0_sq) / h^2,  rho = sigma_tilde - i hdot/h.
struct ModeScale {
  double sigma_tilde = 1.0;
  double hdot_over_h = 0.0;
  std::complex<double> rho{1.0, 0.0};
};

ModeScale mode_scale(const ErmakovState& s);

/// Closed-form scale for a sudden quench sigma_i^2 -> sigma_f^2 of one mode
/// (B = 0 values; omega_c^2 is added internally). With z = sigma_f^2 + omega_c^2,
///
///   h^2 = 1 - 2a sin^2(sqrt(z) t),      z > 0
///   h^2 = 1 + 2a sinh^2(sqrt(-z) t),    z < 0
///
/// where a = (sigma_f^2 - sigma_i^2) / (2z); this is the cos/cosh form with
/// a + b = 1 folded in, so h(0) = 1 and hdot(0) = 0 hold exactly.
///
/// Throws DomainError if sigma_i^2 + omega_c^2 <= 0 (no normalizable initial
/// ground state) or |z| <= 1e-12 (degenerate continuation).
ErmakovState quench_h(double sigma_i_sq, double sigma_f_sq, double omega_c, double t);

/// Analytic lower bound of h^2 for an oscillatory quench (z > 0):
/// (min(sigma_i^2, sigma_f^2) + omega_c^2) / (sigma_f^2 + omega_c^2).
double quench_h_sq_floor(double sigma_i_sq, double sigma_f_sq, double omega_c);

/// Classical fourth-order Runge-Kutta solution of the Ermakov equation with
/// h(0) = 1, hdot(0) = 0, taking one step per interval of t_grid.
/// t_grid must start at 0 and be strictly increasing. Throws NumericError if
/// h falls below 1e-9.
std::vector<ErmakovState> integrate_ermakov(const std::function<double(double)>& sigma_sq,
                                            double sigma0_sq, std::span<const double> t_grid);

/// |hddot + sigma^2 h - sigma0^2 / h^3| for a finite-difference estimate of hddot.
double ermakov_residual(const ErmakovState& state, double hddot_estimate, double sigma_sq);

}  // namespace tdho
