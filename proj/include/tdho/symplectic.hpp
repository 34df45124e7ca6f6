#pragma once

// Covariance matrices, two-mode standard form and logarithmic negativity.
//
// Convention: quadratures Q = (x1, p1, x2, p2) with [Q_i, Q_j] = 2i O_ij, so
// the vacuum of a unit oscillator has V = identity.

#include <array>

#include <Eigen/Dense>

#include "tdho/ermakov.hpp"
#include "tdho/wigner.hpp"

namespace tdho {

struct CovarianceMatrix {
  Eigen::Matrix4d V = Eigen::Matrix4d::Identity();

  Eigen::Matrix2d block(int row, int col) const { return V.block<2, 2>(2 * row, 2 * col); }
};

/// Symmetric two-mode standard form: diagonal blocks alpha*I, off-diagonal
/// blocks diag(c, -c) with c = sqrt(alpha^2 - 1).
struct StandardForm {
  double alpha = 1.0;
  double c = 0.0;

  static StandardForm from_alpha(double alpha);
  CovarianceMatrix matrix() const;
};

/// 1 + sin^2(2 phi) [(g1 - g2)^2 + (s1 - s2)^2] / (4 s1 s2). This is the
/// square of the standard-form diagonal element, i.e. 1/purity^2.
double standard_form_alpha_sq(double phi, const ModeScale& scale1, const ModeScale& scale2);

/// alpha = sqrt(standard_form_alpha_sq(...)).
StandardForm standard_form_alpha(double phi, const ModeScale& scale1, const ModeScale& scale2);

/// Smallest symplectic eigenvalue of the partial transpose, alpha - sqrt(alpha^2 - 1).
double ptranspose_min_eig(const StandardForm& sf);

/// Same quantity through the generic two-mode recipe
/// nu^2 = x - sqrt(x^2 - 1), x = 2 alpha^2 - 1.
double ptranspose_min_eig_general(const StandardForm& sf);

/// max(0, -ln nu_minus).
double log_negativity_from_alpha(const StandardForm& sf);

/// -1/2 ln[(1 - s)/(1 + s)], s = sqrt(S_L (2 - S_L)), evaluated as
/// ln(1 + s) - ln(1 - S_L) which is the same expression without cancellation.
double log_negativity_from_SL(double S_L);

/// V = M^{-1} with M the Wigner quadratic form. Throws NumericError if M is
/// not positive definite.
CovarianceMatrix covariance_from_moments(const WignerCoefficients& wc);

/// Symplectic eigenvalues (nu_minus, nu_plus) of a two-mode CM.
std::array<double, 2> symplectic_eigenvalues(const CovarianceMatrix& cm);

/// Symplectic eigenvalues of the partially transposed CM (p2 -> -p2).
std::array<double, 2> ptranspose_symplectic_eigenvalues(const CovarianceMatrix& cm);

/// Logarithmic negativity straight from a full CM.
double log_negativity(const CovarianceMatrix& cm);

/// Smallest eigenvalue of the Hermitian matrix V + i O; >= 0 for a physical state.
double uncertainty_min_eigenvalue(const CovarianceMatrix& cm);

}  // namespace tdho
