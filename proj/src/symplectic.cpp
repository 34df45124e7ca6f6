#include "tdho/symplectic.hpp"

#include <algorithm>
#include <cmath>

#include "tdho/error.hpp"

namespace tdho {

namespace {

// Symplectic eigenvalues as the positive eigenvalues of the Hermitian
// matrix i V^{1/2} Omega V^{1/2}. Unlike the invariant formula this stays
// accurate when the two eigenvalues are degenerate (pure states).
std::array<double, 2> williamson(const Eigen::Matrix4d& v) {
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix4d> root(v);
  if (root.info() != Eigen::Success || root.eigenvalues().minCoeff() <= 0.0) {
    throw NumericError("covariance matrix is not positive definite");
  }
  const Eigen::Matrix4d s = root.operatorSqrt();
  Eigen::Matrix4d omega = Eigen::Matrix4d::Zero();
  omega(0, 1) = omega(2, 3) = 1.0;
  omega(1, 0) = omega(3, 2) = -1.0;
  const Eigen::Matrix4cd h = std::complex<double>(0.0, 1.0) * (s * omega * s).cast<std::complex<double>>();
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix4cd> es(h, Eigen::EigenvaluesOnly);
  return {es.eigenvalues()(2), es.eigenvalues()(3)};  // ascending: -nu+, -nu-, nu-, nu+
}

}  // namespace

StandardForm StandardForm::from_alpha(double alpha) {
  if (!(alpha >= 1.0)) throw DomainError("standard-form alpha must be >= 1");
  return {alpha, std::sqrt(alpha * alpha - 1.0)};
}

CovarianceMatrix StandardForm::matrix() const {
  CovarianceMatrix cm;
  // clang-format off
  cm.V << alpha, 0.0,   c,     0.0,
          0.0,   alpha, 0.0,   -c,
          c,     0.0,   alpha, 0.0,
          0.0,   -c,    0.0,   alpha;
  // clang-format on
  return cm;
}

double standard_form_alpha_sq(double phi, const ModeScale& scale1, const ModeScale& scale2) {
  const double s2 = std::sin(2.0 * phi);
  const double dg = scale1.hdot_over_h - scale2.hdot_over_h;
  const double ds = scale1.sigma_tilde - scale2.sigma_tilde;
  return 1.0 + s2 * s2 * (dg * dg + ds * ds) / (4.0 * scale1.sigma_tilde * scale2.sigma_tilde);
}

StandardForm standard_form_alpha(double phi, const ModeScale& scale1, const ModeScale& scale2) {
  return StandardForm::from_alpha(std::sqrt(standard_form_alpha_sq(phi, scale1, scale2)));
}

double ptranspose_min_eig(const StandardForm& sf) {
  // alpha - sqrt(alpha^2 - 1), written without cancellation for large alpha
  return 1.0 / (sf.alpha + sf.c);
}

double ptranspose_min_eig_general(const StandardForm& sf) {
  const double x = 2.0 * sf.alpha * sf.alpha - 1.0;
  return std::sqrt(1.0 / (x + std::sqrt(x * x - 1.0)));
}

double log_negativity_from_alpha(const StandardForm& sf) {
  return std::max(0.0, -std::log(ptranspose_min_eig(sf)));
}

double log_negativity_from_SL(double S_L) {
  if (!(S_L >= 0.0 && S_L < 1.0)) throw DomainError("linear entropy must lie in [0, 1)");
  const double s = std::sqrt(S_L * (2.0 - S_L));
  return std::log1p(s) - std::log1p(-S_L);
}

CovarianceMatrix covariance_from_moments(const WignerCoefficients& wc) {
  const Eigen::Matrix4d m = wigner_quadratic_form(wc);
  Eigen::LLT<Eigen::Matrix4d> llt(m);
  if (llt.info() != Eigen::Success) {
    throw NumericError("Wigner quadratic form is not positive definite");
  }
  CovarianceMatrix cm;
  cm.V = llt.solve(Eigen::Matrix4d::Identity());
  cm.V = 0.5 * (cm.V + cm.V.transpose()).eval();
  return cm;
}

std::array<double, 2> symplectic_eigenvalues(const CovarianceMatrix& cm) { return williamson(cm.V); }

std::array<double, 2> ptranspose_symplectic_eigenvalues(const CovarianceMatrix& cm) {
  Eigen::Matrix4d v = cm.V;
  v.row(3) *= -1.0;
  v.col(3) *= -1.0;
  return williamson(v);
}

double log_negativity(const CovarianceMatrix& cm) {
  return std::max(0.0, -std::log(ptranspose_symplectic_eigenvalues(cm)[0]));
}

double uncertainty_min_eigenvalue(const CovarianceMatrix& cm) {
  Eigen::Matrix4cd h = cm.V.cast<std::complex<double>>();
  const std::complex<double> i(0.0, 1.0);
  for (int mode = 0; mode < 2; ++mode) {
    h(2 * mode, 2 * mode + 1) += i;
    h(2 * mode + 1, 2 * mode) -= i;
  }
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix4cd> es(h, Eigen::EigenvaluesOnly);
  return es.eigenvalues().minCoeff();
}

}  // namespace tdho
