#include <doctest.h>

#include <Eigen/Dense>
#include <cmath>
#include <numbers>
#include <random>

#include "support.hpp"
#include "tdho/error.hpp"
#include "tdho/params.hpp"

using namespace tdho;

namespace {

// Eigenvalues of the coupling matrix, as an independent reference for the
// normal-mode formulas.
std::pair<double, double> potential_eigenvalues(const SystemParams& p) {
  Eigen::Matrix2d m;
  m << p.omega1 * p.omega1, p.J, p.J, p.omega2 * p.omega2;
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix2d> es(m);
  return {es.eigenvalues()(0), es.eigenvalues()(1)};
}

}  // namespace

TEST_CASE("mixing angle of the reference initial state") {
  const double phi = mixing_angle(1.0, 2.25, 1.1);
  CHECK(phi == doctest::Approx(-0.5270506).epsilon(1e-7));
  CHECK(std::abs(rotated_potential(testing::kInitial, phi).coupling) < 1e-12);
}

TEST_CASE("mixing angle special cases") {
  CHECK(mixing_angle(2.0, 2.0, 0.7) == doctest::Approx(std::numbers::pi / 4));
  CHECK(mixing_angle(2.0, 2.0, 0.0) == 0.0);
  CHECK(mixing_angle(1.0, 4.0, 0.0) == 0.0);
  // principal branch: 2 phi in (-pi/2, pi/2]
  CHECK(mixing_angle(1.0, 4.0, 1.0) < 0.0);
  CHECK(mixing_angle(4.0, 1.0, 1.0) > 0.0);
}

TEST_CASE("normal modes of the reference initial state") {
  const NormalModes nm = normal_modes(testing::kInitial);
  const auto [lo, hi] = potential_eigenvalues(testing::kInitial);
  CHECK(nm.kappa_tilde == -1);
  CHECK(nm.sigma1_sq == doctest::Approx(lo).epsilon(1e-13));
  CHECK(nm.sigma2_sq == doctest::Approx(hi).epsilon(1e-13));
  CHECK(nm.sigma1_sq == doctest::Approx(0.35984).epsilon(1e-5));
  CHECK(nm.sigma2_sq == doctest::Approx(2.89016).epsilon(1e-5));
}

TEST_CASE("degenerate frequencies take kappa = +1") {
  const NormalModes nm = normal_modes({1.2, 1.2, 0.4, 0.0});
  CHECK(nm.kappa_tilde == 1);
  CHECK(nm.sigma1_sq == doctest::Approx(1.44 + 0.4));
  CHECK(nm.sigma2_sq == doctest::Approx(1.44 - 0.4));
  CHECK(std::abs(rotated_potential({1.2, 1.2, 0.4, 0.0}, nm.phi).coupling) < 1e-12);
}

TEST_CASE("property: trace, determinant and decoupling") {
  std::mt19937 rng(11);
  std::uniform_real_distribution<double> w(0.1, 4.0), j(0.0, 5.0);
  for (int k = 0; k < 500; ++k) {
    const SystemParams p{w(rng), w(rng), j(rng), 0.0};
    const NormalModes nm = normal_modes(p);
    const double w1 = p.omega1 * p.omega1, w2 = p.omega2 * p.omega2;
    CHECK(nm.sigma1_sq + nm.sigma2_sq == doctest::Approx(w1 + w2).epsilon(1e-12));
    CHECK(nm.sigma1_sq * nm.sigma2_sq == doctest::Approx(w1 * w2 - p.J * p.J).epsilon(1e-10).scale(w1 * w2));
    const RotatedPotential rp = rotated_potential(p, nm.phi);
    CHECK(std::abs(rp.coupling) < 1e-12 * (w1 + w2 + p.J));
    CHECK(rp.sigma1_sq == doctest::Approx(nm.sigma1_sq).epsilon(1e-12).scale(w1 + w2));
    CHECK(rp.sigma2_sq == doctest::Approx(nm.sigma2_sq).epsilon(1e-12).scale(w1 + w2));
    CHECK(std::abs(2.0 * nm.phi) <= std::numbers::pi / 2 + 1e-15);
  }
}

TEST_CASE("parameter validation") {
  CHECK_THROWS_AS(validate(SystemParams{0.0, 1.0, 0.0, 0.0}), DomainError);
  CHECK_THROWS_AS(validate(SystemParams{1.0, -1.0, 0.0, 0.0}), DomainError);
  CHECK_THROWS_AS(validate(SystemParams{1.0, 1.0, -0.1, 0.0}), DomainError);
  CHECK_THROWS_AS(validate(SystemParams{1.0, 1.0, 0.1, -0.2}), DomainError);
  CHECK_THROWS_AS(validate(SystemParams{NAN, 1.0, 0.1, 0.0}), DomainError);
  CHECK_NOTHROW(validate(testing::kInitial));
}

TEST_CASE("quench timeline") {
  const QuenchSpec q = testing::reference(0.3);
  CHECK(params_at(q, 0.0).J == 1.1);
  CHECK(params_at(q, 1e-12).J == 0.9);
  CHECK(params_at(q, 5.0).omega1 == 1.3);
  CHECK(q.omega_c() == 0.3);
  CHECK_THROWS_AS(params_at(q, -1e-9), DomainError);

  SystemParams f = testing::kFinal;
  f.omega_c = 0.5;
  CHECK_THROWS_AS(QuenchSpec(testing::kInitial, f), DomainError);

  const QuenchSpec c = QuenchSpec::constant(testing::kInitial);
  CHECK(params_at(c, 3.0).J == 1.1);
}
