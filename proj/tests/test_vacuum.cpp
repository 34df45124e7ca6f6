#include <doctest.h>

#include <cmath>
#include <complex>
#include <random>

#include "support.hpp"
#include "tdho/error.hpp"
#include "tdho/observables.hpp"
#include "tdho/vacuum.hpp"

using namespace tdho;

// Reference values at t = 0 of the reference quench, omega_c = 0, computed
// independently by numerical partial trace and diagonalization.
TEST_CASE("reference state at t = 0") {
  const Snapshot s = evaluate_snapshot(testing::reference(), 0.0);
  CHECK(s.scale1.sigma_tilde == doctest::Approx(0.5998682).epsilon(1e-6));
  CHECK(s.scale2.sigma_tilde == doctest::Approx(1.7000465).epsilon(1e-6));
  CHECK(s.vacuum.A12.real() == doctest::Approx(0.4782786).epsilon(1e-6));
  CHECK(s.vacuum.A12.imag() == 0.0);
  CHECK(s.purity == doctest::Approx(0.9037631).epsilon(1e-6));
  CHECK(s.S_L == doctest::Approx(0.0962369).epsilon(1e-5));
  CHECK(s.kernel.alpha1 == doctest::Approx(0.3586548).epsilon(1e-6));
  CHECK(s.kernel.alpha2 == doctest::Approx(0.0).scale(1.0));
  CHECK(s.kernel.alpha3 == doctest::Approx(0.0402246).epsilon(1e-5));
  CHECK(s.kernel.kappa == doctest::Approx(0.7936921).epsilon(1e-6));
  CHECK(s.kernel.gamma == doctest::Approx(0.0505509).epsilon(1e-5));
  CHECK(von_neumann(s.kernel.gamma) == doctest::Approx(0.2107897).epsilon(1e-6));
  CHECK(von_neumann_from_linear(s.S_L) == doctest::Approx(0.5635694).epsilon(1e-6));
}

TEST_CASE("kernel exponents") {
  const Snapshot s = evaluate_snapshot(testing::reference(0.3), 4.2);
  const auto& v = s.vacuum;
  const auto& k = s.kernel;
  const double re_a2 = v.A2.real();
  CHECK(std::abs(k.D1 - (v.A1 - v.A12 * v.A12 / (2.0 * re_a2))) < 1e-14);
  CHECK(k.D12 == doctest::Approx(std::norm(v.A12) / re_a2));
  CHECK(k.alpha1 == doctest::Approx(s.scale1.sigma_tilde * s.scale2.sigma_tilde / (2.0 * re_a2)));
  CHECK(k.kappa == doctest::Approx(2.0 * std::sqrt(k.alpha1 * (k.alpha1 + 2.0 * k.alpha3))));
  CHECK(std::abs(k.alpha2) > 0.0);  // chirped after the quench
}

TEST_CASE("property: vacuum identities at random states") {
  std::mt19937 rng(3);
  for (int trial = 0; trial < 200; ++trial) {
    const Snapshot s = evaluate_snapshot(testing::random_quench(rng), testing::random_time(rng));
    const auto& v = s.vacuum;
    const auto& k = s.kernel;
    const double s12 = s.scale1.sigma_tilde * s.scale2.sigma_tilde;
    CHECK(v.A1.real() * v.A2.real() - v.A12.real() * v.A12.real() == doctest::Approx(s12).epsilon(1e-10));
    CHECK(std::abs(k.D1 - 2.0 * std::complex<double>(k.alpha1 + k.alpha3, -k.alpha2)) < 1e-10 * std::abs(k.D1));
    CHECK(k.D12 == doctest::Approx(4.0 * k.alpha3).epsilon(1e-10));
    CHECK(s.purity == doctest::Approx((1.0 - k.gamma) / (1.0 + k.gamma)).epsilon(1e-10));
    CHECK(s.purity > 0.0);
    CHECK(s.purity <= 1.0);
    CHECK(k.gamma >= 0.0);
    CHECK(k.gamma < 1.0);
    CHECK(k.alpha3 >= 0.0);
  }
}

TEST_CASE("uncoupled oscillators are not entangled") {
  const Snapshot s = evaluate_snapshot(QuenchSpec({1.0, 2.0, 0.0, 0.3}, {1.5, 0.7, 0.0, 0.3}), 6.0);
  CHECK(s.purity == doctest::Approx(1.0));
  CHECK(s.kernel.gamma == doctest::Approx(0.0).scale(1.0));
  CHECK(von_neumann(s.kernel.gamma) == 0.0);
}

TEST_CASE("geometric spectrum") {
  const auto p = schmidt_spectrum(0.3, 60);
  double sum = 0.0, sq = 0.0;
  for (double x : p) sum += x, sq += x * x;
  CHECK(sum == doctest::Approx(1.0));
  CHECK(sq == doctest::Approx(0.7 / 1.3));
  CHECK(p[2] == doctest::Approx(0.7 * 0.09));
  CHECK_THROWS_AS(schmidt_spectrum(1.0, 3), DomainError);
  CHECK_THROWS_AS(schmidt_spectrum(-0.1, 3), DomainError);
  CHECK(schmidt_spectrum(0.0, 2) == std::vector<double>{1.0, 0.0, 0.0});
}

TEST_CASE("von Neumann entropy against the spectrum sum") {
  for (double g : {1e-6, 0.05, 0.3, 0.8, 0.95}) {
    double s = 0.0;
    for (double p : schmidt_spectrum(g, 2000)) {
      if (p > 0) s -= p * std::log(p);
    }
    CHECK(von_neumann(g) == doctest::Approx(s).epsilon(1e-10));
  }
  CHECK(von_neumann(0.0) == 0.0);
  CHECK(std::isinf(von_neumann(1.0)));
  CHECK_THROWS_AS(von_neumann(1.5), DomainError);
  CHECK_THROWS_AS(von_neumann(-0.5), DomainError);
}

TEST_CASE("generalized entropies") {
  const double g = 0.2;
  const auto two = generalized_entropies(g, 2.0);
  const double purity = (1 - g) / (1 + g);
  CHECK(two.tsallis == doctest::Approx(1.0 - purity));
  CHECK(two.renyi == doctest::Approx(-std::log(purity)));
  const auto near_one = generalized_entropies(g, 1.0 + 1e-7);
  CHECK(near_one.renyi == doctest::Approx(von_neumann(g)).epsilon(1e-5));
  CHECK(near_one.tsallis == doctest::Approx(von_neumann(g)).epsilon(1e-5));
  CHECK_THROWS_AS(generalized_entropies(g, 1.0), DomainError);
  CHECK_THROWS_AS(generalized_entropies(g, 0.0), DomainError);
}

TEST_CASE("Hermite polynomials") {
  for (double x : {-1.3, 0.0, 0.4, 2.5}) {
    CHECK(hermite(0, x) == 1.0);
    CHECK(hermite(1, x) == doctest::Approx(2 * x));
    CHECK(hermite(3, x) == doctest::Approx(8 * x * x * x - 12 * x));
    CHECK(hermite(4, x) == doctest::Approx(16 * std::pow(x, 4) - 48 * x * x + 12));
  }
}

TEST_CASE("Schmidt eigenfunctions are orthonormal") {
  const double kappa = 0.8, alpha2 = 0.35;
  const double dx = 0.005;
  for (int m = 0; m <= 4; ++m) {
    for (int n = 0; n <= 4; ++n) {
      std::complex<double> ip = 0.0;
      for (double x = -15; x <= 15; x += dx) {
        ip += std::conj(chi_eigenfunction(m, kappa, alpha2, x)) * chi_eigenfunction(n, kappa, alpha2, x) * dx;
      }
      CHECK(std::abs(ip - (m == n ? 1.0 : 0.0)) < 1e-9);
    }
  }
}
