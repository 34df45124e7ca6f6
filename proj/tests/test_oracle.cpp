#include <doctest.h>

#include <cmath>
#include <random>

#include "support.hpp"
#include "tdho/error.hpp"
#include "tdho/observables.hpp"
#include "tdho/oracle.hpp"

using namespace tdho;
using namespace tdho::oracle;

TEST_CASE("grid validation") {
  CHECK_THROWS_AS(Grid1D(-1, 1, 32), DomainError);
  CHECK_THROWS_AS(Grid1D(1, 1, 128), DomainError);
  const Grid1D g(-2, 2, 101);
  CHECK(g.spacing() == doctest::Approx(0.04));
  CHECK(g.at(100) == doctest::Approx(2.0));
}

TEST_CASE("kernel is a density matrix") {
  const Snapshot s = evaluate_snapshot(testing::reference(0.3), 7.5);
  const auto k = discretize_kernel(s.vacuum, Grid1D::for_state(s.vacuum, 256));
  CHECK((k.K - k.K.adjoint()).cwiseAbs().maxCoeff() < 1e-12);
  CHECK(std::abs(k.K.trace() - 1.0) < 1e-6);
  CHECK(grid_purity(k) == doctest::Approx(s.purity).epsilon(1e-8));
}

TEST_CASE("reference purity by quadrature") {
  const Snapshot s = evaluate_snapshot(testing::reference(), 0.0);
  CHECK(converged_grid_purity(s.vacuum) == doctest::Approx(0.9037631).epsilon(1e-6));
}

TEST_CASE("unresolved grids are reported") {
  // a strongly chirped state is not resolved by the width-based window at
  // 64 points, so refinement moves the answer
  Snapshot s = evaluate_snapshot(testing::reference(), 0.0);
  s.vacuum.A1 += std::complex<double>(0.0, 400.0);
  s.vacuum.A12 += std::complex<double>(0.0, 150.0);
  CHECK_THROWS_AS(converged_grid_purity(s.vacuum, 64), InsufficientGrid);
}

TEST_CASE("spectrum, eigenfunctions and entropy at random states") {
  std::mt19937 rng(41);
  for (int trial = 0; trial < 6; ++trial) {
    const Snapshot s = evaluate_snapshot(testing::random_quench(rng), testing::random_time(rng));
    const Grid1D grid = Grid1D::for_state(s.vacuum, 384);
    const auto sp = kernel_spectrum(discretize_kernel(s.vacuum, grid), 30);
    const auto p = schmidt_spectrum(s.kernel.gamma, 5);
    for (std::size_t n = 0; n <= 5; ++n) CHECK(std::abs(sp.values[n] - p[n]) < 1e-8);
    for (int n = 0; n <= 2; ++n) {
      if (p[static_cast<std::size_t>(n)] < 1e-6) continue;  // degenerate tail, eigenvectors not unique
      std::vector<std::complex<double>> chi(grid.n_points);
      for (std::size_t i = 0; i < grid.n_points; ++i) {
        chi[i] = chi_eigenfunction(n, s.kernel.kappa, s.kernel.alpha2, grid.at(i));
      }
      CHECK(eigenvector_overlap(sp, grid, static_cast<std::size_t>(n), chi) > 1.0 - 1e-6);
    }
    CHECK(spectral_entropy(sp.values) == doctest::Approx(von_neumann(s.kernel.gamma)).epsilon(1e-6));
  }
}

TEST_CASE("numeric Wigner transform and moments") {
  std::mt19937 rng(43);
  std::normal_distribution<double> z(0.0, 0.7);
  for (int trial = 0; trial < 4; ++trial) {
    const Snapshot s = evaluate_snapshot(testing::random_quench(rng), testing::random_time(rng));
    for (int p = 0; p < 5; ++p) {
      const std::array<double, 4> pt{z(rng), z(rng), z(rng), z(rng)};
      CHECK(std::abs(converged_numeric_wigner(s.vacuum, pt) - wigner_value(s.wigner, pt)) < 1e-8);
    }
    const SecondMoments a = numeric_moments(s.vacuum, Grid1D::for_state(s.vacuum, 384));
    const SecondMoments b = moments(marginal_wigner(s.wigner));
    CHECK(a.x2 == doctest::Approx(b.x2).epsilon(1e-8));
    CHECK(a.p2 == doctest::Approx(b.p2).epsilon(1e-8));
    CHECK(std::abs(a.xp - b.xp) < 1e-8);
  }
}
