#pragma once

// Shared fixtures: the reference quench and small random generators for
// property tests.

#include <random>

#include "tdho/observables.hpp"
#include "tdho/params.hpp"

namespace testing {

inline const tdho::SystemParams kInitial{1.0, 1.5, 1.1, 0.0};
inline const tdho::SystemParams kFinal{1.3, 1.8, 0.9, 0.0};

inline tdho::QuenchSpec reference(double wc = 0.0) {
  auto i = kInitial, f = kFinal;
  i.omega_c = f.omega_c = wc;
  return {i, f};
}

/// Random oscillatory quench: positive frequencies, couplings kept below the
/// critical value on both sides.
inline tdho::QuenchSpec random_quench(std::mt19937& rng) {
  std::uniform_real_distribution<double> w(0.3, 3.0), frac(0.0, 0.9), wc(0.0, 1.5);
  const double c = wc(rng);
  tdho::SystemParams i{w(rng), w(rng), 0.0, c};
  tdho::SystemParams f{w(rng), w(rng), 0.0, c};
  i.J = frac(rng) * i.omega1 * i.omega2;
  f.J = frac(rng) * f.omega1 * f.omega2;
  return {i, f};
}

inline double random_time(std::mt19937& rng) { return std::uniform_real_distribution<double>(0.0, 30.0)(rng); }

}  // namespace testing
