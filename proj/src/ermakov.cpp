#include "tdho/ermakov.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <string>

#include "tdho/error.hpp"

namespace tdho {

namespace {

constexpr double kThresholdTol = 1e-12;
constexpr double kMinScale = 1e-9;

}  // namespace

ModeScale mode_scale(const ErmakovState& s) {
  ModeScale m;
  m.sigma_tilde = std::sqrt(s.sigma0_sq) / (s.h * s.h);
  m.hdot_over_h = s.hdot / s.h;
  m.rho = {m.sigma_tilde, -m.hdot_over_h};
  return m;
}

ErmakovState quench_h(double sigma_i_sq, double sigma_f_sq, double omega_c, double t) {
  const double wc2 = omega_c * omega_c;
  const double z0 = sigma_i_sq + wc2;
  const double z = sigma_f_sq + wc2;
  if (!(z0 > 0.0)) {
    throw DomainError("initial mode frequency squared must be positive (sigma_i^2 + omega_c^2 = " +
                      std::to_string(z0) + ")");
  }
  if (std::abs(z) <= kThresholdTol) {
    throw DomainError("final mode sits on the oscillatory/hyperbolic threshold");
  }

  ErmakovState out;
  out.sigma0_sq = z0;
  if (t == 0.0) return out;

  const double a = (sigma_f_sq - sigma_i_sq) / (2.0 * z);
  double h_sq = 0.0;
  double dh_sq = 0.0;
  if (z > 0.0) {
    const double w = std::sqrt(z);
    const double s = std::sin(w * t);
    h_sq = 1.0 - 2.0 * a * s * s;
    dh_sq = -2.0 * a * w * std::sin(2.0 * w * t);
  } else {
    const double w = std::sqrt(-z);
    const double s = std::sinh(w * t);
    h_sq = 1.0 + 2.0 * a * s * s;
    dh_sq = 2.0 * a * w * std::sinh(2.0 * w * t);
  }
  out.h = std::sqrt(h_sq);
  out.hdot = dh_sq / (2.0 * out.h);
  return out;
}

double quench_h_sq_floor(double sigma_i_sq, double sigma_f_sq, double omega_c) {
  const double wc2 = omega_c * omega_c;
  return (std::min(sigma_i_sq, sigma_f_sq) + wc2) / (sigma_f_sq + wc2);
}

std::vector<ErmakovState> integrate_ermakov(const std::function<double(double)>& sigma_sq,
                                            double sigma0_sq, std::span<const double> t_grid) {
  if (t_grid.empty() || t_grid.front() != 0.0) {
    throw DomainError("Ermakov time grid must start at t = 0");
  }
  for (std::size_t i = 1; i < t_grid.size(); ++i) {
    if (!(t_grid[i] > t_grid[i - 1])) throw DomainError("Ermakov time grid must be strictly increasing");
  }

  using Y = std::array<double, 2>;  // (h, hdot)
  auto rhs = [&](double t, const Y& y) -> Y {
    const double h = y[0];
    return {y[1], sigma0_sq / (h * h * h) - sigma_sq(t) * h};
  };

  std::vector<ErmakovState> out;
  out.reserve(t_grid.size());
  Y y{1.0, 0.0};
  out.push_back({y[0], y[1], sigma0_sq});

  for (std::size_t i = 1; i < t_grid.size(); ++i) {
    const double t = t_grid[i - 1];
    const double dt = t_grid[i] - t;
    const Y k1 = rhs(t, y);
    const Y k2 = rhs(t + 0.5 * dt, {y[0] + 0.5 * dt * k1[0], y[1] + 0.5 * dt * k1[1]});
    const Y k3 = rhs(t + 0.5 * dt, {y[0] + 0.5 * dt * k2[0], y[1] + 0.5 * dt * k2[1]});
    const Y k4 = rhs(t + dt, {y[0] + dt * k3[0], y[1] + dt * k3[1]});
    for (int c = 0; c < 2; ++c) y[c] += dt / 6.0 * (k1[c] + 2.0 * k2[c] + 2.0 * k3[c] + k4[c]);

    if (!(y[0] >= kMinScale)) {
      throw NumericError("Ermakov scale collapsed (h < 1e-9) at t = " + std::to_string(t_grid[i]));
    }
    out.push_back({y[0], y[1], sigma0_sq});
  }
  return out;
}

double ermakov_residual(const ErmakovState& state, double hddot_estimate, double sigma_sq) {
  const double h = state.h;
  return std::abs(hddot_estimate + sigma_sq * h - state.sigma0_sq / (h * h * h));
}

}  // namespace tdho
