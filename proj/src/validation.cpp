#include "tdho/validation.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <random>
#include <sstream>

#include <json.hpp>

#include "tdho/ermakov.hpp"
#include "tdho/observables.hpp"
#include "tdho/oracle.hpp"
#include "tdho/scenario.hpp"
#include "tdho/symplectic.hpp"
#include "tdho/vacuum.hpp"
#include "tdho/wigner.hpp"

namespace tdho {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

double rel(double a, double b) {
  const double scale = std::max({std::abs(a), std::abs(b), 1e-300});
  return std::abs(a - b) / scale;
}

Check bound(std::string name, double measured, double threshold, std::string detail = {}) {
  Check c;
  c.name = std::move(name);
  c.measured = measured;
  c.threshold = threshold;
  c.passed = std::isfinite(measured) && measured <= threshold;
  c.detail = std::move(detail);
  return c;
}

Check claim(std::string name, bool ok, double measured, std::string detail) {
  Check c;
  c.name = std::move(name);
  c.passed = ok;
  c.measured = measured;
  c.detail = std::move(detail);
  return c;
}

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

const SystemParams kRefInitial{1.0, 1.5, 1.1, 0.0};
const SystemParams kRefFinal{1.3, 1.8, 0.9, 0.0};

SystemParams with_wc(SystemParams p, double wc) {
  p.omega_c = wc;
  return p;
}

QuenchSpec reference_quench(double wc) { return {with_wc(kRefInitial, wc), with_wc(kRefFinal, wc)}; }

}  // namespace

bool ValidationReport::all_passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.passed; });
}

std::string ValidationReport::to_text() const {
  std::ostringstream os;
  for (const auto& c : checks) {
    os << (c.passed ? "PASS " : "FAIL ") << c.name << "  measured=" << fmt(c.measured);
    if (c.threshold != 0.0) os << " threshold=" << fmt(c.threshold);
    if (c.expected_difference) os << " (expected difference)";
    if (!c.detail.empty()) os << "  " << c.detail;
    os << '\n';
  }
  const auto failed = std::count_if(checks.begin(), checks.end(), [](const Check& c) { return !c.passed; });
  os << checks.size() - static_cast<std::size_t>(failed) << "/" << checks.size() << " checks passed in "
     << fmt(seconds) << " s\n";
  return os.str();
}

std::string ValidationReport::to_json() const {
  nlohmann::ordered_json j;
  j["passed"] = all_passed();
  j["seconds"] = seconds;
  auto arr = nlohmann::ordered_json::array();
  for (const auto& c : checks) {
    arr.push_back({{"name", c.name},
                   {"passed", c.passed},
                   {"measured", std::isfinite(c.measured) ? nlohmann::ordered_json(c.measured) : nullptr},
                   {"threshold", c.threshold},
                   {"expected_difference", c.expected_difference},
                   {"detail", c.detail}});
  }
  j["checks"] = std::move(arr);
  return j.dump(2) + "\n";
}

std::vector<QuenchSpec> validation_scenarios() {
  return {
      reference_quench(0.0),
      reference_quench(0.8),
      {with_wc(kRefInitial, 0.2), {1.3, 1.8, 2.3, 0.2}},
      {with_wc(kRefInitial, 0.1), {0.4, 3.0, 0.9, 0.1}},
      {{1.0, 1.0, 0.5, 0.5}, {1.2, 1.2, 0.3, 0.5}},
  };
}

std::vector<Check> check_ermakov() {
  const auto start = Clock::now();
  constexpr double dt = 1e-3;
  constexpr std::size_t n = 30001;
  std::vector<double> grid(n);
  for (std::size_t k = 0; k < n; ++k) grid[k] = dt * static_cast<double>(k);

  double worst_h = 0.0, worst_res = 0.0;
  for (double wc : {0.0, 0.3, 0.8, 1.5}) {
    const QuenchModes modes(reference_quench(wc));
    for (Mode m : {Mode::first, Mode::second}) {
      const double si = m == Mode::first ? modes.initial.sigma1_sq : modes.initial.sigma2_sq;
      const double sf = m == Mode::first ? modes.final.sigma1_sq : modes.final.sigma2_sq;
      const double final_sq = modes.final_sq(m);
      const auto rk = integrate_ermakov([final_sq](double) { return final_sq; }, modes.initial_sq(m), grid);
      for (std::size_t k = 0; k < n; ++k) {
        worst_h = std::max(worst_h, std::abs(rk[k].h - quench_h(si, sf, wc, grid[k]).h));
      }
      constexpr double eps = 1e-5;
      for (int k = 1; k <= 300; ++k) {
        const double t = 0.1 * k;
        const double hddot =
            (quench_h(si, sf, wc, t + eps).hdot - quench_h(si, sf, wc, t - eps).hdot) / (2.0 * eps);
        worst_res = std::max(worst_res, ermakov_residual(quench_h(si, sf, wc, t), hddot, final_sq));
      }
    }
  }
  const std::string took = "(" + fmt(seconds_since(start)) + " s)";
  return {bound("ermakov.closed_form_vs_rk4", worst_h, 1e-8, "max |h| error, dt = 1e-3 " + took),
          bound("ermakov.residual", worst_res, 1e-6, "finite-difference residual")};
}

std::vector<Check> check_identities(int n_times, unsigned seed) {
  const auto scenarios = validation_scenarios();
  std::mt19937 rng(seed);
  std::uniform_real_distribution<double> time(0.0, 30.0);

  double det_id = 0, d1 = 0, d12 = 0, pur = 0, mdet = 0, us1 = 0, us2 = 0;
  for (int k = 0; k < n_times; ++k) {
    const auto& q = scenarios[static_cast<std::size_t>(k) % scenarios.size()];
    const Snapshot s = evaluate_snapshot(q, time(rng));
    const auto& v = s.vacuum;
    const auto& kn = s.kernel;

    const double lhs = v.A1.real() * v.A2.real() - v.A12.real() * v.A12.real();
    det_id = std::max(det_id, rel(lhs, s.scale1.sigma_tilde * s.scale2.sigma_tilde));
    const std::complex<double> d1_expected = 2.0 * std::complex<double>(kn.alpha1 + kn.alpha3, -kn.alpha2);
    d1 = std::max(d1, std::abs(kn.D1 - d1_expected) / std::abs(d1_expected));
    d12 = std::max(d12, rel(kn.D12, 4.0 * kn.alpha3));
    pur = std::max(pur, rel(s.purity, (1.0 - kn.gamma) / (1.0 + kn.gamma)));

    const MarginalWigner m1 = marginal_wigner(s.wigner, Mode::first);
    const MarginalWigner m2 = marginal_wigner(s.wigner, Mode::second);
    mdet = std::max({mdet, rel(std::sqrt(m1.det()), s.purity), rel(std::sqrt(m2.det()), s.purity)});

    const SecondMoments mo1 = moments(m1), mo2 = moments(m2);
    us1 = std::max(us1, rel(uncertainty_product(s.S_L, s.wigner.gamma1).product, std::sqrt(mo1.x2 * mo1.p2)));
    us2 = std::max(us2, rel(uncertainty_product(s.S_L, s.wigner.gamma2).product, std::sqrt(mo2.x2 * mo2.p2)));
  }
  const std::string where = std::to_string(n_times) + " random times";
  return {bound("identity.ReA1ReA2-ReA12^2=s1s2", det_id, 1e-8, where),
          bound("identity.D1=2(alpha1+alpha3-i*alpha2)", d1, 1e-8, where),
          bound("identity.D12=4*alpha3", d12, 1e-8, where),
          bound("identity.purity=(1-gamma)/(1+gamma)", pur, 1e-8, where),
          bound("identity.marginal_det=purity", mdet, 1e-8, where),
          bound("identity.uncertainty_mode1_vs_moments", us1, 1e-8, where),
          bound("identity.uncertainty_mode2_vs_moments", us2, 1e-8, where)};
}

std::vector<Check> check_oracle(int n_times, unsigned seed) {
  const auto start = Clock::now();
  const auto scenarios = validation_scenarios();
  std::mt19937 rng(seed);
  std::normal_distribution<double> coord(0.0, 0.8);

  double pur = 0, spec = 0, chi = 0, wig = 0, mom = 0;
  for (int k = 0; k < n_times; ++k) {
    const auto& q = scenarios[static_cast<std::size_t>(k) % scenarios.size()];
    const double t = 30.0 * (k + 0.5) / n_times;
    const Snapshot s = evaluate_snapshot(q, t);

    pur = std::max(pur, std::abs(oracle::converged_grid_purity(s.vacuum) - s.purity));

    const auto grid = oracle::Grid1D::for_state(s.vacuum, 512);
    const auto kernel = oracle::discretize_kernel(s.vacuum, grid);
    const auto sp = oracle::kernel_spectrum(kernel, 6);
    const auto expected = schmidt_spectrum(s.kernel.gamma, 5);
    for (std::size_t n = 0; n <= 5; ++n) spec = std::max(spec, std::abs(sp.values[n] - expected[n]));

    std::vector<std::complex<double>> chi0(grid.n_points);
    for (std::size_t i = 0; i < grid.n_points; ++i) {
      chi0[i] = chi_eigenfunction(0, s.kernel.kappa, s.kernel.alpha2, grid.at(i));
    }
    chi = std::max(chi, 1.0 - oracle::eigenvector_overlap(sp, grid, 0, chi0));

    for (int p = 0; p < 20; ++p) {
      const std::array<double, 4> z{coord(rng), coord(rng), coord(rng), coord(rng)};
      wig = std::max(wig, std::abs(oracle::converged_numeric_wigner(s.vacuum, z) - wigner_value(s.wigner, z)));
    }

    const SecondMoments a = oracle::numeric_moments(s.vacuum, grid);
    const SecondMoments b = moments(marginal_wigner(s.wigner));
    mom = std::max({mom, std::abs(a.x2 - b.x2), std::abs(a.p2 - b.p2), std::abs(a.xp - b.xp)});
  }
  const std::string where = std::to_string(n_times) + " times";
  const std::string took = " (" + fmt(seconds_since(start)) + " s)";
  return {bound("oracle.grid_purity", pur, 1e-6, where),
          bound("oracle.kernel_spectrum", spec, 1e-4, where + ", n <= 5"),
          bound("oracle.ground_eigenfunction", chi, 1e-4, "1 - overlap, " + where),
          bound("oracle.wigner_pointwise", wig, 1e-5, "20 points at each of " + where),
          bound("oracle.marginal_moments", mom, 1e-6, where + took)};
}

std::vector<Check> check_covariance() {
  auto scenarios = validation_scenarios();
  scenarios.push_back({with_wc(kRefInitial, 0.2), {1.3, 1.8, 2.4, 0.2}});  // hyperbolic

  double cm_route = 0, sf_route = 0, nu_routes = 0, pure = 0, block = 0, heis = 0;
  int used = 0;
  for (const auto& q : scenarios) {
    for (int k = 0; k < 10; ++k) {
      const Snapshot s = evaluate_snapshot(q, 3.0 * k + 0.37);
      if (!(s.S_L < 0.99)) continue;
      ++used;
      const double by_sl = log_negativity_from_SL(s.S_L);
      const CovarianceMatrix cm = covariance_from_moments(s.wigner);
      const StandardForm sf = standard_form_alpha(s.phi, s.scale1, s.scale2);
      cm_route = std::max(cm_route, std::abs(log_negativity(cm) - by_sl));
      sf_route = std::max(sf_route, std::abs(log_negativity_from_alpha(sf) - by_sl));
      nu_routes = std::max({nu_routes, std::abs(ptranspose_min_eig(sf) - ptranspose_min_eig_general(sf)),
                            std::abs(ptranspose_min_eig(sf) - ptranspose_symplectic_eigenvalues(cm)[0])});
      for (double nu : symplectic_eigenvalues(cm)) pure = std::max(pure, std::abs(nu - 1.0));
      block = std::max(block, rel(std::sqrt(cm.block(0, 0).determinant()), 1.0 / s.purity));
      heis = std::max(heis, -uncertainty_min_eigenvalue(cm));
    }
  }
  const std::string where = std::to_string(used) + " samples with S_L < 0.99";
  return {bound("negativity.cm_vs_SL", cm_route, 1e-8, where),
          bound("negativity.standard_form_vs_SL", sf_route, 1e-8, where),
          bound("negativity.min_symplectic_eigenvalue_routes", nu_routes, 1e-8, where),
          bound("covariance.global_purity", pure, 1e-8, "max |nu - 1| of the full CM"),
          bound("covariance.reduced_det", block, 1e-8, "sqrt det V_A vs 1/purity"),
          bound("covariance.uncertainty_principle", heis, 1e-10, "-min eig(V + i Omega)")};
}

std::vector<Check> check_anchor() {
  const Snapshot s = evaluate_snapshot(reference_quench(0.0), 0.0);
  const DynamicsRecord r = make_record(reference_quench(0.0), 0.0);
  const NormalModes nm = normal_modes(kRefInitial);
  const double oracle_purity = oracle::converged_grid_purity(s.vacuum);
  const double alpha_sq = standard_form_alpha_sq(s.phi, s.scale1, s.scale2);

  auto near = [](std::string name, double got, double want, double tol) {
    return bound("anchor." + std::move(name), std::abs(got - want), tol, "value " + fmt(got) + ", reference " + fmt(want));
  };
  return {near("phi", s.phi, -0.52713, 1e-4),
          near("sigma1_sq", nm.sigma1_sq, 0.35984, 1e-5),
          near("sigma2_sq", nm.sigma2_sq, 2.89016, 1e-5),
          near("purity_oracle", oracle_purity, s.purity, 1e-6),
          near("S_L", r.S_L, 0.09623, 1e-4),
          near("gamma", r.gamma, 0.05057, 1e-4),
          near("S_von", r.S_von, 0.21085, 1e-4),
          near("negativity", r.negativity, 0.4576, 1e-3),
          near("U1", r.U1, 1.2244, 1e-3),
          near("alpha_sq", alpha_sq, 1.22431, 1e-4),
          near("alpha", r.alpha, 1.10653, 1e-4),
          near("alpha*purity", r.alpha * s.purity, 1.0, 1e-12),
          near("alpha1", s.kernel.alpha1, 0.35870, 5e-4),
          near("alpha3", s.kernel.alpha3, 0.04025, 5e-4),
          near("kappa", s.kernel.kappa, 0.79383, 5e-4)};
}

std::vector<Check> check_entropy_discrepancy() {
  const Snapshot s = evaluate_snapshot(reference_quench(0.0), 0.0);
  const auto grid = oracle::Grid1D::for_state(s.vacuum, 512);
  const auto sp = oracle::kernel_spectrum(oracle::discretize_kernel(s.vacuum, grid), 40);
  const double by_oracle = oracle::spectral_entropy(sp.values);
  const double by_gamma = von_neumann(s.kernel.gamma);
  const double by_sl = von_neumann_from_linear(s.S_L);

  Check gap = claim("entropy.closed_form_gap", std::abs(by_sl - by_gamma - 0.35) < 0.02, by_sl - by_gamma,
                    "S_von(S_L) " + fmt(by_sl) + " vs S_von(gamma) " + fmt(by_gamma) + ", expected about 0.35");
  gap.expected_difference = true;
  gap.threshold = 0.35;
  Check off = claim("entropy.closed_form_vs_oracle", std::abs(by_sl - by_oracle) > 1e-2, std::abs(by_sl - by_oracle),
                    "the linear-entropy closed form must disagree with the eigensolve");
  off.expected_difference = true;
  return {gap, bound("entropy.spectral_vs_oracle", std::abs(by_gamma - by_oracle), 1e-4, "oracle " + fmt(by_oracle)),
          off};
}

std::vector<Check> check_figure_claims() {
  std::vector<Check> out;
  const auto presets = figure_presets();
  std::vector<std::vector<SweepEntry>> runs;
  for (const auto& p : presets) runs.push_back(run_sweep(p.base, p.axis, p.values));

  auto max_of = [](const std::vector<DynamicsRecord>& rs, double t0, double t1) {
    double m = -1.0;
    for (const auto& r : rs) {
      if (r.t >= t0 && r.t <= t1) m = std::max(m, r.S_L);
    }
    return m;
  };
  auto range_of = [](const std::vector<DynamicsRecord>& rs) {
    auto [lo, hi] = std::minmax_element(rs.begin(), rs.end(),
                                        [](const auto& a, const auto& b) { return a.S_L < b.S_L; });
    return hi->S_L - lo->S_L;
  };

  {  // more field, less mixed
    std::string detail = "max S_L:";
    bool ok = true;
    double prev = 2.0;
    for (const auto& e : runs[0]) {
      const double m = e.records ? max_of(*e.records, 0, 30) : NAN;
      detail += " " + fmt(m);
      ok = ok && m < prev;
      prev = m;
    }
    out.push_back(claim("figures.mixedness_decreases_with_field", ok, prev, detail));
  }
  {  // amplitude grows with J_f; 2.4 runs away
    std::string detail = "S_L amplitude:";
    bool ok = true;
    double prev = -1.0;
    for (std::size_t i = 0; i + 1 < runs[1].size(); ++i) {
      const auto& e = runs[1][i];
      const double a = e.records ? range_of(*e.records) : NAN;
      detail += " " + fmt(a);
      ok = ok && a > prev;
      prev = a;
    }
    out.push_back(claim("figures.amplitude_increases_with_coupling", ok, prev, detail));

    const auto& last = runs[1].back();
    bool runaway = last.records.has_value();
    double end = NAN;
    if (runaway) {
      const auto& rs = *last.records;
      end = rs.back().S_L;
      const double w1 = max_of(rs, 0, 10), w2 = max_of(rs, 10, 20), w3 = max_of(rs, 20, 30);
      runaway = end > 0.99 && w1 < w2 && w2 < w3;
    }
    out.push_back(claim("figures.coupling_2.4_diverges", runaway, end, "S_L(30) and rising window maxima"));
  }
  {  // larger final omega2 gives less late-time mixing among oscillatory cases
    ScenarioConfig base = figure_preset(3).base;
    const std::vector<double> values{2.5, 3.0, 4.0};
    const auto entries = run_sweep(base, SweepAxis::omega_f2, values);
    std::string detail = "mean S_L on [20, 30]:";
    bool ok = true;
    double prev = 2.0;
    for (const auto& e : entries) {
      double sum = 0;
      int n = 0;
      if (e.records) {
        for (const auto& r : *e.records) {
          if (r.t >= 20.0) sum += r.S_L, ++n;
        }
      }
      const double mean = n ? sum / n : NAN;
      detail += " " + fmt(mean);
      ok = ok && mean < prev;
      prev = mean;
    }
    out.push_back(claim("figures.late_mixedness_decreases_with_frequency", ok, prev, detail));
  }
  {  // hyperbolic threshold and its removal by the field
    auto lowest = [](double J, double wc) {
      const NormalModes nm = normal_modes({1.3, 1.8, J, 0.0});
      return std::min(nm.sigma1_sq, nm.sigma2_sq) + wc * wc;
    };
    double lo = 0.9, hi = 3.0;
    for (int i = 0; i < 200 && hi - lo > 1e-15; ++i) {
      const double mid = 0.5 * (lo + hi);
      (lowest(mid, 0.0) > 0.0 ? lo : hi) = mid;
    }
    const double j_crit = 0.5 * (lo + hi);
    out.push_back(bound("figures.critical_coupling", std::abs(j_crit - 1.3 * 1.8), 1e-10,
                        "J_crit " + fmt(j_crit) + " vs 2.34"));

    const double wc_star = std::sqrt(-lowest(2.4, 0.0));
    auto hyperbolic = [](double wc) {
      const QuenchModes m(QuenchSpec(with_wc(kRefInitial, wc), {1.3, 1.8, 2.4, wc}));
      return m.hyperbolic(Mode::first) || m.hyperbolic(Mode::second);
    };
    const bool ok = std::abs(wc_star - 0.2391) < 1e-3 && hyperbolic(wc_star - 1e-3) && !hyperbolic(wc_star + 1e-3);
    out.push_back(claim("figures.field_restores_oscillation", ok, wc_star,
                        "omega_c threshold for J_f = 2.4, reference 0.2391 +- 1e-3"));

    const auto& e233 = runs[4].back();
    bool bounded = e233.records.has_value();
    if (bounded) {
      for (const auto& r : *e233.records) bounded = bounded && !r.diverged && r.S_L < 0.99;
    }
    out.push_back(claim("figures.coupling_2.33_stays_bounded", bounded, lowest(2.33, 0.2),
                        "sigma_f1^2 + omega_c^2 of J_f = 2.33"));
  }
  {  // same turning points for S_L, S_von and negativity; Heisenberg bound
    auto maxima = [](const std::vector<DynamicsRecord>& rs, auto get) {
      std::vector<std::size_t> idx;
      for (std::size_t i = 1; i + 1 < rs.size(); ++i) {
        if (rs[i - 1].diverged || rs[i].diverged || rs[i + 1].diverged) continue;
        if (get(rs[i]) > get(rs[i - 1]) && get(rs[i]) >= get(rs[i + 1])) idx.push_back(i);
      }
      return idx;
    };
    auto aligned = [](const std::vector<std::size_t>& a, const std::vector<std::size_t>& b) {
      if (a.size() != b.size()) return false;
      for (std::size_t i = 0; i < a.size(); ++i) {
        if ((a[i] > b[i] ? a[i] - b[i] : b[i] - a[i]) > 1) return false;
      }
      return true;
    };
    bool ok = true;
    std::size_t n_max = 0;
    double min_product = INFINITY;
    for (const auto& sweep : runs) {
      for (const auto& e : sweep) {
        if (!e.records) continue;
        const auto& rs = *e.records;
        const auto a = maxima(rs, [](const auto& r) { return r.S_L; });
        const auto b = maxima(rs, [](const auto& r) { return r.S_von; });
        const auto c = maxima(rs, [](const auto& r) { return r.negativity; });
        ok = ok && aligned(a, b) && aligned(a, c);
        n_max += a.size();
        for (const auto& r : rs) {
          if (r.diverged) continue;
          min_product = std::min({min_product, std::sqrt(r.U1) / 2.0, std::sqrt(r.U2) / 2.0});
        }
      }
    }
    out.push_back(claim("figures.maxima_aligned", ok, static_cast<double>(n_max),
                        "local maxima of S_L matched in S_von and negativity"));
    out.push_back(claim("figures.uncertainty_at_least_half", min_product >= 0.5 - 1e-12, min_product,
                        "smallest dx dp over all figure runs"));
  }
  return out;
}

ValidationReport run_validate() {
  const auto start = Clock::now();
  ValidationReport report;
  for (auto group : {check_ermakov, check_anchor, check_entropy_discrepancy, check_covariance, check_figure_claims}) {
    auto part = group();
    report.checks.insert(report.checks.end(), part.begin(), part.end());
  }
  for (auto& part : {check_identities(), check_oracle()}) {
    report.checks.insert(report.checks.end(), part.begin(), part.end());
  }
  report.seconds = seconds_since(start);
  return report;
}

}  // namespace tdho
