#pragma once

// Self-check suite: every closed form against the brute-force oracle or an
// independent route, plus the reference-point values and the qualitative
// claims about the quench figures.

#include <string>
#include <vector>

#include "tdho/params.hpp"

namespace tdho {

struct Check {
  std::string name;
  bool passed = false;
  double measured = 0.0;   // worst error, or the measured quantity
  double threshold = 0.0;  // pass bound for `measured`
  /// Set for checks that document a known gap: `measured` is the size of the
  /// gap and the check passes when the gap is there.
  bool expected_difference = false;
  std::string detail;
};

struct ValidationReport {
  std::vector<Check> checks;
  double seconds = 0.0;

  bool all_passed() const;
  std::string to_text() const;
  std::string to_json() const;
};

/// The five scenarios the identity and oracle checks sample from.
std::vector<QuenchSpec> validation_scenarios();

/// Closed-form scale functions vs RK4 (step 1e-3 on [0, 30]) and the
/// finite-difference Ermakov residual, for the reference quench at
/// omega_c in {0, 0.3, 0.8, 1.5}.
std::vector<Check> check_ermakov();
/// Algebraic identities at n_times random times spread over the scenarios.
std::vector<Check> check_identities(int n_times = 100, unsigned seed = 20240601u);
/// Grid purity, kernel spectrum, ground eigenfunction, numeric Wigner and
/// quadrature moments at n_times sampled times.
std::vector<Check> check_oracle(int n_times = 10, unsigned seed = 7u);
/// Logarithmic negativity by the covariance, standard-form and S_L routes,
/// plus global purity and the uncertainty principle of the full CM.
std::vector<Check> check_covariance();
/// Values at t = 0 of the reference quench with omega_c = 0.
std::vector<Check> check_anchor();
/// Gap between the entanglement entropy of the geometric spectrum and the
/// linear-entropy closed form, arbitrated by the oracle eigensolve.
std::vector<Check> check_entropy_discrepancy();
/// Ordering and threshold claims about the quench figures.
std::vector<Check> check_figure_claims();

/// Everything above.
ValidationReport run_validate();

}  // namespace tdho
