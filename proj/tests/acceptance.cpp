// One PASS/FAIL line per acceptance criterion; exit status 1 if any fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <vector>

#include "tdho/scenario.hpp"
#include "tdho/validation.hpp"

namespace fs = std::filesystem;
using namespace tdho;
using Clock = std::chrono::steady_clock;

namespace {

int failures = 0;

void report(const std::string& id, bool ok, const std::string& detail) {
  std::printf("%s criterion %s: %s\n", ok ? "PASS" : "FAIL", id.c_str(), detail.c_str());
  std::fflush(stdout);
  if (!ok) ++failures;
}

double since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

std::string num(double v) {
  char b[32];
  std::snprintf(b, sizeof b, "%.3g", v);
  return b;
}

bool all_pass(const std::vector<Check>& cs, std::string& detail) {
  bool ok = true;
  for (const auto& c : cs) {
    if (!c.passed) {
      ok = false;
      detail += " [failed " + c.name + " measured " + num(c.measured) + "]";
    }
  }
  return ok;
}

std::string worst(const std::vector<Check>& cs) {
  std::string s;
  for (const auto& c : cs) s += (s.empty() ? "" : ", ") + c.name + " " + num(c.measured);
  return s;
}

const Check& find(const std::vector<Check>& cs, const std::string& name) {
  for (const auto& c : cs) {
    if (c.name == name) return c;
  }
  std::fprintf(stderr, "missing check %s\n", name.c_str());
  std::exit(2);
}

std::map<std::string, std::string> csv_tree(const fs::path& root) {
  std::map<std::string, std::string> out;
  for (const auto& e : fs::recursive_directory_iterator(root)) {
    if (e.path().extension() != ".csv") continue;
    std::ifstream in(e.path(), std::ios::binary);
    std::ostringstream os;
    os << in.rdbuf();
    out[fs::relative(e.path(), root).string()] = os.str();
  }
  return out;
}

int run_cli(const std::string& args) {
  const int status = std::system((std::string(TDHO_CLI) + " " + args).c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

}  // namespace

int main() {
  {  // 1
    const auto t0 = Clock::now();
    const auto cs = check_ermakov();
    const double secs = since(t0);
    std::string detail = worst(cs) + ", " + num(secs) + " s (limit 5 s)";
    const bool ok = all_pass(cs, detail) && secs < 5.0;
    report("1 (Ermakov closed form vs RK4, residual)", ok, detail);
  }
  {  // 2
    const auto cs = check_identities(100);
    std::string detail = "100 random times over 5 scenarios, worst relative error " + [&] {
      double w = 0;
      for (const auto& c : cs) w = std::max(w, c.measured);
      return num(w);
    }() + " (limit 1e-8)";
    report("2 (identity suite)", all_pass(cs, detail), detail);
  }
  {  // 3
    const auto t0 = Clock::now();
    const auto cs = check_oracle(10);
    const double secs = since(t0);
    std::string detail = worst(cs) + ", " + num(secs) + " s (limit 60 s)";
    const bool ok = all_pass(cs, detail) && secs < 60.0;
    report("3 (oracle equivalence)", ok, detail);
  }
  {  // 4
    const auto cov = check_covariance();
    const auto anchor = check_anchor();
    std::vector<Check> cs{find(cov, "negativity.cm_vs_SL"), find(cov, "negativity.standard_form_vs_SL")};
    for (const char* n : {"anchor.S_L", "anchor.gamma", "anchor.S_von", "anchor.negativity", "anchor.U1"}) {
      cs.push_back(find(anchor, n));
    }
    // tolerances pinned here as well, independent of the suite's own bounds
    const std::map<std::string, double> limits{{"negativity.cm_vs_SL", 1e-8}, {"negativity.standard_form_vs_SL", 1e-8},
                                               {"anchor.S_L", 1e-4},          {"anchor.gamma", 1e-4},
                                               {"anchor.S_von", 1e-4},        {"anchor.negativity", 1e-3},
                                               {"anchor.U1", 1e-3}};
    bool ok = true;
    std::string detail;
    for (const auto& c : cs) {
      ok = ok && c.passed && c.measured < limits.at(c.name);
      detail += (detail.empty() ? "" : ", ") + c.name + " " + num(c.measured);
    }
    report("4 (negativity routes and reference values)", ok, detail);
  }
  {  // 5
    const auto cs = check_entropy_discrepancy();
    const Check& gap = find(cs, "entropy.closed_form_gap");
    std::string detail = "gap " + num(gap.measured) + " (expected about 0.35), " + worst(cs);
    const bool ok = all_pass(cs, detail) && std::abs(gap.measured - 0.35) < 0.02;
    report("5 (documented entropy discrepancy)", ok, detail);
  }
  {  // 6
    const auto cs = check_figure_claims();
    const auto line = [&](const std::string& id, std::vector<std::string> names) {
      bool ok = true;
      std::string detail;
      for (const auto& n : names) {
        const Check& c = find(cs, n);
        ok = ok && c.passed;
        detail += (detail.empty() ? "" : "; ") + c.detail + " -> " + num(c.measured);
      }
      report(id, ok, detail);
    };
    line("6a (field purifies)", {"figures.mixedness_decreases_with_field"});
    line("6b (coupling amplifies, 2.4 diverges)",
         {"figures.amplitude_increases_with_coupling", "figures.coupling_2.4_diverges"});
    line("6c (critical coupling, field restoration)",
         {"figures.critical_coupling", "figures.field_restores_oscillation"});
    line("6d (maxima aligned)", {"figures.maxima_aligned"});
    line("6e (uncertainty >= 1/2)", {"figures.uncertainty_at_least_half"});
  }
  {  // 7
    const fs::path root = fs::temp_directory_path() / "tdho_acceptance_figures";
    fs::remove_all(root);
    const auto t0 = Clock::now();
    const int a = run_cli("figures --which all --out " + (root / "a").string());
    const double secs = since(t0);
    const int b = run_cli("figures --which all --out " + (root / "b").string());
    const int c = run_cli("figures --which all --jobs 1 --out " + (root / "c").string());
    const auto ta = csv_tree(root / "a");
    const bool same = !ta.empty() && ta == csv_tree(root / "b") && ta == csv_tree(root / "c");
    const bool ok = a == 0 && b == 0 && c == 0 && same && secs < 30.0;
    report("7 (figure determinism)", ok,
           std::to_string(ta.size()) + " CSV files, byte-identical " + (same ? "yes" : "no") +
               " across runs and worker counts, " + num(secs) + " s per run (limit 30 s)");
    fs::remove_all(root);
  }
  std::printf("%s\n", failures ? "ACCEPTANCE FAILED" : "ALL ACCEPTANCE CRITERIA PASSED");
  return failures ? 1 : 0;
}
