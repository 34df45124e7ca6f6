#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>

namespace fs = std::filesystem;

namespace {

int run(const std::string& args) {
  const std::string cmd = std::string(TDHO_CLI) + " " + args + " >/dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

fs::path scratch(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / ("tdho_cli_test_" + name);
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void write(const fs::path& p, const std::string& s) { std::ofstream(p, std::ios::binary) << s; }

const std::string kQuench =
    "[quench.initial]\nomega1 = 1.0\nomega2 = 1.5\nJ = 1.1\n"
    "[quench.final]\nomega1 = 1.3\nomega2 = 1.8\nJ = 0.9\n";

}  // namespace

TEST_CASE("evolve writes the canonical CSV") {
  const fs::path dir = scratch("evolve");
  write(dir / "run.toml", "n_samples = 101\noutputs = [\"S_L\", \"U1\", \"h1\"]\n" + kQuench);
  CHECK(run("evolve --config " + (dir / "run.toml").string() + " --out " + (dir / "out").string() + " --svg") == 0);
  const std::string csv = slurp(dir / "out" / "dynamics.csv");
  CHECK(csv.rfind("t,S_L,S_von,negativity,U1,U2,alpha,gamma,diverged\n", 0) == 0);
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 102);
  CHECK(fs::exists(dir / "out" / "dynamics_aux.csv"));
  CHECK(fs::exists(dir / "out" / "S_L.svg"));
  CHECK(fs::exists(dir / "out" / "U1.svg"));
}

TEST_CASE("sweep writes one file per value") {
  const fs::path dir = scratch("sweep");
  write(dir / "run.toml", "n_samples = 51\n" + kQuench);
  CHECK(run("sweep --config " + (dir / "run.toml").string() + " --axis omega_c --values 0,0.5 --out " +
            (dir / "out").string()) == 0);
  CHECK(fs::exists(dir / "out" / "omega_c_0.csv"));
  CHECK(fs::exists(dir / "out" / "omega_c_0.5.csv"));
}

TEST_CASE("exit codes") {
  const fs::path dir = scratch("codes");
  write(dir / "bad.toml", "t_max = 3\n");
  write(dir / "ok.toml", "n_samples = 11\n" + kQuench);
  write(dir / "threshold.toml", "n_samples = 11\n[quench.initial]\nomega1=1\nomega2=1.5\nJ=1.1\n"
                                "[quench.final]\nomega1=1\nomega2=1\nJ=1\n");
  const std::string out = " --out " + (dir / "out").string();
  CHECK(run("evolve --config " + (dir / "bad.toml").string() + out) == 1);
  CHECK(run("evolve --config " + (dir / "missing.toml").string() + out) == 1);
  CHECK(run("evolve --config " + (dir / "threshold.toml").string() + out) == 1);
  CHECK(run("sweep --config " + (dir / "ok.toml").string() + " --axis nope --values 1" + out) == 1);
  CHECK(run("sweep --config " + (dir / "ok.toml").string() + " --axis J_f --values 1,x" + out) == 1);
  CHECK(run("sweep --config " + (dir / "ok.toml").string() + " --axis J_f --values 0.5,-1" + out) == 1);
  CHECK(run("figures --which 12" + out) == 1);
  CHECK(run("bogus") == 1);
  CHECK(run("--help") == 0);
  CHECK(run("figures --which 1" + out) == 0);
}
