#include "tdho/config.hpp"

#include <fstream>
#include <set>
#include <sstream>

#define TOML_EXCEPTIONS 1
#include <toml.hpp>

#include "tdho/error.hpp"

namespace tdho {

namespace {

[[noreturn]] void fail(std::string_view source, const std::string& what) {
  throw ConfigError(std::string(source) + ": " + what);
}

void reject_unknown(const toml::table& tbl, const std::set<std::string_view>& allowed, std::string_view where,
                    std::string_view source) {
  for (const auto& [key, _] : tbl) {
    if (!allowed.contains(key.str())) fail(source, "unknown key '" + std::string(where) + std::string(key.str()) + "'");
  }
}

double number(const toml::node_view<const toml::node>& node, const std::string& name, std::string_view source) {
  if (!node) fail(source, "missing key '" + name + "'");
  if (auto v = node.value<double>(); v && (node.is_floating_point() || node.is_integer())) return *v;
  fail(source, "'" + name + "' must be a number");
}

SystemParams side(const toml::table& quench, std::string_view which, double omega_c, std::string_view source) {
  const std::string prefix = "quench." + std::string(which) + ".";
  const auto* tbl = quench[which].as_table();
  if (!tbl) fail(source, "missing table [quench." + std::string(which) + "]");
  reject_unknown(*tbl, {"omega1", "omega2", "J"}, prefix, source);
  const toml::node_view<const toml::node> view{tbl};
  return {number(view["omega1"], prefix + "omega1", source), number(view["omega2"], prefix + "omega2", source),
          number(view["J"], prefix + "J", source), omega_c};
}

}  // namespace

ScenarioConfig parse_config(std::string_view text, std::string_view source) {
  toml::table root;
  try {
    root = toml::parse(text, source);
  } catch (const toml::parse_error& e) {
    std::ostringstream os;
    os << e.description() << " (line " << e.source().begin.line << ")";
    fail(source, os.str());
  }
  reject_unknown(root, {"quench", "omega_c", "t_max", "n_samples", "outputs", "entropy_units"}, "", source);

  const toml::node_view<const toml::node> view{root};
  ScenarioConfig cfg;
  const double omega_c = view["omega_c"] ? number(view["omega_c"], "omega_c", source) : 0.0;

  const auto* quench = root["quench"].as_table();
  if (!quench) fail(source, "missing table [quench]");
  reject_unknown(*quench, {"initial", "final"}, "quench.", source);
  try {
    cfg.quench = QuenchSpec(side(*quench, "initial", omega_c, source), side(*quench, "final", omega_c, source));
  } catch (const DomainError& e) {
    fail(source, e.what());
  }

  if (view["t_max"]) cfg.t_max = number(view["t_max"], "t_max", source);
  if (view["n_samples"]) {
    auto n = view["n_samples"].value<std::int64_t>();
    if (!n || !view["n_samples"].is_integer()) fail(source, "'n_samples' must be an integer");
    if (*n < 2) fail(source, "n_samples must be at least 2");
    cfg.n_samples = static_cast<std::size_t>(*n);
  }
  if (view["outputs"]) {
    const auto* arr = view["outputs"].as_array();
    if (!arr) fail(source, "'outputs' must be an array of strings");
    cfg.outputs.clear();
    for (const auto& el : *arr) {
      auto s = el.value<std::string>();
      if (!s) fail(source, "'outputs' must be an array of strings");
      cfg.outputs.push_back(*s);
    }
  }
  if (view["entropy_units"]) {
    auto u = view["entropy_units"].value<std::string>();
    if (u == "nats") cfg.entropy_units = EntropyUnits::nats;
    else if (u == "bits") cfg.entropy_units = EntropyUnits::bits;
    else fail(source, "entropy_units must be \"nats\" or \"bits\"");
  }

  try {
    cfg.validate();
  } catch (const ConfigError& e) {
    fail(source, e.what());
  }
  return cfg;
}

ScenarioConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("cannot read config file " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_config(buf.str(), path.string());
}

}  // namespace tdho
