/*
   Copyright 2026 The polyshard-lab Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include "polyshard/experiment.hpp"

#include <fstream>
#include <memory>
#include <ostream>
#include <set>
#include <sstream>

#include <nlohmann/json.hpp>

#include "polyshard/errors.hpp"
#include "polyshard/threshold.hpp"

namespace polyshard {

using nlohmann::json;

const char* to_string(Scenario s) {
  switch (s) {
    case Scenario::kHonestEpoch:
      return "honest_epoch";
    case Scenario::kGarbageAttack:
      return "garbage_attack";
    case Scenario::kDiscrepancyAttack:
      return "discrepancy_attack";
    case Scenario::kThresholdSweep:
      return "threshold_sweep";
    case Scenario::kBoundTable:
      return "bound_table";
  }
  return "?";
}

Scenario parse_scenario(const std::string& s) {
  for (auto sc : {Scenario::kHonestEpoch, Scenario::kGarbageAttack, Scenario::kDiscrepancyAttack,
                  Scenario::kThresholdSweep, Scenario::kBoundTable}) {
    if (s == to_string(sc)) return sc;
  }
  throw ConfigError("unknown scenario '" + s + "'");
}

namespace {

void reject_unknown(const json& obj, const std::set<std::string>& allowed, const std::string& where) {
  if (!obj.is_object()) throw ConfigError(where + " must be an object");
  for (const auto& [key, _] : obj.items()) {
    if (!allowed.count(key)) throw ConfigError("unknown key '" + key + "' in " + where);
  }
}

template <typename T>
T get(const json& obj, const char* key, const std::string& where) {
  try {
    return obj.at(key).get<T>();
  } catch (const json::exception& e) {
    throw ConfigError(where + "." + key + ": " + e.what());
  }
}

std::size_t get_count(const json& obj, const char* key, const std::string& where) {
  const auto& v = obj.at(key);
  if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<std::int64_t>() >= 0)) {
    throw ConfigError(where + "." + key + " must be a non-negative integer");
  }
  return v.get<std::size_t>();
}

Range get_range(const json& obj, const char* key, const std::string& where) {
  const auto& v = obj.at(key);
  if (!v.is_array() || v.size() != 2 || !v[0].is_number_integer() || !v[1].is_number_integer()) {
    throw ConfigError(where + "." + key + " must be [lo, hi]");
  }
  Range r{v[0].get<std::int64_t>(), v[1].get<std::int64_t>()};
  if (r.first > r.second) throw ConfigError(where + "." + key + " is empty");
  return r;
}

const char* to_string(ProposerKind k) { return k == ProposerKind::kValid ? "valid" : "invalid"; }
const char* to_string(FailurePolicy p) {
  return p == FailurePolicy::kStall ? "stall" : "append_own_view";
}
const char* to_string(ForgeMode m) {
  return m == ForgeMode::kValidFirst ? "valid_first" : "all_random";
}

void validate(const ExperimentConfig& c) {
  if (c.K < 1 || c.N < 1 || c.d < 1) throw ConfigError("N, K and d must be positive");
  if (c.v < 1) throw ConfigError("v must be at least 1");
  if (c.seeds.empty()) throw ConfigError("at least one seed is required");
  if (c.gamma && !(*c.gamma > 0.0 && *c.gamma <= 1.0)) throw ConfigError("gamma must lie in (0, 1]");
  try {
    Field f(c.p);
    (void)f;
  } catch (const std::invalid_argument& e) {
    throw ConfigError(e.what());
  }
  const std::size_t bp = c.effective_beta_prime();
  if (bp > c.K) throw ConfigError("beta' cannot exceed K");

  switch (c.scenario) {
    case Scenario::kHonestEpoch:
    case Scenario::kGarbageAttack:
      if (c.beta > c.N) throw ConfigError("beta cannot exceed N");
      if (c.epochs < 1) throw ConfigError("epochs must be at least 1");
      break;
    case Scenario::kDiscrepancyAttack:
      if (c.beta > c.N) throw ConfigError("beta cannot exceed N");
      if (c.epochs < 1) throw ConfigError("epochs must be at least 1");
      if (bp < 1) throw ConfigError("discrepancy_attack needs beta' >= 1");
      if (c.beta < bp) throw ConfigError("adversarial producers are nodes: need beta >= beta'");
      break;
    case Scenario::kThresholdSweep:
      if (c.sweep_min > c.sweep_max) throw ConfigError("sweep range is empty");
      break;
    case Scenario::kBoundTable:
      if (c.grid_v.first < 1 || c.grid_d.first < 1 || c.grid_K.first < 1 ||
          c.grid_beta_prime.first < 0 || c.grid_beta.first < 0) {
        throw ConfigError("grid ranges out of domain");
      }
      break;
  }
}

}  // namespace

std::size_t ExperimentConfig::effective_beta_prime() const {
  if (beta_prime) return *beta_prime;
  if (gamma) return shard_capture(beta, *gamma, N, K);
  return 0;
}

std::string ExperimentConfig::echo() const {
  json j;
  j["scenario"] = to_string(scenario);
  j["params"] = {{"N", N}, {"K", K}, {"d", d}, {"beta", beta},
                 {"beta_prime", effective_beta_prime()}, {"v", v}, {"p", p}, {"factor", factor}};
  if (gamma) j["params"]["gamma"] = *gamma;
  j["seeds"] = seeds;
  j["epochs"] = epochs;
  j["proposer"] = to_string(proposer);
  j["on_failure"] = to_string(on_failure);
  j["adversary"] = {{"assignment", polyshard::to_string(assignment)},
                    {"broadcast", polyshard::to_string(broadcast)},
                    {"forge", to_string(forge)}};
  j["sweep"] = {{"n_min", sweep_min}, {"n_max", sweep_max}, {"strict", sweep_strict}};
  j["grid"] = {{"v", {grid_v.first, grid_v.second}},
               {"beta_prime", {grid_beta_prime.first, grid_beta_prime.second}},
               {"d", {grid_d.first, grid_d.second}},
               {"K", {grid_K.first, grid_K.second}},
               {"beta", {grid_beta.first, grid_beta.second}}};
  return j.dump();
}

ExperimentConfig parse_config(const std::string& json_text) {
  json root;
  try {
    root = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw ConfigError(std::string("config is not valid JSON: ") + e.what());
  }
  reject_unknown(root, {"scenario", "params", "seeds", "epochs", "proposer", "on_failure",
                        "adversary", "sweep", "grid", "output"},
                 "config");

  ExperimentConfig c;
  if (!root.contains("scenario")) throw ConfigError("config.scenario is required");
  c.scenario = parse_scenario(get<std::string>(root, "scenario", "config"));

  if (root.contains("params")) {
    const auto& p = root["params"];
    reject_unknown(p, {"N", "K", "d", "beta", "beta_prime", "v", "gamma", "p", "factor"}, "params");
    if (p.contains("N")) c.N = get_count(p, "N", "params");
    if (p.contains("K")) c.K = get_count(p, "K", "params");
    if (p.contains("d")) c.d = get_count(p, "d", "params");
    if (p.contains("beta")) c.beta = get_count(p, "beta", "params");
    if (p.contains("beta_prime")) c.beta_prime = get_count(p, "beta_prime", "params");
    if (p.contains("v")) c.v = static_cast<std::uint32_t>(get_count(p, "v", "params"));
    if (p.contains("gamma")) c.gamma = get<double>(p, "gamma", "params");
    if (p.contains("p")) c.p = get_count(p, "p", "params");
    if (p.contains("factor")) c.factor = get_count(p, "factor", "params");
  }
  if (root.contains("seeds")) {
    const auto& s = root["seeds"];
    if (!s.is_array()) throw ConfigError("config.seeds must be an array");
    c.seeds.clear();
    for (const auto& x : s) {
      if (!x.is_number_unsigned()) throw ConfigError("seeds must be non-negative integers");
      c.seeds.push_back(x.get<std::uint64_t>());
    }
  }
  if (root.contains("epochs")) c.epochs = get_count(root, "epochs", "config");
  if (root.contains("proposer")) {
    const auto s = get<std::string>(root, "proposer", "config");
    if (s == "valid") c.proposer = ProposerKind::kValid;
    else if (s == "invalid") c.proposer = ProposerKind::kInvalid;
    else throw ConfigError("unknown proposer '" + s + "'");
  }
  if (root.contains("on_failure")) {
    const auto s = get<std::string>(root, "on_failure", "config");
    if (s == "stall") c.on_failure = FailurePolicy::kStall;
    else if (s == "append_own_view") c.on_failure = FailurePolicy::kAppendOwnView;
    else throw ConfigError("unknown on_failure policy '" + s + "'");
  }
  if (root.contains("adversary")) {
    const auto& a = root["adversary"];
    reject_unknown(a, {"assignment", "broadcast", "forge"}, "adversary");
    try {
      if (a.contains("assignment")) {
        c.assignment = parse_assignment_strategy(get<std::string>(a, "assignment", "adversary"));
        if (c.assignment == AssignmentStrategy::kTargeted) {
          throw ConfigError("targeted assignment is only available through the library API");
        }
      }
      if (a.contains("broadcast")) {
        c.broadcast = parse_broadcast_strategy(get<std::string>(a, "broadcast", "adversary"));
      }
    } catch (const std::invalid_argument& e) {
      throw ConfigError(e.what());
    }
    if (a.contains("forge")) {
      const auto s = get<std::string>(a, "forge", "adversary");
      if (s == "valid_first") c.forge = ForgeMode::kValidFirst;
      else if (s == "all_random") c.forge = ForgeMode::kAllRandom;
      else throw ConfigError("unknown forge mode '" + s + "'");
    }
  }
  if (root.contains("sweep")) {
    const auto& s = root["sweep"];
    reject_unknown(s, {"n_min", "n_max", "strict"}, "sweep");
    if (s.contains("n_min")) c.sweep_min = get_count(s, "n_min", "sweep");
    if (s.contains("n_max")) c.sweep_max = get_count(s, "n_max", "sweep");
    if (s.contains("strict")) c.sweep_strict = get<bool>(s, "strict", "sweep");
  }
  if (root.contains("grid")) {
    const auto& g = root["grid"];
    reject_unknown(g, {"v", "beta_prime", "d", "K", "beta"}, "grid");
    if (g.contains("v")) c.grid_v = get_range(g, "v", "grid");
    if (g.contains("beta_prime")) c.grid_beta_prime = get_range(g, "beta_prime", "grid");
    if (g.contains("d")) c.grid_d = get_range(g, "d", "grid");
    if (g.contains("K")) c.grid_K = get_range(g, "K", "grid");
    if (g.contains("beta")) c.grid_beta = get_range(g, "beta", "grid");
  }
  if (root.contains("output")) {
    const auto& o = root["output"];
    reject_unknown(o, {"dir", "epochs", "sweep", "bounds"}, "output");
    if (o.contains("dir")) c.out_dir = get<std::string>(o, "dir", "output");
    if (o.contains("epochs")) c.epochs_file = get<std::string>(o, "epochs", "output");
    if (o.contains("sweep")) c.sweep_file = get<std::string>(o, "sweep", "output");
    if (o.contains("bounds")) c.bounds_file = get<std::string>(o, "bounds", "output");
  }
  validate(c);
  return c;
}

ExperimentConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config " + path.string());
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_config(buf.str());
}

Simulation make_simulation(const ExperimentConfig& cfg) {
  const Field field(cfg.p);
  SimConfig sim{EncodingParams::defaults(field, cfg.K, cfg.N, cfg.d),
                std::make_shared<ShiftedPower>(cfg.d, field(cfg.factor)),
                AcceptSet::zero(), cfg.proposer, cfg.on_failure};

  AdversaryConfig adv;
  for (std::size_t n = 0; n < cfg.beta; ++n) adv.adversarial_nodes.push_back(n);
  adv.broadcast = cfg.broadcast;
  adv.assignment = cfg.assignment;
  adv.forge = cfg.forge;
  if (cfg.scenario == Scenario::kDiscrepancyAttack) {
    adv.v = cfg.v;
    adv.adversarial_producers =
        default_producers(adv.adversarial_nodes, cfg.effective_beta_prime(), cfg.K);
  }
  return Simulation(std::move(sim), std::move(adv));
}

namespace {

std::filesystem::path write_epochs(const ExperimentConfig& cfg) {
  const auto path = cfg.out_dir / cfg.epochs_file;
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << json{{"config", json::parse(cfg.echo())}}.dump() << '\n';
  for (auto seed : cfg.seeds) {
    Simulation sim = make_simulation(cfg);
    for (std::size_t e = 0; e < cfg.epochs; ++e) out << to_json_line(sim.run_epoch(seed)) << '\n';
  }
  return path;
}

std::filesystem::path write_sweep(const ExperimentConfig& cfg) {
  SweepTemplate tmpl{Field(cfg.p), cfg.K, cfg.d, cfg.beta, cfg.effective_beta_prime(), cfg.v,
                     cfg.seeds.front()};
  const auto rows = empirical_threshold(tmpl, cfg.sweep_min, cfg.sweep_max, cfg.sweep_strict);
  const auto path = cfg.out_dir / cfg.sweep_file;
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << "# config: " << cfg.echo() << '\n' << sweep_csv_header() << '\n';
  for (const auto& r : rows) write_sweep_csv_row(out, r);
  return path;
}

std::filesystem::path write_bounds(const ExperimentConfig& cfg) {
  const auto path = cfg.out_dir / cfg.bounds_file;
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << "# config: " << cfg.echo() << '\n'
      << "v,beta_prime,d,K,beta,theorem_bound,known_behavior_upper_bound\n";
  for (auto v = cfg.grid_v.first; v <= cfg.grid_v.second; ++v)
    for (auto bp = cfg.grid_beta_prime.first; bp <= cfg.grid_beta_prime.second; ++bp)
      for (auto d = cfg.grid_d.first; d <= cfg.grid_d.second; ++d)
        for (auto K = cfg.grid_K.first; K <= cfg.grid_K.second; ++K) {
          if (bp > K) continue;
          for (auto b = cfg.grid_beta.first; b <= cfg.grid_beta.second; ++b) {
            out << v << ',' << bp << ',' << d << ',' << K << ',' << b << ','
                << theorem_bound(v, bp, d, K, b) << ','
                << known_behavior_upper_bound(v, bp, d, K, b) << '\n';
          }
        }
  return path;
}

}  // namespace

std::vector<std::filesystem::path> run_experiment(const ExperimentConfig& cfg) {
  std::filesystem::create_directories(cfg.out_dir);
  switch (cfg.scenario) {
    case Scenario::kHonestEpoch:
    case Scenario::kGarbageAttack:
    case Scenario::kDiscrepancyAttack:
      return {write_epochs(cfg)};
    case Scenario::kThresholdSweep:
      return {write_sweep(cfg)};
    case Scenario::kBoundTable:
      return {write_bounds(cfg)};
  }
  return {};
}

int run(const std::filesystem::path& config_path, const RunOverrides& overrides,
        std::ostream& err) {
  ExperimentConfig cfg;
  try {
    cfg = load_config(config_path);
    if (overrides.scenario) {
      cfg.scenario = parse_scenario(*overrides.scenario);
      // Scenario-specific constraints depend on the scenario; re-check them.
      cfg = parse_config([&] {
        auto j = json::parse(std::ifstream(config_path));
        j["scenario"] = *overrides.scenario;
        return j.dump();
      }());
    }
    if (overrides.seed) cfg.seeds = {*overrides.seed};
    if (overrides.out_dir) cfg.out_dir = *overrides.out_dir;
  } catch (const ConfigError& e) {
    err << "config error: " << e.what() << '\n';
    return 2;
  } catch (const json::exception& e) {
    err << "config error: " << e.what() << '\n';
    return 2;
  }

  try {
    for (const auto& path : run_experiment(cfg)) err << "wrote " << path.string() << '\n';
  } catch (const InfeasiblePartition& e) {
    err << "infeasible: " << e.what() << '\n';
    return 3;
  } catch (const std::invalid_argument& e) {
    // Parameter combinations the modules reject (e.g. producers >= K).
    err << "infeasible: " << e.what() << '\n';
    return 3;
  }
  return 0;
}

}  // namespace polyshard
