// Copyright 2026 The weylcap developers
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <CLI11.hpp>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <sstream>

#include "weylcap/capacity.hpp"
#include "weylcap/random.hpp"

namespace {

using json = nlohmann::ordered_json;
using namespace weylcap;

constexpr const char* kToolVersion = "0.1.0";

// Exit codes. 0 is success; 1 is left to uncaught failures.
constexpr int kExitParse = 2;       // malformed input or usage error
constexpr int kExitValidation = 3;  // spec fails its invariants
constexpr int kExitNoFormula = 4;   // no proven closed form applies
constexpr int kExitGuard = 5;       // tensor power resource guard
constexpr int kExitMargin = 6;      // inequality margin violated

struct SpecParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct LoadedSpec {
  WeylChannelSpec spec;
  std::string label;
};

LoadedSpec load_spec(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw SpecParseError("cannot open spec file: " + path);
  json doc;
  try {
    doc = json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw SpecParseError(std::string("malformed spec JSON: ") + e.what());
  }
  std::size_t n = 0;
  std::vector<std::vector<double>> pi;
  std::string label;
  try {
    n = doc.at("n").get<std::size_t>();
    pi = doc.at("pi").get<std::vector<std::vector<double>>>();
    if (doc.contains("label")) label = doc.at("label").get<std::string>();
  } catch (const nlohmann::json::exception& e) {
    throw SpecParseError(std::string("bad spec schema: ") + e.what());
  }
  // Shape and value checks are the spec type's own invariants.
  return LoadedSpec{WeylChannelSpec(n, std::move(pi)), std::move(label)};
}

std::string fnv1a_digest(const std::string& data) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : data) {
    h ^= c;
    h *= 1099511628211ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

std::string canonical_inputs(const std::string& command, const WeylChannelSpec* spec,
                             const json& flags) {
  std::ostringstream os;
  os << command << '|';
  if (spec != nullptr) {
    os << spec->n;
    char buf[32];
    for (double v : spec->flattened()) {
      std::snprintf(buf, sizeof(buf), "%.17g", v);
      os << ',' << buf;
    }
  }
  os << '|' << flags.dump();
  return os.str();
}

const char* base_name(LogBase base) { return base == LogBase::two ? "2" : "nat"; }

json state_to_json(const PureState& psi) {
  json arr = json::array();
  for (const auto& a : psi.amplitudes) arr.push_back({a.real(), a.imag()});
  return arr;
}

json certificate_to_json(const DeformationCertificate& cert) {
  json j;
  j["ordered"] = cert.ordered;
  j["marginals"] = cert.marginals.weights;
  if (cert.violation_index)
    j["violation_index"] = *cert.violation_index;
  else
    j["violation_index"] = nullptr;
  return j;
}

json entropy_result_to_json(const EntropyResult& res) {
  json j;
  j["value"] = res.value;
  j["restarts_used"] = res.restarts_used;
  j["best_restart_seed"] = res.best_restart_seed;
  j["converged"] = res.converged;
  j["argmin"] = state_to_json(res.argmin);
  return j;
}

json capacity_report_to_json(const CapacityReport& rep) {
  json j;
  j["n"] = rep.n;
  j["marginals"] = rep.marginals.weights;
  j["capacity"] = rep.capacity;
  j["min_output_entropy"] = rep.min_output_entropy;
  j["formula"] =
      rep.formula == CapacityFormula::qc_corollary2 ? "qc" : "deformed";
  return j;
}

json additivity_report_to_json(const AdditivityReport& rep) {
  json j;
  j["N"] = rep.big_n;
  j["single_copy_min"] = rep.single_copy_min;
  j["scaled_single"] = rep.scaled_single;
  j["numeric_min"] = rep.numeric_min_at_n;
  j["block_bound"] = rep.block_bound_at_n;
  j["gap_numeric"] = rep.gap_numeric;
  j["gap_bound"] = rep.gap_bound;
  j["optimizer_config"] = rep.optimizer_config_digest;
  j["numeric"] = entropy_result_to_json(rep.numeric);
  return j;
}

void emit_report(const std::string& command, const WeylChannelSpec* spec, const json& flags,
                 LogBase base, std::uint64_t seed, json results, const std::string& out_path) {
  json report;
  report["command"] = command;
  report["inputs_digest"] = fnv1a_digest(canonical_inputs(command, spec, flags));
  report["base"] = base_name(base);
  report["seed"] = seed;
  report["tool_version"] = kToolVersion;
  report["results"] = std::move(results);
  const std::string text = report.dump(2) + "\n";
  if (out_path.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(out_path);
    if (!out) throw std::runtime_error("cannot write report: " + out_path);
    out << text;
  }
}

void append_csv_row(const std::string& path, const std::string& label, std::size_t n,
                    std::size_t big_n, const AdditivityReport& rep, std::uint64_t seed) {
  const bool fresh = !std::filesystem::exists(path) || std::filesystem::file_size(path) == 0;
  std::ofstream out(path, std::ios::app);
  if (!out) throw std::runtime_error("cannot open csv file: " + path);
  if (fresh)
    out << "label,n,N,scaled_single,numeric_min,block_bound,gap_numeric,gap_bound,seed\n";
  char buf[512];
  std::snprintf(buf, sizeof(buf), "%s,%zu,%zu,%.15g,%.15g,%.15g,%.15g,%.15g,%llu\n",
                label.c_str(), n, big_n, rep.scaled_single, rep.numeric_min_at_n,
                rep.block_bound_at_n, rep.gap_numeric, rep.gap_bound,
                static_cast<unsigned long long>(seed));
  out << buf;
}

bool rows_constant(const WeylChannelSpec& spec) {
  for (std::size_t j = 1; j < spec.n; ++j)
    for (std::size_t k = 0; k < spec.n; ++k)
      if (std::abs(spec.pi[j][k] - spec.pi[0][k]) > 1e-12) return false;
  return true;
}

std::vector<double> tensor_power_distribution(const std::vector<double>& pi, std::size_t big_n) {
  std::vector<double> acc{1.0};
  for (std::size_t r = 0; r < big_n; ++r) {
    std::vector<double> next;
    next.reserve(acc.size() * pi.size());
    for (double a : acc)
      for (double b : pi) next.push_back(a * b);
    acc = std::move(next);
  }
  return acc;
}

json describe_results(const LoadedSpec& loaded, std::uint64_t seed) {
  const auto& spec = loaded.spec;
  const auto cert = deformation_certificate(spec);
  const auto rho = random_density_matrix(spec.n, seed);
  double cov = 0.0;
  for (std::size_t a = 0; a < spec.n; ++a)
    for (std::size_t b = 0; b < spec.n; ++b)
      cov = std::max(cov, check_weyl_covariance(spec, rho, a, b));
  json results;
  results["n"] = spec.n;
  if (!loaded.label.empty()) results["label"] = loaded.label;
  results["pi"] = spec.pi;
  results["marginals"] = cert.marginals.weights;
  results["certificate"] = certificate_to_json(cert);
  results["invariance_residual"] = check_invariance(spec, rho);
  results["covariance_residual"] = cov;
  return results;
}

int cmd_describe(const std::string& spec_path, LogBase base, std::uint64_t seed,
                 const std::string& out_path) {
  const auto loaded = load_spec(spec_path);
  json flags{{"base", base_name(base)}, {"seed", seed}};
  emit_report("describe", &loaded.spec, flags, base, seed, describe_results(loaded, seed),
              out_path);
  return 0;
}

int cmd_capacity(const std::string& spec_path, const std::string& formula, LogBase base,
                 std::uint64_t seed, const std::string& out_path) {
  const auto loaded = load_spec(spec_path);
  const auto& spec = loaded.spec;
  std::optional<CapacityReport> rep;
  if (formula == "deformed") {
    rep = capacity_deformed(spec, base);
  } else if (formula == "qc") {
    if (!rows_constant(spec)) {
      std::cerr << "weylcap: table is not q-c (rows differ); the q-c formula does not apply\n";
      return kExitNoFormula;
    }
    rep = capacity_qc(marginals(spec), base);
  } else {  // auto
    if (deformation_certificate(spec).ordered) {
      rep = capacity_deformed(spec, base);
    } else if (rows_constant(spec)) {
      rep = capacity_qc(marginals(spec), base);
    } else {
      std::cerr << "weylcap: no proven capacity formula applies to this table\n";
      return kExitNoFormula;
    }
  }
  json flags{{"base", base_name(base)}, {"formula", formula}};
  emit_report("capacity", &spec, flags, base, seed, capacity_report_to_json(*rep), out_path);
  return 0;
}

int cmd_min_entropy(const std::string& spec_path, std::size_t big_n, const OptimizerConfig& cfg,
                    std::size_t threads, LogBase base, const std::string& out_path) {
  const auto loaded = load_spec(spec_path);
  const auto& spec = loaded.spec;
  const std::size_t d = tensor_power_dim(spec.n, big_n);  // resource guard
  const auto res = min_output_entropy(spec, big_n, cfg, base, threads);
  const auto bound =
      block_bound_report(tensor_power_distribution(spec.flattened(), big_n), d, base);
  json results;
  results["N"] = big_n;
  results["min_entropy"] = entropy_result_to_json(res);
  results["block_bound"] = bound.entropy_bound;
  results["block_distribution"] = bound.block_distribution.weights;
  // threads are excluded from the digest: they do not change results
  json flags{{"base", base_name(base)},
             {"N", big_n},
             {"restarts", cfg.restarts},
             {"seed", cfg.seed}};
  emit_report("min-entropy", &spec, flags, base, cfg.seed, std::move(results), out_path);
  return 0;
}

int cmd_additivity(const std::string& spec_path, std::size_t big_n, const OptimizerConfig& cfg,
                   std::size_t threads, LogBase base, const std::string& csv_path,
                   const std::string& out_path) {
  const auto loaded = load_spec(spec_path);
  const auto rep = additivity_report(loaded.spec, big_n, cfg, base, threads);
  if (!csv_path.empty())
    append_csv_row(csv_path, loaded.label, loaded.spec.n, big_n, rep, cfg.seed);
  json flags{{"base", base_name(base)},
             {"N", big_n},
             {"restarts", cfg.restarts},
             {"seed", cfg.seed}};
  emit_report("additivity", &loaded.spec, flags, base, cfg.seed,
              additivity_report_to_json(rep), out_path);
  return 0;
}

int cmd_verify(const std::string& spec_path, std::vector<double> p_flag, std::size_t samples,
               std::size_t k_dim, std::uint64_t seed, LogBase base,
               const std::string& out_path) {
  if (samples == 0) throw UsageError("--samples must be positive");
  ProbVector p({1.0});
  const WeylChannelSpec* spec_ptr = nullptr;
  std::unique_ptr<WeylChannelSpec> spec_holder;
  if (!spec_path.empty()) {
    auto loaded = load_spec(spec_path);
    p = marginals(loaded.spec);
    spec_holder = std::make_unique<WeylChannelSpec>(std::move(loaded.spec));
    spec_ptr = spec_holder.get();
  } else if (!p_flag.empty()) {
    p = ProbVector(std::move(p_flag));
  } else {
    throw UsageError("verify needs a spec file or --p");
  }

  const auto rep = prop1_verify(p, samples, k_dim, seed, base);

  // Companion batch: data processing on random (channel, rho, sigma) triples.
  const std::size_t n = p.size();
  double dpi_min = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < samples; ++i) {
    const auto chan = random_channel(n, n * n, Rng::mix(seed, 10000 + i));
    const auto rho = random_density_matrix(n, Rng::mix(seed, 20000 + i));
    const auto sigma = random_density_matrix(n, Rng::mix(seed, 30000 + i));
    dpi_min = std::min(dpi_min, dpi_check(chan, rho, sigma, base));
  }

  json results;
  results["p"] = p.weights;
  results["samples"] = rep.samples;
  results["k_dim"] = k_dim;
  results["min_margin"] = rep.min_margin;
  results["bound_values"] = rep.bound_values;
  results["entropy_values"] = rep.entropy_values;
  results["dpi_min_margin"] = dpi_min;
  json flags{{"base", base_name(base)},
             {"samples", samples},
             {"kdim", k_dim},
             {"seed", seed},
             {"p", p.weights}};
  emit_report("verify", spec_ptr, flags, base, seed, std::move(results), out_path);

  if (rep.min_margin < -1e-8 || dpi_min < -1e-8) {
    std::cerr << "weylcap: inequality margin violated (min_margin=" << rep.min_margin
              << ", dpi_min_margin=" << dpi_min << ")\n";
    return kExitMargin;
  }
  return 0;
}

int cmd_example_qutrit(std::size_t restarts, std::uint64_t seed, std::size_t threads,
                       LogBase base, const std::string& csv_path, const std::string& out_path) {
  const LoadedSpec loaded{
      WeylChannelSpec(3, {{1.0 / 4.0, 1.0 / 8.0, 1.0 / 12.0},
                          {1.0 / 8.0, 1.0 / 8.0, 1.0 / 24.0},
                          {1.0 / 8.0, 1.0 / 12.0, 1.0 / 24.0}}),
      "qutrit-example"};
  const auto& spec = loaded.spec;

  OptimizerConfig cfg;
  cfg.restarts = restarts;
  cfg.seed = seed;
  const auto min1 = min_output_entropy(spec, 1, cfg, base, threads);

  // The two-copy run reuses the single-copy count divided by two, floored at
  // eight; the additivity report recomputes the N=1 minimum internally.
  OptimizerConfig cfg2 = cfg;
  cfg2.restarts = std::max<std::size_t>(8, restarts / 2);
  const auto add2 = additivity_report(spec, 2, cfg2, base, threads);
  if (!csv_path.empty()) append_csv_row(csv_path, loaded.label, spec.n, 2, add2, seed);

  json results;
  results["describe"] = describe_results(loaded, seed);
  results["capacity"] = capacity_report_to_json(capacity_deformed(spec, base));
  results["min_entropy_N1"] = entropy_result_to_json(min1);
  results["closed_form_N1"] = min_output_entropy_closed_form(spec, 1, base);
  results["additivity_N2"] = additivity_report_to_json(add2);
  json flags{{"base", base_name(base)}, {"restarts", restarts}, {"seed", seed}};
  emit_report("example-qutrit", &spec, flags, base, seed, std::move(results), out_path);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Weyl channel capacities, minimal output entropies, and majorization bounds"};
  app.set_version_flag("--version", kToolVersion);
  app.require_subcommand(1);

  std::string spec_path, out_path, csv_path, base_flag = "2", formula = "auto";
  std::vector<double> p_flag;
  std::size_t big_n = 1, restarts = 64, threads = 1, samples = 100, k_dim = 2;
  std::uint64_t seed = 0;

  const auto add_common = [&](CLI::App* sub) {
    sub->add_option("--base", base_flag, "Logarithm base")
        ->check(CLI::IsMember({"2", "nat"}))
        ->capture_default_str();
    sub->add_option("--seed", seed, "Root seed")->capture_default_str();
    sub->add_option("--out", out_path, "Report path (default stdout)");
  };
  const auto add_optimizer = [&](CLI::App* sub) {
    sub->add_option("--restarts", restarts, "Optimizer restarts")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    sub->add_option("--threads", threads, "Concurrent restarts")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
  };

  auto* describe = app.add_subcommand("describe", "Marginals, certificate, and residuals");
  describe->add_option("spec", spec_path, "Channel spec JSON")->required();
  add_common(describe);

  auto* capacity = app.add_subcommand("capacity", "Classical capacity closed forms");
  capacity->add_option("spec", spec_path, "Channel spec JSON")->required();
  capacity->add_option("--formula", formula, "Formula selection")
      ->check(CLI::IsMember({"auto", "qc", "deformed"}))
      ->capture_default_str();
  add_common(capacity);

  auto* min_entropy = app.add_subcommand("min-entropy", "Numerical minimal output entropy");
  min_entropy->add_option("spec", spec_path, "Channel spec JSON")->required();
  min_entropy->add_option("--N", big_n, "Tensor power")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  add_optimizer(min_entropy);
  add_common(min_entropy);

  auto* additivity = app.add_subcommand("additivity", "Additivity bracket report");
  additivity->add_option("spec", spec_path, "Channel spec JSON")->required();
  additivity->add_option("--N", big_n, "Tensor power")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  add_optimizer(additivity);
  additivity->add_option("--csv", csv_path, "Append a CSV sweep row");
  add_common(additivity);

  auto* verify = app.add_subcommand("verify", "Entanglement bound and data-processing checks");
  verify->add_option("spec", spec_path, "Channel spec JSON (marginals are used)");
  verify->add_option("--p", p_flag, "Explicit marginal distribution");
  verify->add_option("--samples", samples, "Random samples")->capture_default_str();
  verify->add_option("--kdim", k_dim, "Ancilla dimension")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  add_common(verify);

  auto* example = app.add_subcommand("example-qutrit", "Reproduce the worked qutrit example");
  add_optimizer(example);
  example->add_option("--csv", csv_path, "Append a CSV sweep row");
  add_common(example);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    app.exit(e);
    return kExitParse;
  }

  const LogBase base = base_flag == "2" ? LogBase::two : LogBase::e;
  OptimizerConfig cfg;
  cfg.restarts = restarts;
  cfg.seed = seed;

  try {
    if (describe->parsed()) return cmd_describe(spec_path, base, seed, out_path);
    if (capacity->parsed()) return cmd_capacity(spec_path, formula, base, seed, out_path);
    if (min_entropy->parsed())
      return cmd_min_entropy(spec_path, big_n, cfg, threads, base, out_path);
    if (additivity->parsed())
      return cmd_additivity(spec_path, big_n, cfg, threads, base, csv_path, out_path);
    if (verify->parsed())
      return cmd_verify(spec_path, std::move(p_flag), samples, k_dim, seed, base, out_path);
    if (example->parsed())
      return cmd_example_qutrit(restarts, seed, threads, base, csv_path, out_path);
  } catch (const UsageError& e) {
    std::cerr << "weylcap: " << e.what() << "\n";
    return kExitParse;
  } catch (const SpecParseError& e) {
    std::cerr << "weylcap: " << e.what() << "\n";
    return kExitParse;
  } catch (const DeformationRequired& e) {
    std::cerr << "weylcap: " << e.what() << "\n";
    return kExitNoFormula;
  } catch (const std::length_error& e) {
    std::cerr << "weylcap: " << e.what() << "\n";
    return kExitGuard;
  } catch (const std::invalid_argument& e) {
    std::cerr << "weylcap: " << e.what() << "\n";
    return kExitValidation;
  }
  return 0;
}
