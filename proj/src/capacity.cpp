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

#include "weylcap/capacity.hpp"

#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "weylcap/random.hpp"

namespace weylcap {

CapacityReport capacity_qc(const ProbVector& p, LogBase base) {
  const std::size_t n = p.size();
  const double h = shannon_entropy(p.weights, base);
  const double cap = log_in_base(static_cast<double>(n), base) - h;
  return CapacityReport{n, base, p, cap, h, CapacityFormula::qc_corollary2};
}

CapacityReport capacity_deformed(const WeylChannelSpec& spec, LogBase base) {
  const auto cert = deformation_certificate(spec);
  if (!cert.ordered)
    throw DeformationRequired("capacity_deformed: table is not a deformation of a q-c channel");
  const double h = shannon_entropy(cert.marginals.weights, base);
  const double cap = log_in_base(static_cast<double>(spec.n), base) - h;
  return CapacityReport{spec.n,  base, cert.marginals, cap, h,
                        CapacityFormula::deformed_corollary4};
}

namespace {

// N-fold product of a distribution with itself.
std::vector<double> tensor_power_distribution(const std::vector<double>& pi, std::size_t big_n) {
  std::vector<double> out{1.0};
  for (std::size_t s = 0; s < big_n; ++s) {
    std::vector<double> next;
    next.reserve(out.size() * pi.size());
    for (double a : out)
      for (double b : pi) next.push_back(a * b);
    out = std::move(next);
  }
  return out;
}

}  // namespace

AdditivityReport additivity_report(const WeylChannelSpec& spec, std::size_t big_n,
                                   const OptimizerConfig& config, LogBase base,
                                   std::size_t threads) {
  const auto cert = deformation_certificate(spec);
  if (!cert.ordered)
    throw DeformationRequired("additivity_report: table is not a deformation of a q-c channel");
  const std::size_t d = tensor_power_dim(spec.n, big_n);

  const double single = shannon_entropy(cert.marginals.weights, base);
  const double scaled = static_cast<double>(big_n) * single;
  EntropyResult numeric = min_output_entropy(spec, big_n, config, base, threads);
  const double block =
      entropy_lower_bound(tensor_power_distribution(spec.flattened(), big_n), d, base);

  std::ostringstream digest;
  digest << "restarts=" << config.restarts << ";max_iterations=" << config.max_iterations
         << ";step_tolerance=" << config.step_tolerance
         << ";value_tolerance=" << config.value_tolerance << ";seed=" << config.seed;

  return AdditivityReport{big_n,
                          single,
                          scaled,
                          numeric.value,
                          block,
                          numeric.value - scaled,
                          scaled - block,
                          digest.str(),
                          std::move(numeric)};
}

namespace {

std::vector<ComplexMatrix> qc_kraus(const ProbVector& p) {
  const std::size_t n = p.size();
  std::vector<ComplexMatrix> ops;
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t k = 0; k < n; ++k) {
      if (p[k] <= 0.0) continue;
      ComplexMatrix w = weyl_operator(n, j, k);
      w *= cdouble{std::sqrt(p[k] / static_cast<double>(n)), 0.0};
      ops.push_back(std::move(w));
    }
  return ops;
}

}  // namespace

DensityMatrix phi_tensor_omega(const ProbVector& p, const KrausChannel& omega,
                               const PureState& xi) {
  const std::size_t n = p.size();
  const std::size_t m = omega.in_dim;
  if (xi.dim != n * m)
    throw std::invalid_argument("phi_tensor_omega: state dimension mismatch");
  const ComplexMatrix proj = xi.projector().matrix();
  ComplexMatrix out(n * m, n * m);
  for (const auto& kp : qc_kraus(p))
    for (const auto& ko : omega.kraus_ops) {
      const ComplexMatrix k = tensor_product(kp, ko);
      out += k * proj * k.adjoint();
    }
  return DensityMatrix(std::move(out));
}

double prop1_bound(const ProbVector& p, const KrausChannel& omega, const PureState& xi,
                   LogBase base) {
  const std::size_t n = p.size();
  const std::size_t m = omega.in_dim;
  if (xi.dim != n * m) throw std::invalid_argument("prop1_bound: state dimension mismatch");
  const DensityMatrix reduced = partial_trace(xi.projector(), n, m, Subsystem::B);
  return shannon_entropy(p.weights, base) + von_neumann_entropy(omega.apply(reduced), base);
}

Prop1Report prop1_verify(const ProbVector& p, std::size_t samples, std::size_t k_dim,
                         std::uint64_t seed, LogBase base) {
  if (samples < 1) throw std::invalid_argument("prop1_verify: samples must be >= 1");
  if (k_dim < 1) throw std::invalid_argument("prop1_verify: k_dim must be >= 1");
  Prop1Report report;
  report.samples = samples;
  report.min_margin = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < samples; ++i) {
    const std::uint64_t si = Rng::mix(seed, i);
    const KrausChannel omega = random_channel(k_dim, k_dim * k_dim, si);
    const PureState xi = random_pure_state(p.size() * k_dim, Rng::mix(si, 1));
    const double entropy = von_neumann_entropy(phi_tensor_omega(p, omega, xi), base);
    const double bound = prop1_bound(p, omega, xi, base);
    report.bound_values.push_back(bound);
    report.entropy_values.push_back(entropy);
    report.seeds.push_back(si);
    report.min_margin = std::min(report.min_margin, entropy - bound);
  }
  return report;
}

DensityMatrix upsilon_apply(const ProbVector& p, const KrausChannel& omega, const PureState& xi,
                            const DensityMatrix& rho) {
  const std::size_t n = p.size();
  const std::size_t m = omega.in_dim;
  if (rho.dim() != n) throw std::invalid_argument("upsilon_apply: rho dimension mismatch");
  if (xi.dim != n * m) throw std::invalid_argument("upsilon_apply: xi dimension mismatch");
  const ComplexMatrix proj = xi.projector().matrix();
  const double inv_n = 1.0 / static_cast<double>(n);
  ComplexMatrix out(n * m, n * m);
  for (std::size_t k = 0; k < n; ++k) {
    const double weight = rho.matrix()(k, k).real();
    if (weight == 0.0) continue;
    // T_k = (Xi_k (x) Omega)(|xi><xi|) via Kraus pairs (1/sqrt n) W_jk (x) L.
    ComplexMatrix t_k(n * m, n * m);
    for (std::size_t j = 0; j < n; ++j) {
      ComplexMatrix w = weyl_operator(n, j, k);
      w *= cdouble{std::sqrt(inv_n), 0.0};
      for (const auto& l : omega.kraus_ops) {
        const ComplexMatrix kr = tensor_product(w, l);
        t_k += kr * proj * kr.adjoint();
      }
    }
    t_k *= cdouble{weight, 0.0};
    out += t_k;
  }
  return DensityMatrix(std::move(out));
}

double dpi_check(const KrausChannel& channel, const DensityMatrix& rho, const DensityMatrix& sigma,
                 LogBase base) {
  const double before = relative_entropy(rho, sigma, base);
  const double after = relative_entropy(channel.apply(rho), channel.apply(sigma), base);
  return before - after;
}

}  // namespace weylcap
