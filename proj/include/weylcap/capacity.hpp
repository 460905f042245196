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

#pragma once

#include <string>

#include "weylcap/majorization.hpp"
#include "weylcap/optimizer.hpp"

namespace weylcap {

enum class CapacityFormula { qc_corollary2, deformed_corollary4 };

/// Classical capacity via the covariant identity C = log n - min output
/// entropy, with the minimal output entropy in closed form.
struct CapacityReport {
  std::size_t n;
  LogBase base;
  ProbVector marginals;
  double capacity;
  double min_output_entropy;
  CapacityFormula formula;
};

struct AdditivityReport {
  std::size_t big_n;
  double single_copy_min;
  double scaled_single;     // N * single_copy_min
  double numeric_min_at_n;  // optimizer value at tensor power N
  double block_bound_at_n;  // block bound on the N-fold product distribution
  double gap_numeric;       // numeric_min_at_n - scaled_single
  double gap_bound;         // scaled_single - block_bound_at_n
  std::string optimizer_config_digest;
  EntropyResult numeric;
};

struct Prop1Report {
  std::size_t samples;
  double min_margin;
  std::vector<double> bound_values;
  std::vector<double> entropy_values;
  std::vector<std::uint64_t> seeds;
};

CapacityReport capacity_qc(const ProbVector& p, LogBase base);

/// Refuses tables whose deformation certificate fails; the formula is proved
/// only under the ordering chain.
CapacityReport capacity_deformed(const WeylChannelSpec& spec, LogBase base);

AdditivityReport additivity_report(const WeylChannelSpec& spec, std::size_t big_n,
                                   const OptimizerConfig& config, LogBase base,
                                   std::size_t threads = 1);

/// H(p) + S(Omega(Tr_H |xi><xi|)).
double prop1_bound(const ProbVector& p, const KrausChannel& omega, const PureState& xi,
                   LogBase base);

/// Samples random (Omega, xi) pairs and records the margin
/// S((Phi (x) Omega)(|xi><xi|)) - bound for the q-c channel built from p.
Prop1Report prop1_verify(const ProbVector& p, std::size_t samples, std::size_t k_dim,
                         std::uint64_t seed, LogBase base);

/// (Phi_p (x) Omega)(|xi><xi|) for the q-c channel built from p.
DensityMatrix phi_tensor_omega(const ProbVector& p, const KrausChannel& omega,
                               const PureState& xi);

/// Upsilon(rho) = sum_k <e_k, rho e_k> (Xi_k (x) Omega)(|xi><xi|).
DensityMatrix upsilon_apply(const ProbVector& p, const KrausChannel& omega, const PureState& xi,
                            const DensityMatrix& rho);

/// S(rho || sigma) - S(channel rho || channel sigma); nonnegative by the
/// data-processing inequality.
double dpi_check(const KrausChannel& channel, const DensityMatrix& rho, const DensityMatrix& sigma,
                 LogBase base);

}  // namespace weylcap
