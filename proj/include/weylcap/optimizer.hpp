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

#include <cstdint>
#include <stdexcept>

#include "weylcap/weyl.hpp"

namespace weylcap {

/// Raised when an operation that is only proved for deformations of q-c
/// channels is asked about a table whose ordering chain fails.
class DeformationRequired : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

struct OptimizerConfig {
  std::size_t restarts = 64;
  std::size_t max_iterations = 500;
  double step_tolerance = 1e-10;
  double value_tolerance = 1e-12;
  std::uint64_t seed = 0;

  void validate() const;
};

struct EntropyResult {
  double value;
  PureState argmin;
  LogBase base;
  std::size_t restarts_used;
  std::uint64_t best_restart_seed;
  bool converged;
};

/// S(Phi^{(x)N}(|psi><psi|)).
double output_entropy(const WeylChannelSpec& spec, std::size_t big_n, const PureState& psi,
                      LogBase base);

/// Best value over seeded Haar restarts of projected gradient descent on the
/// unit sphere (central-difference gradients, backtracking line search).
/// Restarts are independent given (seed, restart_index); the merge takes the
/// minimum value with ties broken by lower restart index, so serial and
/// threaded runs agree.
EntropyResult min_output_entropy(const WeylChannelSpec& spec, std::size_t big_n,
                                 const OptimizerConfig& config, LogBase base,
                                 std::size_t threads = 1);

/// N * H(marginals); valid only when the deformation certificate passes.
double min_output_entropy_closed_form(const WeylChannelSpec& spec, std::size_t big_n,
                                      LogBase base);

/// Central-difference gradient of the output entropy objective at the real
/// embedding x of a state, with step h. Exposed for gradient cross-checks.
std::vector<double> output_entropy_gradient(const WeylChannelSpec& spec, std::size_t big_n,
                                            const std::vector<double>& x, LogBase base, double h);

}  // namespace weylcap
