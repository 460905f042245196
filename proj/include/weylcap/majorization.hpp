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

#include "weylcap/weyl.hpp"

namespace weylcap {

struct BlockBoundReport {
  std::size_t d;
  ProbVector block_distribution;
  double entropy_bound;
  std::size_t source_size;  // d^2
};

/// Stable descending sort (ties keep original index order).
std::vector<double> sort_descending(const std::vector<double>& w);

/// True iff lambda majorizes mu: every partial sum of mu's descending
/// rearrangement stays below lambda's, up to tol.
bool majorizes(const ProbVector& lambda, const ProbVector& mu, double tol);

/// Sums of consecutive length-d blocks of the descending rearrangement of a
/// length-d^2 probability vector.
ProbVector block_distribution(const std::vector<double>& pi, std::size_t d);

/// Shannon entropy of the block distribution; a lower bound on the output
/// entropy of any operator sum meeting the block-majorization hypotheses.
double entropy_lower_bound(const std::vector<double>& pi, std::size_t d, LogBase base);

BlockBoundReport block_bound_report(const std::vector<double>& pi, std::size_t d, LogBase base);

/// Checks that the block distribution of the channel table majorizes the
/// output spectrum of the channel on rho (tolerance 1e-9).
bool prop2_verify(const WeylChannelSpec& spec, const DensityMatrix& rho);

}  // namespace weylcap
