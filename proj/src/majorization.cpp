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

#include "weylcap/majorization.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace weylcap {

std::vector<double> sort_descending(const std::vector<double>& w) {
  std::vector<double> out = w;
  std::stable_sort(out.begin(), out.end(), std::greater<>());
  return out;
}

bool majorizes(const ProbVector& lambda, const ProbVector& mu, double tol) {
  if (lambda.size() != mu.size()) throw std::invalid_argument("majorizes: length mismatch");
  const auto l = sort_descending(lambda.weights);
  const auto m = sort_descending(mu.weights);
  double sl = 0.0, sm = 0.0;
  for (std::size_t k = 0; k < l.size(); ++k) {
    sl += l[k];
    sm += m[k];
    if (sm > sl + tol) return false;
  }
  return true;
}

ProbVector block_distribution(const std::vector<double>& pi, std::size_t d) {
  if (d == 0 || pi.size() != d * d)
    throw std::invalid_argument("block_distribution: length must equal d^2");
  const auto sorted = sort_descending(pi);
  std::vector<double> p(d, 0.0);
  for (std::size_t j = 0; j < d; ++j)
    for (std::size_t m = 0; m < d; ++m) p[j] += sorted[j * d + m];
  return ProbVector(std::move(p));
}

double entropy_lower_bound(const std::vector<double>& pi, std::size_t d, LogBase base) {
  return shannon_entropy(block_distribution(pi, d).weights, base);
}

BlockBoundReport block_bound_report(const std::vector<double>& pi, std::size_t d, LogBase base) {
  ProbVector p = block_distribution(pi, d);
  const double h = shannon_entropy(p.weights, base);
  return BlockBoundReport{d, std::move(p), h, pi.size()};
}

bool prop2_verify(const WeylChannelSpec& spec, const DensityMatrix& rho) {
  const auto lambda = hermitian_eigenvalues(apply_weyl_channel(spec, rho).matrix());
  std::vector<double> clamped = lambda;
  for (double& v : clamped) v = std::max(v, 0.0);
  return majorizes(block_distribution(spec.flattened(), spec.n), ProbVector(std::move(clamped)),
                   1e-9);
}

}  // namespace weylcap
