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
#include <optional>
#include <utility>
#include <vector>

#include "weylcap/linalg.hpp"

namespace weylcap {

/// Finite probability distribution.
struct ProbVector {
  std::vector<double> weights;

  explicit ProbVector(std::vector<double> w);
  std::size_t size() const { return weights.size(); }
  double operator[](std::size_t i) const { return weights[i]; }
};

/// Qudit dimension n plus the n x n probability table pi[j][k]; row j is the
/// clock (U) power, column k the shift (V) power, matching W_jk = U^j V^k.
struct WeylChannelSpec {
  std::size_t n;
  std::vector<std::vector<double>> pi;

  WeylChannelSpec(std::size_t n, std::vector<std::vector<double>> pi);

  /// Row-major flattening of the table.
  std::vector<double> flattened() const;
  /// Table entries in the column-major chain order
  /// pi_00, pi_10, ..., pi_{n-1,0}, pi_01, ...
  std::vector<double> chain_order() const;
};

struct DeformationCertificate {
  bool ordered;
  ProbVector marginals;
  /// 1-based position of the first violated adjacent pair in the chain.
  std::optional<std::size_t> violation_index;
};

/// Clock operator U (diag of n-th roots of unity) and cyclic shift V.
std::pair<ComplexMatrix, ComplexMatrix> weyl_generators(std::size_t n);

/// W_jk = U^j V^k; indices reduced mod n.
ComplexMatrix weyl_operator(std::size_t n, std::size_t j, std::size_t k);

/// Phi(rho) = sum_jk pi_jk W_jk rho W_jk*.
DensityMatrix apply_weyl_channel(const WeylChannelSpec& spec, const DensityMatrix& rho);

/// Maximum Hilbert space dimension for tensor powers (3^5).
inline constexpr std::size_t kMaxTensorDim = 243;

/// n^N with the resource guard; throws std::length_error when exceeded.
std::size_t tensor_power_dim(std::size_t n, std::size_t big_n);

/// Applies Phi^{(x)N} by per-site Kraus sweeps; each embedded Weyl operator
/// is a generalized permutation so a sweep costs O(N n^2 d^2).
class TensorPowerApplier {
 public:
  TensorPowerApplier(const WeylChannelSpec& spec, std::size_t big_n);

  std::size_t dim() const { return dim_; }
  /// Raw conjugation sum on an arbitrary matrix.
  ComplexMatrix apply_matrix(const ComplexMatrix& rho) const;
  DensityMatrix apply(const DensityMatrix& rho) const;

 private:
  struct Term {
    double weight;
    std::vector<std::uint32_t> target;  // basis permutation
    std::vector<cdouble> phase;
  };
  std::size_t dim_;
  std::vector<std::vector<Term>> site_terms_;
};

DensityMatrix apply_tensor_power(const WeylChannelSpec& spec, std::size_t big_n,
                                 const DensityMatrix& rho);

/// q-c channel table pi_jk = p_k / n (the U-invariant Weyl channel).
WeylChannelSpec qc_spec_from_p(const ProbVector& p);

/// Column sums p_k = sum_j pi_jk.
ProbVector marginals(const WeylChannelSpec& spec);

/// Checks the column-major descending chain over the table (tolerance 1e-12).
DeformationCertificate deformation_certificate(const WeylChannelSpec& spec);

/// Conditional expectation onto the U-fixed-point algebra: off-diagonal
/// entries zeroed in the standard basis.
DensityMatrix expectation_E(const DensityMatrix& rho);

/// Xi_k(rho) = (1/n) sum_j U^j V^k rho V^k* U^j*.
ComplexMatrix xi_k(std::size_t n, std::size_t k, const DensityMatrix& rho);

/// max_j || U^j Phi(rho) U^j* - Phi(rho) ||_max.
double check_invariance(const WeylChannelSpec& spec, const DensityMatrix& rho);

/// || Phi(W_ab rho W_ab*) - W_ab Phi(rho) W_ab* ||_max.
double check_weyl_covariance(const WeylChannelSpec& spec, const DensityMatrix& rho, std::size_t a,
                             std::size_t b);

/// Random valid deformation with the prescribed descending marginals p:
/// per-column descending perturbations are mixed toward the q-c table, with
/// the mixing weight capped so every chain boundary stays ordered.
WeylChannelSpec random_deformation(const ProbVector& p, double perturbation, std::uint64_t seed);

}  // namespace weylcap
