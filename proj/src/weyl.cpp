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

#include "weylcap/weyl.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>
#include <stdexcept>

#include "weylcap/random.hpp"

namespace weylcap {

namespace {

cdouble root_of_unity(std::size_t n, std::size_t power) {
  const double angle = 2.0 * std::numbers::pi * static_cast<double>(power % n) /
                       static_cast<double>(n);
  return {std::cos(angle), std::sin(angle)};
}

}  // namespace

ProbVector::ProbVector(std::vector<double> w) : weights(std::move(w)) {
  if (weights.empty()) throw std::invalid_argument("ProbVector: empty");
  double sum = 0.0;
  for (double v : weights) {
    if (v < -1e-12) throw std::invalid_argument("ProbVector: negative weight");
    sum += v;
  }
  if (std::abs(sum - 1.0) > 1e-9)
    throw std::invalid_argument("ProbVector: weights do not sum to 1 within 1e-9");
}

WeylChannelSpec::WeylChannelSpec(std::size_t n_, std::vector<std::vector<double>> pi_)
    : n(n_), pi(std::move(pi_)) {
  if (n < 1) throw std::invalid_argument("WeylChannelSpec: n must be positive");
  if (pi.size() != n) throw std::invalid_argument("WeylChannelSpec: pi must be n x n");
  double sum = 0.0;
  for (const auto& row : pi) {
    if (row.size() != n) throw std::invalid_argument("WeylChannelSpec: pi must be n x n");
    for (double v : row) {
      if (v < -1e-12) throw std::invalid_argument("WeylChannelSpec: negative probability");
      sum += v;
    }
  }
  if (std::abs(sum - 1.0) > 1e-9)
    throw std::invalid_argument("WeylChannelSpec: probabilities do not sum to 1 within 1e-9");
}

std::vector<double> WeylChannelSpec::flattened() const {
  std::vector<double> out;
  out.reserve(n * n);
  for (const auto& row : pi) out.insert(out.end(), row.begin(), row.end());
  return out;
}

std::vector<double> WeylChannelSpec::chain_order() const {
  std::vector<double> out;
  out.reserve(n * n);
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t j = 0; j < n; ++j) out.push_back(pi[j][k]);
  return out;
}

std::pair<ComplexMatrix, ComplexMatrix> weyl_generators(std::size_t n) {
  if (n < 2) throw std::invalid_argument("weyl_generators: n must be >= 2");
  ComplexMatrix u(n, n), v(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    u(j, j) = root_of_unity(n, j);
    v((j + 1) % n, j) = 1.0;
  }
  return {u, v};
}

ComplexMatrix weyl_operator(std::size_t n, std::size_t j, std::size_t k) {
  if (n < 1) throw std::invalid_argument("weyl_operator: n must be positive");
  j %= n;
  k %= n;
  ComplexMatrix w(n, n);
  for (std::size_t m = 0; m < n; ++m) {
    const std::size_t t = (m + k) % n;
    w(t, m) = root_of_unity(n, j * t);
  }
  return w;
}

std::size_t tensor_power_dim(std::size_t n, std::size_t big_n) {
  if (big_n < 1) throw std::invalid_argument("tensor power: N must be >= 1");
  std::size_t d = 1;
  for (std::size_t s = 0; s < big_n; ++s) {
    d *= n;
    if (d > kMaxTensorDim)
      throw std::length_error("tensor power: n^N exceeds the dimension guard of 243");
  }
  return d;
}

TensorPowerApplier::TensorPowerApplier(const WeylChannelSpec& spec, std::size_t big_n) {
  const std::size_t n = spec.n;
  dim_ = tensor_power_dim(n, big_n);
  site_terms_.resize(big_n);
  std::size_t stride = dim_ / n;  // site 0 is the most significant digit
  for (std::size_t s = 0; s < big_n; ++s) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) {
        const double w = spec.pi[j][k];
        if (w == 0.0) continue;
        Term term;
        term.weight = w;
        term.target.resize(dim_);
        term.phase.resize(dim_);
        for (std::size_t i = 0; i < dim_; ++i) {
          const std::size_t digit = (i / stride) % n;
          const std::size_t shifted = (digit + k) % n;
          term.target[i] = static_cast<std::uint32_t>(i - digit * stride + shifted * stride);
          term.phase[i] = root_of_unity(n, j * shifted);
        }
        site_terms_[s].push_back(std::move(term));
      }
    }
    stride /= n;
  }
}

ComplexMatrix TensorPowerApplier::apply_matrix(const ComplexMatrix& rho) const {
  if (rho.rows() != dim_ || rho.cols() != dim_)
    throw std::invalid_argument("TensorPowerApplier: dimension mismatch");
  ComplexMatrix cur = rho;
  for (const auto& terms : site_terms_) {
    ComplexMatrix next(dim_, dim_);
    for (const auto& t : terms) {
      for (std::size_t r = 0; r < dim_; ++r) {
        const cdouble pr = t.weight * t.phase[r];
        const std::uint32_t tr = t.target[r];
        for (std::size_t c = 0; c < dim_; ++c) {
          next(tr, t.target[c]) += pr * std::conj(t.phase[c]) * cur(r, c);
        }
      }
    }
    cur = std::move(next);
  }
  return cur;
}

DensityMatrix TensorPowerApplier::apply(const DensityMatrix& rho) const {
  return DensityMatrix(apply_matrix(rho.matrix()));
}

DensityMatrix apply_weyl_channel(const WeylChannelSpec& spec, const DensityMatrix& rho) {
  if (rho.dim() != spec.n)
    throw std::invalid_argument("apply_weyl_channel: dimension mismatch");
  return TensorPowerApplier(spec, 1).apply(rho);
}

DensityMatrix apply_tensor_power(const WeylChannelSpec& spec, std::size_t big_n,
                                 const DensityMatrix& rho) {
  const std::size_t d = tensor_power_dim(spec.n, big_n);
  if (rho.dim() != d) throw std::invalid_argument("apply_tensor_power: dimension mismatch");
  return TensorPowerApplier(spec, big_n).apply(rho);
}

WeylChannelSpec qc_spec_from_p(const ProbVector& p) {
  const std::size_t n = p.size();
  std::vector<std::vector<double>> pi(n, std::vector<double>(n));
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t k = 0; k < n; ++k) pi[j][k] = p[k] / static_cast<double>(n);
  return WeylChannelSpec(n, std::move(pi));
}

ProbVector marginals(const WeylChannelSpec& spec) {
  std::vector<double> p(spec.n, 0.0);
  for (std::size_t j = 0; j < spec.n; ++j)
    for (std::size_t k = 0; k < spec.n; ++k) p[k] += spec.pi[j][k];
  return ProbVector(std::move(p));
}

DeformationCertificate deformation_certificate(const WeylChannelSpec& spec) {
  const auto chain = spec.chain_order();
  bool ordered = true;
  std::optional<std::size_t> violation;
  for (std::size_t c = 0; c + 1 < chain.size(); ++c) {
    if (chain[c] < chain[c + 1] - 1e-12) {
      ordered = false;
      violation = c + 1;  // 1-based pair position
      break;
    }
  }
  return DeformationCertificate{ordered, marginals(spec), violation};
}

DensityMatrix expectation_E(const DensityMatrix& rho) {
  // Averaging over U^j . U^j* kills off-diagonals exactly.
  const std::size_t n = rho.dim();
  ComplexMatrix out(n, n);
  for (std::size_t i = 0; i < n; ++i) out(i, i) = rho.matrix()(i, i);
  return DensityMatrix(std::move(out));
}

ComplexMatrix xi_k(std::size_t n, std::size_t k, const DensityMatrix& rho) {
  if (rho.dim() != n) throw std::invalid_argument("xi_k: dimension mismatch");
  k %= n;
  ComplexMatrix out(n, n);
  for (std::size_t a = 0; a < n; ++a) {
    const std::size_t src = (a + n - k) % n;
    out(a, a) = rho.matrix()(src, src);
  }
  return out;
}

double check_invariance(const WeylChannelSpec& spec, const DensityMatrix& rho) {
  const ComplexMatrix x = apply_weyl_channel(spec, rho).matrix();
  const std::size_t n = spec.n;
  double worst = 0.0;
  for (std::size_t j = 1; j < n; ++j) {
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b) {
        const cdouble conjugated =
            root_of_unity(n, j * a) * std::conj(root_of_unity(n, j * b)) * x(a, b);
        worst = std::max(worst, std::abs(conjugated - x(a, b)));
      }
  }
  return worst;
}

double check_weyl_covariance(const WeylChannelSpec& spec, const DensityMatrix& rho, std::size_t a,
                             std::size_t b) {
  const ComplexMatrix w = weyl_operator(spec.n, a, b);
  const DensityMatrix displaced(w * rho.matrix() * w.adjoint());
  const ComplexMatrix lhs = apply_weyl_channel(spec, displaced).matrix();
  const ComplexMatrix phi = apply_weyl_channel(spec, rho).matrix();
  const ComplexMatrix rhs = w * phi * w.adjoint();
  return (lhs - rhs).max_abs();
}

WeylChannelSpec random_deformation(const ProbVector& p, double perturbation, std::uint64_t seed) {
  const std::size_t n = p.size();
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (p[k] < p[k + 1] - 1e-12)
      throw std::invalid_argument("random_deformation: marginals must be non-increasing");
  }
  Rng rng = Rng::derive(seed, 0x6465666FULL);  // "defo"
  // Per-column descending candidates with the exact column sums.
  std::vector<std::vector<double>> cand(n, std::vector<double>(n, 0.0));
  for (std::size_t k = 0; k < n; ++k) {
    std::vector<double> u(n);
    double sum = 0.0;
    for (auto& x : u) {
      x = 1.0 + rng.uniform();
      sum += x;
    }
    std::sort(u.begin(), u.end(), std::greater<>());
    for (std::size_t j = 0; j < n; ++j) cand[j][k] = p[k] * u[j] / sum;
  }
  // Mixing toward the q-c table keeps columns descending for any t; the
  // cross-column boundaries cap t.
  double t = std::clamp(perturbation, 0.0, 1.0);
  for (std::size_t k = 0; k + 1 < n; ++k) {
    const double base_gap = (p[k] - p[k + 1]) / static_cast<double>(n);
    const double delta = cand[n - 1][k] - cand[0][k + 1];
    if (delta >= 0.0) continue;
    const double t_max = base_gap / (base_gap - delta);
    t = std::min(t, 0.999 * t_max);
  }
  std::vector<std::vector<double>> pi(n, std::vector<double>(n));
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t k = 0; k < n; ++k)
      pi[j][k] = (1.0 - t) * p[k] / static_cast<double>(n) + t * cand[j][k];
  return WeylChannelSpec(n, std::move(pi));
}

}  // namespace weylcap
