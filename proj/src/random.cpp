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

#include "weylcap/random.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace weylcap {

std::uint64_t Rng::next_u64() {
  state_ += 0x9E3779B97F4A7C15ULL;
  std::uint64_t z = state_;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

double Rng::uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

double Rng::normal() {
  // Box-Muller; u1 kept away from 0.
  const double u1 = (static_cast<double>(next_u64() >> 11) + 1.0) * 0x1.0p-53;
  const double u2 = uniform();
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

cdouble Rng::complex_normal() {
  const double u1 = (static_cast<double>(next_u64() >> 11) + 1.0) * 0x1.0p-53;
  const double u2 = uniform();
  const double r = std::sqrt(-2.0 * std::log(u1));
  return {r * std::cos(2.0 * std::numbers::pi * u2), r * std::sin(2.0 * std::numbers::pi * u2)};
}

std::uint64_t Rng::mix(std::uint64_t a, std::uint64_t b) {
  Rng r(a);
  const std::uint64_t h = r.next_u64();
  Rng r2(h ^ (b + 0x9E3779B97F4A7C15ULL));
  return r2.next_u64();
}

Rng Rng::derive(std::uint64_t seed, std::uint64_t stream_id) { return Rng(mix(seed, stream_id)); }

PureState random_pure_state(std::size_t dim, std::uint64_t seed) {
  if (dim < 1) throw std::invalid_argument("random_pure_state: dim must be >= 1");
  Rng rng = Rng::derive(seed, 0x70757265ULL);  // "pure"
  std::vector<cdouble> v(dim);
  double n2 = 0.0;
  for (auto& z : v) {
    z = rng.complex_normal();
    n2 += std::norm(z);
  }
  const double inv = 1.0 / std::sqrt(n2);
  for (auto& z : v) z *= inv;
  return PureState(std::move(v));
}

KrausChannel random_channel(std::size_t dim, std::size_t kraus_count, std::uint64_t seed) {
  if (kraus_count < 1) throw std::invalid_argument("random_channel: kraus_count must be >= 1");
  Rng rng = Rng::derive(seed, 0x6368616EULL);  // "chan"
  const std::size_t rows = kraus_count * dim;
  // Gaussian rows x dim matrix, columns orthonormalized by modified
  // Gram-Schmidt with one re-orthogonalization pass.
  std::vector<std::vector<cdouble>> cols(dim, std::vector<cdouble>(rows));
  for (std::size_t c = 0; c < dim; ++c)
    for (std::size_t r = 0; r < rows; ++r) cols[c][r] = rng.complex_normal();
  for (std::size_t c = 0; c < dim; ++c) {
    for (int pass = 0; pass < 2; ++pass) {
      for (std::size_t j = 0; j < c; ++j) {
        cdouble proj = 0.0;
        for (std::size_t r = 0; r < rows; ++r) proj += std::conj(cols[j][r]) * cols[c][r];
        for (std::size_t r = 0; r < rows; ++r) cols[c][r] -= proj * cols[j][r];
      }
    }
    double n2 = 0.0;
    for (const auto& z : cols[c]) n2 += std::norm(z);
    if (n2 < 1e-24) throw std::runtime_error("random_channel: degenerate Gaussian sample");
    const double inv = 1.0 / std::sqrt(n2);
    for (auto& z : cols[c]) z *= inv;
  }
  std::vector<ComplexMatrix> ops;
  ops.reserve(kraus_count);
  for (std::size_t k = 0; k < kraus_count; ++k) {
    ComplexMatrix op(dim, dim);
    for (std::size_t r = 0; r < dim; ++r)
      for (std::size_t c = 0; c < dim; ++c) op(r, c) = cols[c][k * dim + r];
    ops.push_back(std::move(op));
  }
  return KrausChannel(dim, dim, std::move(ops));
}

DensityMatrix random_density_matrix(std::size_t dim, std::uint64_t seed) {
  const PureState psi = random_pure_state(dim * dim, Rng::mix(seed, 0x64656E73ULL));
  return partial_trace(psi.projector(), dim, dim, Subsystem::A);
}

ComplexMatrix random_hermitian(std::size_t dim, std::uint64_t seed) {
  Rng rng = Rng::derive(seed, 0x6865726DULL);  // "herm"
  ComplexMatrix g(dim, dim);
  for (std::size_t r = 0; r < dim; ++r)
    for (std::size_t c = 0; c < dim; ++c) g(r, c) = rng.complex_normal();
  ComplexMatrix h = g.adjoint();
  h += g;
  h *= cdouble{0.5, 0.0};
  return h;
}

}  // namespace weylcap
