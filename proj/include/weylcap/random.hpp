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

#include "weylcap/linalg.hpp"

namespace weylcap {

/// Counter-based splittable generator (splitmix64 core). Every stochastic
/// operation takes an explicit seed so runs reproduce bit-for-bit.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next_u64();
  /// Uniform in [0, 1).
  double uniform();
  /// Standard normal (Box-Muller, no cached spare).
  double normal();
  cdouble complex_normal();

  /// Independent stream derived from (seed, stream_id).
  static Rng derive(std::uint64_t seed, std::uint64_t stream_id);
  static std::uint64_t mix(std::uint64_t a, std::uint64_t b);

 private:
  std::uint64_t state_;
};

/// Haar-distributed unit vector: normalized iid standard complex Gaussians.
PureState random_pure_state(std::size_t dim, std::uint64_t seed);

/// Random CPTP channel: orthonormalized Gaussian blocks of a
/// (kraus_count*dim) x dim matrix.
KrausChannel random_channel(std::size_t dim, std::size_t kraus_count, std::uint64_t seed);

/// Full-rank random state: partial trace of a Haar pure state on dim^2.
DensityMatrix random_density_matrix(std::size_t dim, std::uint64_t seed);

/// (G + G*)/2 for a Gaussian matrix G.
ComplexMatrix random_hermitian(std::size_t dim, std::uint64_t seed);

}  // namespace weylcap
