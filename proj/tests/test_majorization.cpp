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

#include <algorithm>
#include <catch2/catch_amalgamated.hpp>
#include <cmath>
#include <cstdint>
#include <numeric>

#include "weylcap/majorization.hpp"
#include "weylcap/random.hpp"

using namespace weylcap;

namespace {

WeylChannelSpec qutrit_deformation() {
  return WeylChannelSpec(3, {{1.0 / 4.0, 1.0 / 8.0, 1.0 / 12.0},
                             {1.0 / 8.0, 1.0 / 8.0, 1.0 / 24.0},
                             {1.0 / 8.0, 1.0 / 12.0, 1.0 / 24.0}});
}

ProbVector random_distribution(std::size_t len, std::uint64_t seed) {
  Rng rng = Rng::derive(seed, 777);
  std::vector<double> w(len);
  double sum = 0.0;
  for (auto& v : w) {
    v = rng.uniform() + 1e-6;
    sum += v;
  }
  for (auto& v : w) v /= sum;
  return ProbVector(std::move(w));
}

}  // namespace

TEST_CASE("descending sort") {
  CHECK(sort_descending({0.2, 0.5, 0.3}) == std::vector<double>{0.5, 0.3, 0.2});

  const std::vector<double> sorted{0.5, 0.3, 0.2};
  CHECK(sort_descending(sorted) == sorted);

  // The worked qutrit table flattens to its own chain order once sorted.
  const auto s = sort_descending(qutrit_deformation().flattened());
  const std::vector<double> expected{1.0 / 4.0,  1.0 / 8.0,  1.0 / 8.0,
                                     1.0 / 8.0,  1.0 / 8.0,  1.0 / 12.0,
                                     1.0 / 12.0, 1.0 / 24.0, 1.0 / 24.0};
  CHECK(s == expected);
}

TEST_CASE("majorization order") {
  CHECK(majorizes(ProbVector({1.0, 0.0, 0.0}), random_distribution(3, 1), 1e-12));
  CHECK(majorizes(random_distribution(3, 2),
                  ProbVector({1.0 / 3.0, 1.0 / 3.0, 1.0 / 3.0}), 1e-12));
  CHECK(majorizes(ProbVector({0.5, 0.3, 0.2}), ProbVector({0.4, 0.35, 0.25}), 1e-12));
  CHECK_FALSE(majorizes(ProbVector({0.4, 0.35, 0.25}), ProbVector({0.5, 0.3, 0.2}), 1e-12));
  CHECK_THROWS_AS(majorizes(ProbVector({0.5, 0.5}), random_distribution(3, 3), 1e-12),
                  std::invalid_argument);
}

TEST_CASE("majorization is reflexive and transitive") {
  for (std::uint64_t s = 0; s < 200; ++s) {
    const auto a = random_distribution(4, 3 * s);
    CHECK(majorizes(a, a, 1e-12));
    // Mixing toward uniform only ever moves down the order.
    Rng rng = Rng::derive(s, 999);
    const double t1 = rng.uniform();
    const double t2 = rng.uniform() * t1;
    std::vector<double> b(4), c(4);
    for (std::size_t i = 0; i < 4; ++i) {
      b[i] = (1.0 - t1) * a[i] + t1 * 0.25;
      c[i] = (1.0 - t2 / std::max(t1, 1e-12)) * b[i] + (t2 / std::max(t1, 1e-12)) * 0.25;
    }
    const ProbVector pb(b), pc(c);
    CHECK(majorizes(a, pb, 1e-12));
    CHECK(majorizes(pb, pc, 1e-12));
    CHECK(majorizes(a, pc, 1e-12));
  }
}

TEST_CASE("block distribution") {
  // Worked qutrit table: block sums of the sorted chain equal the marginals.
  const auto b = block_distribution(qutrit_deformation().flattened(), 3);
  CHECK_THAT(b[0], Catch::Matchers::WithinAbs(1.0 / 2.0, 1e-15));
  CHECK_THAT(b[1], Catch::Matchers::WithinAbs(1.0 / 3.0, 1e-15));
  CHECK_THAT(b[2], Catch::Matchers::WithinAbs(1.0 / 6.0, 1e-15));

  const auto u = block_distribution(std::vector<double>(9, 1.0 / 9.0), 3);
  for (std::size_t i = 0; i < 3; ++i)
    CHECK_THAT(u[i], Catch::Matchers::WithinAbs(1.0 / 3.0, 1e-15));

  CHECK_THROWS_AS(block_distribution(std::vector<double>(8, 0.125), 3),
                  std::invalid_argument);

  // Output is itself non-increasing.
  for (std::uint64_t s = 0; s < 20; ++s) {
    const auto d = block_distribution(random_distribution(16, 40 + s).weights, 4);
    for (std::size_t i = 0; i + 1 < 4; ++i) CHECK(d[i] >= d[i + 1] - 1e-15);
  }
}

TEST_CASE("n=2 product enumeration oracle") {
  // Rational oracle: entries of (0.4, 0.3, 0.2, 0.1) tensored with itself are
  // integer products over 100; blocks of the sorted 16 values sum to
  // (49, 28, 15, 8)/100.
  const std::vector<int> base{4, 3, 2, 1};
  std::vector<int> prods;
  for (int a : base)
    for (int b : base) prods.push_back(a * b);
  std::sort(prods.begin(), prods.end(), std::greater<>());
  std::vector<int> blocks(4, 0);
  for (std::size_t i = 0; i < 16; ++i) blocks[i / 4] += prods[i];
  CHECK(blocks == std::vector<int>{49, 28, 15, 8});

  const std::vector<double> pi{0.4, 0.3, 0.2, 0.1};
  std::vector<double> prod_dist;
  for (double a : pi)
    for (double b : pi) prod_dist.push_back(a * b);
  const auto d = block_distribution(prod_dist, 4);
  CHECK_THAT(d[0], Catch::Matchers::WithinAbs(0.49, 1e-12));
  CHECK_THAT(d[1], Catch::Matchers::WithinAbs(0.28, 1e-12));
  CHECK_THAT(d[2], Catch::Matchers::WithinAbs(0.15, 1e-12));
  CHECK_THAT(d[3], Catch::Matchers::WithinAbs(0.08, 1e-12));

  // Frozen from the rational oracle: H2(0.49, 0.28, 0.15, 0.08).
  CHECK_THAT(entropy_lower_bound(prod_dist, 4, LogBase::two),
             Catch::Matchers::WithinAbs(1.7205553986408657, 1e-10));
}

TEST_CASE("entropy lower bound") {
  CHECK_THAT(entropy_lower_bound(qutrit_deformation().flattened(), 3, LogBase::two),
             Catch::Matchers::WithinAbs(1.4591479170272448, 1e-12));
  CHECK_THAT(entropy_lower_bound(std::vector<double>(9, 1.0 / 9.0), 3, LogBase::two),
             Catch::Matchers::WithinAbs(std::log2(3.0), 1e-12));
}

TEST_CASE("block sums are invariant under tie shuffles") {
  // Distribution with many exact ties.
  std::vector<double> pi{0.25, 0.125, 0.125, 0.125, 0.125, 0.125, 0.0625, 0.0375, 0.025};
  for (std::uint64_t s = 0; s < 10; ++s) {
    std::vector<double> shuffled = pi;
    Rng rng = Rng::derive(s, 31);
    for (std::size_t i = shuffled.size(); i > 1; --i)
      std::swap(shuffled[i - 1], shuffled[rng.next_u64() % i]);
    const auto a = block_distribution(pi, 3);
    const auto b = block_distribution(shuffled, 3);
    for (std::size_t i = 0; i < 3; ++i)
      CHECK_THAT(a[i], Catch::Matchers::WithinAbs(b[i], 1e-15));
  }
}

TEST_CASE("Schur concavity of entropy") {
  for (std::uint64_t s = 0; s < 200; ++s) {
    const auto lam = random_distribution(5, 1000 + s);
    // Convex combinations of permutations of lam are majorized by lam.
    Rng rng = Rng::derive(s, 61);
    std::vector<double> mu(5, 0.0);
    double wsum = 0.0;
    for (int perm = 0; perm < 3; ++perm) {
      std::vector<std::size_t> idx(5);
      std::iota(idx.begin(), idx.end(), 0);
      for (std::size_t i = 5; i > 1; --i) std::swap(idx[i - 1], idx[rng.next_u64() % i]);
      const double w = rng.uniform() + 1e-3;
      wsum += w;
      for (std::size_t i = 0; i < 5; ++i) mu[i] += w * lam[idx[i]];
    }
    for (auto& v : mu) v /= wsum;
    const ProbVector pmu(mu);
    REQUIRE(majorizes(lam, pmu, 1e-12));
    CHECK(shannon_entropy(pmu.weights, LogBase::two) >=
          shannon_entropy(lam.weights, LogBase::two) - 1e-9);
  }
}

TEST_CASE("block majorization of channel output spectra") {
  const auto spec = qutrit_deformation();
  for (std::uint64_t s = 0; s < 100; ++s) {
    CHECK(prop2_verify(spec, random_density_matrix(3, 5000 + s)));
  }

  // Equality case: |e_0><e_0| gives spectrum equal to the block distribution.
  const DensityMatrix e0 = DensityMatrix::pure({1.0, 0.0, 0.0});
  CHECK(prop2_verify(spec, e0));
  const auto lambda = hermitian_eigenvalues(apply_weyl_channel(spec, e0).matrix());
  const auto blocks = block_distribution(spec.flattened(), 3);
  for (std::size_t i = 0; i < 3; ++i)
    CHECK_THAT(lambda[i], Catch::Matchers::WithinAbs(blocks[i], 1e-12));

  CHECK(prop2_verify(spec, DensityMatrix::maximally_mixed(3)));

  // Random Weyl tables, not only deformations.
  for (std::uint64_t s = 0; s < 50; ++s) {
    const auto pi = random_distribution(4, 7000 + s);
    const WeylChannelSpec w(2, {{pi[0], pi[1]}, {pi[2], pi[3]}});
    CHECK(prop2_verify(w, random_density_matrix(2, 7100 + s)));
  }
}
