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

// Acceptance gate: one pass/fail line per criterion, nonzero exit when any
// criterion fails. Tolerances are pinned here, not configurable.

#include <sys/wait.h>

#include <chrono>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <json.hpp>
#include <sstream>
#include <string>
#include <vector>

#include "weylcap/capacity.hpp"
#include "weylcap/random.hpp"

namespace fs = std::filesystem;
using json = nlohmann::json;
using namespace weylcap;

namespace {

const std::string kBin = WEYLCAP_BIN;
constexpr std::size_t kThreads = 4;

struct Check {
  bool ok = true;
  std::ostringstream why;

  void expect(bool cond, const std::string& what) {
    if (!cond) {
      if (!ok) why << "; ";
      ok = false;
      why << what;
    }
  }
  void expect_near(double got, double want, double tol, const std::string& what) {
    std::ostringstream os;
    os.precision(17);
    os << what << ": got " << got << ", want " << want << " +- " << tol;
    expect(std::abs(got - want) <= tol, os.str());
  }
};

WeylChannelSpec qutrit_example() {
  return WeylChannelSpec(3, {{1.0 / 4.0, 1.0 / 8.0, 1.0 / 12.0},
                             {1.0 / 8.0, 1.0 / 8.0, 1.0 / 24.0},
                             {1.0 / 8.0, 1.0 / 12.0, 1.0 / 24.0}});
}

constexpr double kCapacity = 0.1258145836939113;
constexpr double kMinEntropy = 1.4591479170272448;

// 1. Qutrit example reproduction through the CLI, under 30 s.
void criterion_1(Check& c) {
  const fs::path out = fs::temp_directory_path() / "weylcap-acceptance-example.json";
  const auto t0 = std::chrono::steady_clock::now();
  const std::string cmd = kBin + " example-qutrit --restarts 64 --threads " +
                          std::to_string(kThreads) + " --out " + out.string() +
                          " >/dev/null 2>/dev/null";
  const int rc = std::system(cmd.c_str());
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  c.expect(WIFEXITED(rc) && WEXITSTATUS(rc) == 0, "example-qutrit exited nonzero");
  c.expect(secs < 30.0, "runtime " + std::to_string(secs) + " s exceeds 30 s");
  if (!c.ok) return;

  std::ifstream in(out);
  const json report = json::parse(in);
  fs::remove(out);
  const auto& r = report.at("results");
  const auto m = r.at("describe").at("marginals").get<std::vector<double>>();
  c.expect(m.size() == 3, "marginal count");
  c.expect_near(m[0], 0.5, 1e-10, "p_0");
  c.expect_near(m[1], 0.3333333333, 1e-9, "p_1");
  c.expect_near(m[2], 0.1666666667, 1e-9, "p_2");
  c.expect(r.at("describe").at("certificate").at("ordered").get<bool>(),
           "certificate not ordered");
  c.expect_near(r.at("capacity").at("capacity").get<double>(), kCapacity, 1e-9, "capacity");
  c.expect_near(r.at("min_entropy_N1").at("value").get<double>(), kMinEntropy, 1e-6,
                "N=1 minimal output entropy");
  c.expect(r.at("min_entropy_N1").at("restarts_used").get<std::size_t>() == 64,
           "restart count");
}

// 2. Single-copy tightness for 20 seeded random deformations, n in {2,3,4}.
void criterion_2(Check& c) {
  OptimizerConfig cfg;
  cfg.restarts = 16;
  for (std::uint64_t s = 0; s < 20 && c.ok; ++s) {
    const std::size_t n = 2 + s % 3;
    std::vector<double> w(n);
    Rng rng = Rng::derive(s, 12001);
    double sum = 0.0;
    for (auto& v : w) {
      v = rng.uniform() + 0.05;
      sum += v;
    }
    for (auto& v : w) v /= sum;
    std::sort(w.begin(), w.end(), std::greater<>());
    const auto spec = random_deformation(ProbVector(w), 0.6, 100 + s);
    const double h = shannon_entropy(marginals(spec).weights, LogBase::two);

    cfg.seed = 500 + s;
    const auto res = min_output_entropy(spec, 1, cfg, LogBase::two, kThreads);
    c.expect_near(res.value, h, 1e-5, "numeric min at seed " + std::to_string(s));
    c.expect_near(entropy_lower_bound(spec.flattened(), n, LogBase::two), h, 1e-12,
                  "block bound at seed " + std::to_string(s));
  }
}

// 3. Algebraic identities: resolution of identity, E o Phi = Phi for q-c
// specs, sum_k Xi_k = I, and Weyl covariance.
void criterion_3(Check& c) {
  for (std::size_t n = 2; n <= 4 && c.ok; ++n) {
    std::vector<std::vector<double>> uniform(n, std::vector<double>(n, 1.0 / double(n * n)));
    const WeylChannelSpec mix(n, uniform);
    for (std::uint64_t s = 0; s < 50 && c.ok; ++s) {
      // sum_jk W rho W* = n I is the uniform channel times n^2 / n.
      const auto rho = random_density_matrix(n, 9000 + 100 * n + s);
      const auto out = apply_weyl_channel(mix, rho);
      ComplexMatrix diff = out.matrix() - cdouble{1.0 / double(n), 0.0} * ComplexMatrix::identity(n);
      c.expect(diff.max_abs() <= 1e-10,
               "resolution of identity residual at n=" + std::to_string(n));

      ComplexMatrix xi_sum(n, n);
      for (std::size_t k = 0; k < n; ++k) xi_sum += xi_k(n, k, rho);
      c.expect((xi_sum - ComplexMatrix::identity(n)).max_abs() <= 1e-10,
               "sum_k Xi_k != I at n=" + std::to_string(n));
    }
  }

  const auto qc = qc_spec_from_p(ProbVector({0.5, 0.3, 0.2}));
  for (std::uint64_t s = 0; s < 50 && c.ok; ++s) {
    const auto rho = random_density_matrix(3, 9500 + s);
    const auto phi = apply_weyl_channel(qc, rho);
    c.expect((expectation_E(phi).matrix() - phi.matrix()).max_abs() <= 1e-10,
             "E o Phi != Phi for q-c spec");
  }

  const auto spec = qutrit_example();
  for (std::uint64_t s = 0; s < 10 && c.ok; ++s) {
    const auto rho = random_density_matrix(3, 9600 + s);
    for (std::size_t a = 0; a < 3; ++a)
      for (std::size_t b = 0; b < 3; ++b)
        c.expect(check_weyl_covariance(spec, rho, a, b) <= 1e-10,
                 "covariance residual at (a,b)=(" + std::to_string(a) + "," +
                     std::to_string(b) + ")");
  }
}

// 4. Entanglement bound over 100 seeded samples per ancilla dimension, plus
// the exact factorization of Upsilon on the maximally mixed input.
void criterion_4(Check& c) {
  const ProbVector p({1.0 / 2.0, 1.0 / 3.0, 1.0 / 6.0});
  for (std::size_t k_dim = 1; k_dim <= 3 && c.ok; ++k_dim) {
    const auto rep = prop1_verify(p, 100, k_dim, 77 + k_dim, LogBase::two);
    std::ostringstream os;
    os << "min_margin " << rep.min_margin << " at k_dim " << k_dim;
    c.expect(rep.min_margin >= -1e-8, os.str());
  }

  const auto omega = random_channel(2, 4, 81);
  const auto xi = random_pure_state(6, 82);
  const auto out = upsilon_apply(p, omega, xi, DensityMatrix::maximally_mixed(3));
  const auto reduced = partial_trace(xi.projector(), 3, 2, Subsystem::B);
  ComplexMatrix expected =
      tensor_product(ComplexMatrix::identity(3), omega.apply(reduced).matrix());
  expected *= cdouble{1.0 / 3.0, 0.0};
  c.expect((out.matrix() - expected).max_abs() <= 1e-10,
           "Upsilon(I/n) does not factor as (1/n) I (x) Omega(Tr_H xi)");
}

// 5. Data processing on 200 random triples.
void criterion_5(Check& c) {
  for (std::uint64_t s = 0; s < 200 && c.ok; ++s) {
    const std::size_t n = 2 + s % 3;
    const auto chan = random_channel(n, n * n, 40000 + s);
    const auto rho = random_density_matrix(n, 41000 + s);
    const auto sigma = random_density_matrix(n, 42000 + s);
    const double drop = dpi_check(chan, rho, sigma, LogBase::two);
    std::ostringstream os;
    os << "dpi margin " << drop << " at seed " << s;
    c.expect(drop >= -1e-8, os.str());
  }
}

// 6. Additivity bracket at N=2 for the worked qutrit table, >= 128 restarts.
void criterion_6(Check& c) {
  OptimizerConfig cfg;
  cfg.restarts = 128;
  cfg.seed = 7;
  const auto rep = additivity_report(qutrit_example(), 2, cfg, LogBase::two, kThreads);
  c.expect(rep.block_bound_at_n <= rep.numeric_min_at_n + 1e-9,
           "numeric min fell below the block bound");
  c.expect(rep.numeric_min_at_n <= 2.918295834 + 1e-6, "numeric min above 2 H(p)");
  c.expect_near(rep.gap_numeric, rep.numeric_min_at_n - rep.scaled_single, 1e-12,
                "gap_numeric inconsistent");
  c.expect_near(rep.gap_bound, rep.scaled_single - rep.block_bound_at_n, 1e-12,
                "gap_bound inconsistent");
  c.expect_near(rep.scaled_single, 2.0 * rep.single_copy_min, 1e-12,
                "scaled_single inconsistent");
  // A restart beating the proved additive value signals an implementation bug.
  c.expect(rep.numeric_min_at_n >= rep.scaled_single - 1e-4,
           "red alert: numeric min below scaled single-copy value");
}

// 7. Oracle regression for the documented n=2 product case. The reference
// decimals come from the exact enumeration oracle: sorted products of
// (4,3,2,1)/10 with itself give blocks (49,28,15,8)/100.
void criterion_7(Check& c) {
  const std::vector<double> pi{0.4, 0.3, 0.2, 0.1};
  std::vector<double> prod;
  for (double a : pi)
    for (double b : pi) prod.push_back(a * b);
  const auto blocks = block_distribution(prod, 4);
  const std::vector<double> want{0.49, 0.28, 0.15, 0.08};
  for (std::size_t i = 0; i < 4; ++i)
    c.expect_near(blocks[i], want[i], 1e-12, "block " + std::to_string(i));
  c.expect_near(entropy_lower_bound(prod, 4, LogBase::two), 1.7205553986408657, 1e-8,
                "block entropy");
  // Chain order pi_00, pi_10, pi_01, pi_11 gives marginals (0.7, 0.3).
  c.expect_near(2.0 * shannon_entropy({0.7, 0.3}, LogBase::two), 1.7625817984613854, 1e-8,
                "scaled single-copy entropy");
}

// 8. Numerical kernels: eigensolver, entropy additivity, gradient oracle.
void criterion_8(Check& c) {
  for (std::uint64_t s = 0; s < 100 && c.ok; ++s) {
    const std::size_t dim = 2 + s % 80;  // up to 81
    const auto m = random_hermitian(dim, 60000 + s);
    const auto eig = hermitian_eig(m);
    ComplexMatrix recon(dim, dim);
    for (std::size_t i = 0; i < dim; ++i)
      for (std::size_t j = 0; j < dim; ++j) {
        cdouble v = 0.0;
        for (std::size_t k = 0; k < dim; ++k)
          v += eig.eigenvectors(i, k) * eig.eigenvalues[k] * std::conj(eig.eigenvectors(j, k));
        recon(i, j) = v;
      }
    const double scale = std::max(1.0, m.max_abs());
    c.expect((recon - m).max_abs() <= 1e-9 * scale,
             "eigensolver reconstruction at dim " + std::to_string(dim));
  }

  for (std::uint64_t s = 0; s < 20 && c.ok; ++s) {
    const auto a = random_density_matrix(3, 61000 + s);
    const auto b = random_density_matrix(4, 62000 + s);
    const DensityMatrix ab(tensor_product(a.matrix(), b.matrix()));
    c.expect_near(von_neumann_entropy(ab, LogBase::two),
                  von_neumann_entropy(a, LogBase::two) + von_neumann_entropy(b, LogBase::two),
                  1e-8, "entropy additivity on products");
  }

  const auto spec = qutrit_example();
  for (std::uint64_t s = 0; s < 20 && c.ok; ++s) {
    const auto psi = random_pure_state(3, 63000 + s);
    std::vector<double> x(6);
    for (std::size_t i = 0; i < 3; ++i) {
      x[2 * i] = psi.amplitudes[i].real();
      x[2 * i + 1] = psi.amplitudes[i].imag();
    }
    const auto g = output_entropy_gradient(spec, 1, x, LogBase::two, 1e-6);
    const auto oracle = output_entropy_gradient(spec, 1, x, LogBase::two, 3e-6);
    double gn = 0.0, dn = 0.0;
    for (std::size_t i = 0; i < 6; ++i) {
      gn += oracle[i] * oracle[i];
      dn += (g[i] - oracle[i]) * (g[i] - oracle[i]);
    }
    c.expect(std::sqrt(dn) <= 1e-4 * std::max(1.0, std::sqrt(gn)),
             "gradient oracle mismatch at seed " + std::to_string(s));
  }
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<void(Check&)>>> criteria{
      {"qutrit example reproduction via CLI", criterion_1},
      {"single-copy tightness for random deformations", criterion_2},
      {"algebraic identities", criterion_3},
      {"entanglement bound suite", criterion_4},
      {"data processing on random triples", criterion_5},
      {"additivity bracket at N=2", criterion_6},
      {"n=2 enumeration oracle regression", criterion_7},
      {"numerical kernels", criterion_8},
  };

  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Check c;
    try {
      criteria[i].second(c);
    } catch (const std::exception& e) {
      c.expect(false, std::string("exception: ") + e.what());
    }
    std::cout << "criterion " << (i + 1) << " (" << criteria[i].first << "): "
              << (c.ok ? "PASS" : "FAIL") << "\n";
    if (!c.ok) {
      std::cout << "    " << c.why.str() << "\n";
      ++failures;
    }
    std::cout.flush();
  }
  return failures == 0 ? 0 : 1;
}
