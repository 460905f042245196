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

#include "weylcap/optimizer.hpp"

#include <algorithm>
#include <cmath>
#include <thread>

#include "weylcap/random.hpp"

namespace weylcap {

namespace {

constexpr double kGradStep = 1e-6;
constexpr double kArmijo = 1e-4;

std::vector<double> embed(const std::vector<cdouble>& amps) {
  std::vector<double> x(2 * amps.size());
  for (std::size_t i = 0; i < amps.size(); ++i) {
    x[2 * i] = amps[i].real();
    x[2 * i + 1] = amps[i].imag();
  }
  return x;
}

std::vector<cdouble> unembed(const std::vector<double>& x) {
  std::vector<cdouble> amps(x.size() / 2);
  for (std::size_t i = 0; i < amps.size(); ++i) amps[i] = {x[2 * i], x[2 * i + 1]};
  return amps;
}

double norm2(const std::vector<double>& x) {
  double s = 0.0;
  for (double v : x) s += v * v;
  return s;
}

void normalize(std::vector<double>& x) {
  const double inv = 1.0 / std::sqrt(norm2(x));
  for (double& v : x) v *= inv;
}

// Objective: entropy of the channel output at the normalized state x.
class Objective {
 public:
  Objective(const WeylChannelSpec& spec, std::size_t big_n, LogBase base)
      : applier_(spec, big_n), base_(base) {}

  std::size_t dim() const { return applier_.dim(); }

  double operator()(const std::vector<double>& x) const {
    std::vector<cdouble> amps = unembed(x);
    double n2 = 0.0;
    for (const auto& z : amps) n2 += std::norm(z);
    const double inv = 1.0 / std::sqrt(n2);
    for (auto& z : amps) z *= inv;
    const ComplexMatrix out = applier_.apply_matrix(outer(amps, amps));
    double nats = 0.0;
    for (double v : hermitian_eigenvalues(out)) {
      const double lam = std::clamp(v, 0.0, 1.0);
      if (lam > 0.0) nats -= lam * std::log(lam);
    }
    return base_ == LogBase::two ? nats / std::log(2.0) : nats;
  }

  std::vector<double> gradient(const std::vector<double>& x, double h) const {
    std::vector<double> g(x.size());
    std::vector<double> probe = x;
    for (std::size_t i = 0; i < x.size(); ++i) {
      probe[i] = x[i] + h;
      const double fp = (*this)(probe);
      probe[i] = x[i] - h;
      const double fm = (*this)(probe);
      probe[i] = x[i];
      g[i] = (fp - fm) / (2.0 * h);
    }
    return g;
  }

 private:
  TensorPowerApplier applier_;
  LogBase base_;
};

struct RestartOutcome {
  double value = 0.0;
  std::vector<double> x;
  bool converged = false;
  std::uint64_t restart_seed = 0;
};

}  // namespace

void OptimizerConfig::validate() const {
  if (restarts < 1) throw std::invalid_argument("OptimizerConfig: restarts must be >= 1");
  if (step_tolerance <= 0.0 || value_tolerance <= 0.0)
    throw std::invalid_argument("OptimizerConfig: tolerances must be positive");
}

double output_entropy(const WeylChannelSpec& spec, std::size_t big_n, const PureState& psi,
                      LogBase base) {
  const std::size_t d = tensor_power_dim(spec.n, big_n);
  if (psi.dim != d) throw std::invalid_argument("output_entropy: state dimension mismatch");
  return von_neumann_entropy(apply_tensor_power(spec, big_n, psi.projector()), base);
}

std::vector<double> output_entropy_gradient(const WeylChannelSpec& spec, std::size_t big_n,
                                            const std::vector<double>& x, LogBase base,
                                            double h) {
  Objective f(spec, big_n, base);
  if (x.size() != 2 * f.dim())
    throw std::invalid_argument("output_entropy_gradient: embedding size mismatch");
  return f.gradient(x, h);
}

namespace {

RestartOutcome descend(const Objective& f, const OptimizerConfig& cfg,
                       std::uint64_t restart_seed) {
  RestartOutcome out;
  out.restart_seed = restart_seed;
  std::vector<double> x = embed(random_pure_state(f.dim(), restart_seed).amplitudes);
  Rng perturb_rng = Rng::derive(restart_seed, 0x70657274ULL);  // "pert"

  double fx = f(x);
  std::size_t consecutive_failures = 0;
  std::size_t perturbations = 0;

  for (std::size_t iter = 0; iter < cfg.max_iterations; ++iter) {
    std::vector<double> g = f.gradient(x, kGradStep);
    // Tangent projection on the sphere.
    double gdotx = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) gdotx += g[i] * x[i];
    double gn2 = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
      g[i] -= gdotx * x[i];
      gn2 += g[i] * g[i];
    }
    if (std::sqrt(gn2) < 1e-12) {
      out.converged = true;
      break;
    }

    double alpha = 1.0;
    bool accepted = false;
    std::vector<double> xn;
    double fn = fx;
    for (int ls = 0; ls < 40; ++ls) {
      xn = x;
      for (std::size_t i = 0; i < x.size(); ++i) xn[i] -= alpha * g[i];
      normalize(xn);
      fn = f(xn);
      if (fn <= fx - kArmijo * alpha * gn2) {
        accepted = true;
        break;
      }
      alpha *= 0.5;
    }

    if (!accepted) {
      // Entropy is non-smooth at spectral degeneracies; nudge off the
      // crossing with a small random tangent direction.
      if (++consecutive_failures >= 5) {
        if (++perturbations > 3) break;
        std::vector<double> dir(x.size());
        for (double& v : dir) v = perturb_rng.normal();
        double ddotx = 0.0;
        for (std::size_t i = 0; i < x.size(); ++i) ddotx += dir[i] * x[i];
        for (std::size_t i = 0; i < x.size(); ++i) dir[i] -= ddotx * x[i];
        const double dn = std::sqrt(norm2(dir));
        if (dn > 0.0) {
          for (std::size_t i = 0; i < x.size(); ++i)
            x[i] += cfg.step_tolerance * dir[i] / dn;
          normalize(x);
          fx = f(x);
        }
        consecutive_failures = 0;
      }
      continue;
    }

    consecutive_failures = 0;
    double step2 = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
      const double d = xn[i] - x[i];
      step2 += d * d;
    }
    const double improvement = fx - fn;
    x = std::move(xn);
    fx = fn;
    if (std::sqrt(step2) < cfg.step_tolerance || improvement < cfg.value_tolerance) {
      out.converged = true;
      break;
    }
  }
  out.value = fx;
  out.x = std::move(x);
  return out;
}

}  // namespace

EntropyResult min_output_entropy(const WeylChannelSpec& spec, std::size_t big_n,
                                 const OptimizerConfig& config, LogBase base,
                                 std::size_t threads) {
  config.validate();
  const Objective f(spec, big_n, base);
  std::vector<RestartOutcome> outcomes(config.restarts);

  auto work = [&](std::size_t first, std::size_t stride) {
    for (std::size_t r = first; r < config.restarts; r += stride) {
      outcomes[r] = descend(f, config, Rng::mix(config.seed, r));
    }
  };

  if (threads <= 1) {
    work(0, 1);
  } else {
    std::vector<std::thread> pool;
    const std::size_t count = std::min(threads, config.restarts);
    pool.reserve(count);
    for (std::size_t t = 0; t < count; ++t) pool.emplace_back(work, t, count);
    for (auto& th : pool) th.join();
  }

  std::size_t best = 0;
  for (std::size_t r = 1; r < outcomes.size(); ++r) {
    if (outcomes[r].value < outcomes[best].value) best = r;
  }
  const RestartOutcome& win = outcomes[best];
  std::vector<double> xb = win.x;
  normalize(xb);
  return EntropyResult{win.value,           PureState(unembed(xb)), base,
                       config.restarts,     win.restart_seed,       win.converged};
}

double min_output_entropy_closed_form(const WeylChannelSpec& spec, std::size_t big_n,
                                      LogBase base) {
  if (big_n < 1) throw std::invalid_argument("closed form: N must be >= 1");
  const auto cert = deformation_certificate(spec);
  if (!cert.ordered)
    throw DeformationRequired("closed form requires the deformation ordering chain");
  return static_cast<double>(big_n) * shannon_entropy(cert.marginals.weights, base);
}

}  // namespace weylcap
