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

#include "weylcap/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace weylcap {

double log_in_base(double x, LogBase base) {
  return base == LogBase::two ? std::log2(x) : std::log(x);
}

DensityMatrix::DensityMatrix(ComplexMatrix m) : m_(std::move(m)) {
  if (m_.rows() != m_.cols() || m_.rows() == 0)
    throw std::invalid_argument("DensityMatrix: matrix must be square and nonempty");
  if (!m_.is_hermitian(1e-10))
    throw std::invalid_argument("DensityMatrix: matrix is not Hermitian within 1e-10");
  if (std::abs(m_.trace() - cdouble{1.0, 0.0}) > 1e-10)
    throw std::invalid_argument("DensityMatrix: trace differs from 1 by more than 1e-10");
}

DensityMatrix DensityMatrix::pure(const std::vector<cdouble>& amplitudes) {
  return DensityMatrix(outer(amplitudes, amplitudes));
}

DensityMatrix DensityMatrix::maximally_mixed(std::size_t dim) {
  ComplexMatrix m = ComplexMatrix::identity(dim);
  m *= cdouble{1.0 / static_cast<double>(dim), 0.0};
  return DensityMatrix(std::move(m));
}

DensityMatrix DensityMatrix::diagonal(const std::vector<double>& probs) {
  ComplexMatrix m(probs.size(), probs.size());
  for (std::size_t i = 0; i < probs.size(); ++i) m(i, i) = probs[i];
  return DensityMatrix(std::move(m));
}

void DensityMatrix::validate_psd() const {
  const auto vals = hermitian_eigenvalues(m_);
  if (!vals.empty() && vals.back() < -1e-9)
    throw std::domain_error("DensityMatrix: eigenvalue below -1e-9, state is not PSD");
}

PureState::PureState(std::vector<cdouble> amps) : dim(amps.size()), amplitudes(std::move(amps)) {
  double n2 = 0.0;
  for (const auto& z : amplitudes) n2 += std::norm(z);
  if (std::abs(std::sqrt(n2) - 1.0) > 1e-12)
    throw std::invalid_argument("PureState: vector is not normalized within 1e-12");
}

DensityMatrix PureState::projector() const { return DensityMatrix::pure(amplitudes); }

KrausChannel::KrausChannel(std::size_t in, std::size_t out, std::vector<ComplexMatrix> ops)
    : in_dim(in), out_dim(out), kraus_ops(std::move(ops)) {
  if (kraus_ops.empty()) throw std::invalid_argument("KrausChannel: no Kraus operators");
  for (const auto& k : kraus_ops) {
    if (k.rows() != out_dim || k.cols() != in_dim)
      throw std::invalid_argument("KrausChannel: operator shape mismatch");
  }
  if (completeness_defect() > 1e-10)
    throw std::invalid_argument("KrausChannel: completeness relation violated beyond 1e-10");
}

double KrausChannel::completeness_defect() const {
  ComplexMatrix s(in_dim, in_dim);
  for (const auto& k : kraus_ops) s += k.adjoint() * k;
  s -= ComplexMatrix::identity(in_dim);
  return s.max_abs();
}

DensityMatrix KrausChannel::apply(const DensityMatrix& rho) const {
  if (rho.dim() != in_dim) throw std::invalid_argument("KrausChannel::apply: dimension mismatch");
  ComplexMatrix out(out_dim, out_dim);
  for (const auto& k : kraus_ops) out += k * rho.matrix() * k.adjoint();
  return DensityMatrix(std::move(out));
}

KrausChannel KrausChannel::identity(std::size_t dim) {
  return KrausChannel(dim, dim, {ComplexMatrix::identity(dim)});
}

KrausChannel KrausChannel::depolarizing(std::size_t dim) {
  std::vector<ComplexMatrix> ops;
  ops.reserve(dim * dim);
  const double w = 1.0 / std::sqrt(static_cast<double>(dim));
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j < dim; ++j) {
      ComplexMatrix k(dim, dim);
      k(i, j) = w;
      ops.push_back(std::move(k));
    }
  return KrausChannel(dim, dim, std::move(ops));
}

DensityMatrix partial_trace(const DensityMatrix& rho, std::size_t dim_a, std::size_t dim_b,
                            Subsystem keep) {
  if (rho.dim() != dim_a * dim_b)
    throw std::invalid_argument("partial_trace: dim(rho) != dim_a * dim_b");
  const ComplexMatrix& m = rho.matrix();
  if (keep == Subsystem::A) {
    ComplexMatrix out(dim_a, dim_a);
    for (std::size_t a = 0; a < dim_a; ++a)
      for (std::size_t a2 = 0; a2 < dim_a; ++a2)
        for (std::size_t b = 0; b < dim_b; ++b)
          out(a, a2) += m(a * dim_b + b, a2 * dim_b + b);
    return DensityMatrix(std::move(out));
  }
  ComplexMatrix out(dim_b, dim_b);
  for (std::size_t b = 0; b < dim_b; ++b)
    for (std::size_t b2 = 0; b2 < dim_b; ++b2)
      for (std::size_t a = 0; a < dim_a; ++a)
        out(b, b2) += m(a * dim_b + b, a * dim_b + b2);
  return DensityMatrix(std::move(out));
}

namespace {

double off_diagonal_norm(const ComplexMatrix& a) {
  double s = 0.0;
  for (std::size_t p = 0; p < a.rows(); ++p)
    for (std::size_t q = p + 1; q < a.cols(); ++q) s += 2.0 * std::norm(a(p, q));
  return std::sqrt(s);
}

// One cyclic sweep of complex Jacobi rotations, A <- G* A G, Q <- Q G.
void jacobi_sweep(ComplexMatrix& a, ComplexMatrix* q) {
  const std::size_t n = a.rows();
  for (std::size_t p = 0; p < n; ++p) {
    for (std::size_t qq = p + 1; qq < n; ++qq) {
      const cdouble apq = a(p, qq);
      const double r = std::abs(apq);
      if (r < 1e-300) continue;
      const cdouble e = apq / r;
      const double app = a(p, p).real();
      const double aqq = a(qq, qq).real();
      const double theta = (aqq - app) / (2.0 * r);
      const double t = (theta >= 0.0 ? 1.0 : -1.0) /
                       (std::abs(theta) + std::sqrt(theta * theta + 1.0));
      const double c = 1.0 / std::sqrt(t * t + 1.0);
      const double s = t * c;
      const cdouble ec = std::conj(e);
      // Column update: A <- A G with
      // G(p,p)=c, G(p,q)=s, G(q,p)=-s*conj(e), G(q,q)=c*conj(e).
      for (std::size_t i = 0; i < n; ++i) {
        const cdouble aip = a(i, p);
        const cdouble aiq = a(i, qq);
        a(i, p) = c * aip - s * ec * aiq;
        a(i, qq) = s * aip + c * ec * aiq;
      }
      // Row update: A <- G* A.
      for (std::size_t j = 0; j < n; ++j) {
        const cdouble apj = a(p, j);
        const cdouble aqj = a(qq, j);
        a(p, j) = c * apj - s * e * aqj;
        a(qq, j) = s * apj + c * e * aqj;
      }
      a(p, qq) = 0.0;
      a(qq, p) = 0.0;
      a(p, p) = cdouble{a(p, p).real(), 0.0};
      a(qq, qq) = cdouble{a(qq, qq).real(), 0.0};
      if (q) {
        for (std::size_t i = 0; i < n; ++i) {
          const cdouble qip = (*q)(i, p);
          const cdouble qiq = (*q)(i, qq);
          (*q)(i, p) = c * qip - s * ec * qiq;
          (*q)(i, qq) = s * qip + c * ec * qiq;
        }
      }
    }
  }
}

std::vector<double> jacobi_diagonalize(ComplexMatrix a, ComplexMatrix* q) {
  const std::size_t n = a.rows();
  if (!a.is_hermitian(1e-9))
    throw std::invalid_argument("hermitian_eig: input is not Hermitian within 1e-9");
  // Work on the exactly Hermitian part so roundoff asymmetry cannot drift.
  for (std::size_t p = 0; p < n; ++p) {
    a(p, p) = cdouble{a(p, p).real(), 0.0};
    for (std::size_t c = p + 1; c < n; ++c) {
      const cdouble v = 0.5 * (a(p, c) + std::conj(a(c, p)));
      a(p, c) = v;
      a(c, p) = std::conj(v);
    }
  }
  const double threshold = 1e-12 * std::max(1.0, a.frobenius_norm());
  constexpr int kMaxSweeps = 100;
  bool converged = false;
  for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
    if (off_diagonal_norm(a) <= threshold) {
      converged = true;
      break;
    }
    jacobi_sweep(a, q);
  }
  if (!converged && off_diagonal_norm(a) > threshold)
    throw std::runtime_error("hermitian_eig: Jacobi iteration did not converge in 100 sweeps");
  std::vector<double> vals(n);
  for (std::size_t i = 0; i < n; ++i) vals[i] = a(i, i).real();
  return vals;
}

}  // namespace

EigenDecomposition hermitian_eig(const ComplexMatrix& m, double /*tol*/) {
  const std::size_t n = m.rows();
  ComplexMatrix q = ComplexMatrix::identity(n);
  std::vector<double> vals = jacobi_diagonalize(m, &q);

  std::vector<std::size_t> idx(n);
  std::iota(idx.begin(), idx.end(), 0);
  std::stable_sort(idx.begin(), idx.end(),
                   [&](std::size_t a, std::size_t b) { return vals[a] > vals[b]; });

  EigenDecomposition out;
  out.eigenvalues.resize(n);
  out.eigenvectors = ComplexMatrix(n, n);
  for (std::size_t c = 0; c < n; ++c) {
    out.eigenvalues[c] = vals[idx[c]];
    for (std::size_t r = 0; r < n; ++r) out.eigenvectors(r, c) = q(r, idx[c]);
  }
  return out;
}

std::vector<double> hermitian_eigenvalues(const ComplexMatrix& m) {
  std::vector<double> vals = jacobi_diagonalize(m, nullptr);
  std::sort(vals.begin(), vals.end(), std::greater<>());
  return vals;
}

namespace {

// -sum lambda ln lambda in nats; tiny negative eigenvalues clamp to zero,
// anything below -1e-9 is a real PSD violation.
double entropy_from_eigenvalues(const std::vector<double>& vals) {
  double s = 0.0;
  for (double v : vals) {
    if (v < -1e-9)
      throw std::domain_error("entropy: eigenvalue below -1e-9, state violates PSD invariant");
    const double lam = std::clamp(v, 0.0, 1.0);
    if (lam > 0.0) s -= lam * std::log(lam);
  }
  return s;
}

}  // namespace

double von_neumann_entropy(const DensityMatrix& rho, LogBase base) {
  const double nats = entropy_from_eigenvalues(hermitian_eigenvalues(rho.matrix()));
  return base == LogBase::two ? nats / std::log(2.0) : nats;
}

double shannon_entropy(const std::vector<double>& p, LogBase base) {
  const double nats = entropy_from_eigenvalues(p);
  return base == LogBase::two ? nats / std::log(2.0) : nats;
}

double relative_entropy(const DensityMatrix& rho, const DensityMatrix& sigma, LogBase base) {
  if (rho.dim() != sigma.dim())
    throw std::invalid_argument("relative_entropy: dimension mismatch");
  const std::size_t n = rho.dim();
  const auto sig = hermitian_eig(sigma.matrix());

  // Tr(rho log rho) from rho's spectrum.
  double tr_rho_log_rho = 0.0;
  for (double v : hermitian_eigenvalues(rho.matrix())) {
    const double lam = std::clamp(v, 0.0, 1.0);
    if (lam > 0.0) tr_rho_log_rho += lam * std::log(lam);
  }

  // Tr(rho log sigma) in sigma's eigenbasis, with the two-tier support test.
  double tr_rho_log_sigma = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<cdouble> v(n);
    for (std::size_t r = 0; r < n; ++r) v[r] = sig.eigenvectors(r, i);
    const auto rv = mat_vec(rho.matrix(), v);
    double w = 0.0;
    for (std::size_t r = 0; r < n; ++r) w += (std::conj(v[r]) * rv[r]).real();
    const double s = sig.eigenvalues[i];
    if (s < 1e-12) {
      if (w > 1e-9) return std::numeric_limits<double>::infinity();
      continue;
    }
    tr_rho_log_sigma += w * std::log(s);
  }
  const double nats = tr_rho_log_rho - tr_rho_log_sigma;
  return base == LogBase::two ? nats / std::log(2.0) : nats;
}

}  // namespace weylcap
