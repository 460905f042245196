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

#include <vector>

#include "weylcap/matrix.hpp"

namespace weylcap {

enum class LogBase { two, e };

/// log in the requested base, as a scale factor applied to natural log.
double log_in_base(double x, LogBase base);

/// Hermitian, positive semidefinite, unit-trace matrix.
/// Construction checks Hermiticity (1e-10) and trace (1e-10); PSD is verified
/// lazily via validate_psd() since it needs an eigendecomposition.
class DensityMatrix {
 public:
  explicit DensityMatrix(ComplexMatrix m);

  static DensityMatrix pure(const std::vector<cdouble>& amplitudes);
  static DensityMatrix maximally_mixed(std::size_t dim);
  static DensityMatrix diagonal(const std::vector<double>& probs);

  std::size_t dim() const { return m_.rows(); }
  const ComplexMatrix& matrix() const { return m_; }

  /// Throws if the smallest eigenvalue is below -1e-9.
  void validate_psd() const;

 private:
  ComplexMatrix m_;
};

/// Unit vector in C^dim.
struct PureState {
  std::size_t dim;
  std::vector<cdouble> amplitudes;

  explicit PureState(std::vector<cdouble> amps);
  DensityMatrix projector() const;
};

struct EigenDecomposition {
  std::vector<double> eigenvalues;  // sorted descending
  ComplexMatrix eigenvectors;       // columns are unit eigenvectors
};

struct KrausChannel {
  std::size_t in_dim;
  std::size_t out_dim;
  std::vector<ComplexMatrix> kraus_ops;

  KrausChannel(std::size_t in_dim, std::size_t out_dim, std::vector<ComplexMatrix> ops);

  /// max-entry norm of (sum K*K - I).
  double completeness_defect() const;
  DensityMatrix apply(const DensityMatrix& rho) const;

  static KrausChannel identity(std::size_t dim);
  static KrausChannel depolarizing(std::size_t dim);
};

enum class Subsystem { A, B };

/// Reduced state of rho on A (x) B.
DensityMatrix partial_trace(const DensityMatrix& rho, std::size_t dim_a, std::size_t dim_b,
                            Subsystem keep);

/// Cyclic Jacobi eigensolver for complex Hermitian matrices.
/// Sweeps until the off-diagonal Frobenius norm drops below the internal
/// threshold (1e-12 relative to the matrix scale), capped at 100 sweeps.
EigenDecomposition hermitian_eig(const ComplexMatrix& m, double tol = 1e-9);

/// Eigenvalues only (same solver, skips accumulating eigenvectors).
std::vector<double> hermitian_eigenvalues(const ComplexMatrix& m);

/// -sum lambda log lambda, eigenvalues clamped to [0,1], 0 log 0 := 0.
double von_neumann_entropy(const DensityMatrix& rho, LogBase base);

/// Shannon entropy of a probability vector in the requested base.
double shannon_entropy(const std::vector<double>& p, LogBase base);

/// Tr(rho log rho) - Tr(rho log sigma), computed in the eigenbasis of sigma.
/// Returns +infinity when the support of rho leaks outside the support of
/// sigma (sigma-eigenvalue < 1e-12 carrying rho-weight > 1e-9).
double relative_entropy(const DensityMatrix& rho, const DensityMatrix& sigma, LogBase base);

}  // namespace weylcap
