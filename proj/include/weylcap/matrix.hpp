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

#include <complex>
#include <cstddef>
#include <vector>

namespace weylcap {

using cdouble = std::complex<double>;

/// Dense complex matrix, row-major storage.
class ComplexMatrix {
 public:
  ComplexMatrix() = default;
  ComplexMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), a_(rows * cols, cdouble{0.0, 0.0}) {}
  ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<cdouble> entries);

  static ComplexMatrix identity(std::size_t n);
  static ComplexMatrix diagonal(const std::vector<cdouble>& d);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  cdouble& operator()(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
  const cdouble& operator()(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }

  const std::vector<cdouble>& entries() const { return a_; }
  std::vector<cdouble>& entries() { return a_; }

  ComplexMatrix adjoint() const;
  cdouble trace() const;

  /// Largest absolute entry.
  double max_abs() const;
  double frobenius_norm() const;

  bool approx_equal(const ComplexMatrix& other, double tol) const;
  bool is_hermitian(double tol) const;

  ComplexMatrix& operator+=(const ComplexMatrix& rhs);
  ComplexMatrix& operator-=(const ComplexMatrix& rhs);
  ComplexMatrix& operator*=(cdouble s);

  friend ComplexMatrix operator+(ComplexMatrix lhs, const ComplexMatrix& rhs) {
    lhs += rhs;
    return lhs;
  }
  friend ComplexMatrix operator-(ComplexMatrix lhs, const ComplexMatrix& rhs) {
    lhs -= rhs;
    return lhs;
  }
  friend ComplexMatrix operator*(cdouble s, ComplexMatrix m) {
    m *= s;
    return m;
  }
  friend ComplexMatrix operator*(const ComplexMatrix& lhs, const ComplexMatrix& rhs);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<cdouble> a_;
};

/// Kronecker product with row-major block convention:
/// result[a*rB+c][b*cB+d] = A[a][b] * B[c][d].
ComplexMatrix tensor_product(const ComplexMatrix& a, const ComplexMatrix& b);

/// A * v for a column vector v.
std::vector<cdouble> mat_vec(const ComplexMatrix& m, const std::vector<cdouble>& v);

/// Outer product |u><v|.
ComplexMatrix outer(const std::vector<cdouble>& u, const std::vector<cdouble>& v);

}  // namespace weylcap
