// Copyright 2026 The Authors.
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
#include <initializer_list>
#include <span>
#include <vector>

namespace irs {

using Complex = std::complex<double>;

// Dense complex matrix, row-major. Vectors are n x 1 (or 1 x n) matrices.
class ComplexMat {
 public:
  ComplexMat() = default;
  ComplexMat(std::size_t rows, std::size_t cols);
  // Throws std::invalid_argument on size mismatch or non-finite entries.
  ComplexMat(std::size_t rows, std::size_t cols, std::vector<Complex> entries);
  ComplexMat(std::initializer_list<std::initializer_list<Complex>> rows);

  static ComplexMat identity(std::size_t n);
  static ComplexMat column(std::span<const Complex> values);
  static ComplexMat diagonal(std::span<const Complex> values);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::size_t size() const { return data_.size(); }
  bool empty() const { return data_.empty(); }

  Complex& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Complex& operator()(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }

  std::span<const Complex> entries() const { return data_; }
  std::span<Complex> entries() { return data_; }

  // Column c copied into an n x 1 matrix.
  ComplexMat col(std::size_t c) const;

  // Conjugate (Hermitian) transpose.
  ComplexMat adjoint() const;

  bool all_finite() const;

  ComplexMat& operator+=(const ComplexMat& other);
  ComplexMat& operator-=(const ComplexMat& other);
  ComplexMat& operator*=(Complex s);

  friend bool operator==(const ComplexMat&, const ComplexMat&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Complex> data_;
};

ComplexMat operator*(const ComplexMat& a, const ComplexMat& b);
ComplexMat operator*(Complex s, const ComplexMat& a);
ComplexMat operator+(ComplexMat a, const ComplexMat& b);
ComplexMat operator-(ComplexMat a, const ComplexMat& b);

// [kron(a,b)]_{i*b.rows+k, j*b.cols+l} = a_ij * b_kl
ComplexMat kron(const ComplexMat& a, const ComplexMat& b);

double frob_norm(const ComplexMat& a);
double frob_norm_sq(const ComplexMat& a);

// Largest entry magnitude off the main diagonal.
double max_offdiag_abs(const ComplexMat& a);

// Inverse of a small square matrix by Gauss-Jordan elimination with partial
// pivoting. Throws SingularGram if a pivot vanishes or the 1-norm condition
// number exceeds max_condition.
ComplexMat inverse(const ComplexMat& a, double max_condition = 1e12);

// For a tall matrix h (rows >= cols) with full column rank, returns
// X = h (h^H h)^{-1}, so that h^H X = I. This is the pseudo-inverse used by
// the zero-forcing precoder. Throws SingularGram on a degenerate Gram matrix.
ComplexMat pinv_wide(const ComplexMat& h, double max_condition = 1e12);

}  // namespace irs
