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

#include "irs/complex_mat.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "irs/error.hpp"

namespace irs {

ComplexMat::ComplexMat(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {}

ComplexMat::ComplexMat(std::size_t rows, std::size_t cols, std::vector<Complex> entries)
    : rows_(rows), cols_(cols), data_(std::move(entries)) {
  if (data_.size() != rows_ * cols_) {
    throw std::invalid_argument("ComplexMat: expected " + std::to_string(rows_ * cols_) +
                                " entries, got " + std::to_string(data_.size()));
  }
  if (!all_finite()) throw std::invalid_argument("ComplexMat: non-finite entry");
}

ComplexMat::ComplexMat(std::initializer_list<std::initializer_list<Complex>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw std::invalid_argument("ComplexMat: ragged initializer");
    data_.insert(data_.end(), r.begin(), r.end());
  }
  if (!all_finite()) throw std::invalid_argument("ComplexMat: non-finite entry");
}

ComplexMat ComplexMat::identity(std::size_t n) {
  ComplexMat m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

ComplexMat ComplexMat::column(std::span<const Complex> values) {
  return ComplexMat(values.size(), 1, std::vector<Complex>(values.begin(), values.end()));
}

ComplexMat ComplexMat::diagonal(std::span<const Complex> values) {
  ComplexMat m(values.size(), values.size());
  for (std::size_t i = 0; i < values.size(); ++i) m(i, i) = values[i];
  return m;
}

ComplexMat ComplexMat::col(std::size_t c) const {
  ComplexMat out(rows_, 1);
  for (std::size_t r = 0; r < rows_; ++r) out(r, 0) = (*this)(r, c);
  return out;
}

ComplexMat ComplexMat::adjoint() const {
  ComplexMat out(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) out(c, r) = std::conj((*this)(r, c));
  return out;
}

bool ComplexMat::all_finite() const {
  return std::all_of(data_.begin(), data_.end(), [](const Complex& z) {
    return std::isfinite(z.real()) && std::isfinite(z.imag());
  });
}

ComplexMat& ComplexMat::operator+=(const ComplexMat& other) {
  if (rows_ != other.rows_ || cols_ != other.cols_)
    throw std::invalid_argument("ComplexMat: shape mismatch in +=");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += other.data_[i];
  return *this;
}

ComplexMat& ComplexMat::operator-=(const ComplexMat& other) {
  if (rows_ != other.rows_ || cols_ != other.cols_)
    throw std::invalid_argument("ComplexMat: shape mismatch in -=");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= other.data_[i];
  return *this;
}

ComplexMat& ComplexMat::operator*=(Complex s) {
  for (auto& z : data_) z *= s;
  return *this;
}

ComplexMat operator*(const ComplexMat& a, const ComplexMat& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("ComplexMat: shape mismatch in *");
  ComplexMat out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Complex aik = a(i, k);
      if (aik == Complex{}) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) += aik * b(k, j);
    }
  }
  return out;
}

ComplexMat operator*(Complex s, const ComplexMat& a) {
  ComplexMat out = a;
  out *= s;
  return out;
}

ComplexMat operator+(ComplexMat a, const ComplexMat& b) { return a += b; }
ComplexMat operator-(ComplexMat a, const ComplexMat& b) { return a -= b; }

ComplexMat kron(const ComplexMat& a, const ComplexMat& b) {
  ComplexMat out(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const Complex aij = a(i, j);
      for (std::size_t k = 0; k < b.rows(); ++k)
        for (std::size_t l = 0; l < b.cols(); ++l)
          out(i * b.rows() + k, j * b.cols() + l) = aij * b(k, l);
    }
  return out;
}

double frob_norm_sq(const ComplexMat& a) {
  double s = 0.0;
  for (const auto& z : a.entries()) s += std::norm(z);
  return s;
}

double frob_norm(const ComplexMat& a) { return std::sqrt(frob_norm_sq(a)); }

double max_offdiag_abs(const ComplexMat& a) {
  double m = 0.0;
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c)
      if (r != c) m = std::max(m, std::abs(a(r, c)));
  return m;
}

namespace {

double norm1(const ComplexMat& a) {
  double best = 0.0;
  for (std::size_t c = 0; c < a.cols(); ++c) {
    double s = 0.0;
    for (std::size_t r = 0; r < a.rows(); ++r) s += std::abs(a(r, c));
    best = std::max(best, s);
  }
  return best;
}

}  // namespace

ComplexMat inverse(const ComplexMat& a, double max_condition) {
  const std::size_t n = a.rows();
  if (a.cols() != n) throw std::invalid_argument("inverse: matrix is not square");
  ComplexMat work = a;
  ComplexMat inv = ComplexMat::identity(n);
  const double scale = norm1(a);
  if (!(scale > 0.0)) throw SingularGram("inverse: zero matrix");

  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    for (std::size_t r = col + 1; r < n; ++r)
      if (std::abs(work(r, col)) > std::abs(work(pivot, col))) pivot = r;
    if (std::abs(work(pivot, col)) <= scale * 1e-300) throw SingularGram("inverse: zero pivot");
    if (pivot != col) {
      for (std::size_t c = 0; c < n; ++c) {
        std::swap(work(col, c), work(pivot, c));
        std::swap(inv(col, c), inv(pivot, c));
      }
    }
    const Complex d = 1.0 / work(col, col);
    for (std::size_t c = 0; c < n; ++c) {
      work(col, c) *= d;
      inv(col, c) *= d;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col) continue;
      const Complex f = work(r, col);
      if (f == Complex{}) continue;
      for (std::size_t c = 0; c < n; ++c) {
        work(r, c) -= f * work(col, c);
        inv(r, c) -= f * inv(col, c);
      }
    }
  }

  const double cond = scale * norm1(inv);
  if (!std::isfinite(cond) || cond > max_condition)
    throw SingularGram("inverse: condition number " + std::to_string(cond) + " exceeds guard");
  return inv;
}

ComplexMat pinv_wide(const ComplexMat& h, double max_condition) {
  if (h.rows() < h.cols())
    throw std::invalid_argument("pinv_wide: expected rows >= cols (one column per user)");
  const ComplexMat gram = h.adjoint() * h;
  return h * inverse(gram, max_condition);
}

}  // namespace irs
