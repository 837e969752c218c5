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

#include <doctest.h>

#include <cmath>
#include <random>

#include <Eigen/Dense>

#include "irs/complex_mat.hpp"
#include "irs/error.hpp"

using irs::Complex;
using irs::ComplexMat;

namespace {

ComplexMat random_mat(std::size_t r, std::size_t c, std::mt19937_64& rng) {
  std::normal_distribution<double> g;
  ComplexMat m(r, c);
  for (auto& v : m.entries()) v = {g(rng), g(rng)};
  return m;
}

Eigen::MatrixXcd to_eigen(const ComplexMat& m) {
  Eigen::MatrixXcd e(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) e(i, j) = m(i, j);
  return e;
}

double max_diff(const ComplexMat& a, const Eigen::MatrixXcd& b) {
  double d = 0.0;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) d = std::max(d, std::abs(a(i, j) - b(i, j)));
  return d;
}

}  // namespace

TEST_CASE("complex_mat: construction guards") {
  CHECK_THROWS_AS(ComplexMat(2, 2, std::vector<Complex>(3)), std::invalid_argument);
  CHECK_THROWS_AS(ComplexMat(1, 1, {Complex(NAN, 0.0)}), std::invalid_argument);
  const ComplexMat m{{1.0, 2.0}, {3.0, Complex(0.0, 4.0)}};
  CHECK(m.rows() == 2);
  CHECK(m(1, 1) == Complex(0.0, 4.0));
  CHECK(m.adjoint()(1, 1) == Complex(0.0, -4.0));
  CHECK(m.adjoint()(0, 1) == Complex(3.0, 0.0));
}

TEST_CASE("complex_mat: product and kron match Eigen") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 20; ++trial) {
    const auto a = random_mat(3, 4, rng);
    const auto b = random_mat(4, 2, rng);
    CHECK(max_diff(a * b, to_eigen(a) * to_eigen(b)) < 1e-12);
    const auto k = kron(a, b);
    CHECK(k.rows() == 12);
    CHECK(k.cols() == 8);
    CHECK(k(1 * 4 + 2, 3 * 2 + 1) == a(1, 3) * b(2, 1));
  }
}

TEST_CASE("complex_mat: inverse and pinv_wide match Eigen") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    const auto a = random_mat(5, 5, rng);
    CHECK(max_diff(irs::inverse(a), to_eigen(a).inverse()) < 1e-9);

    const auto h = random_mat(16, 4, rng);
    const Eigen::MatrixXcd he = to_eigen(h);
    const Eigen::MatrixXcd oracle = he * (he.adjoint() * he).inverse();
    const auto x = irs::pinv_wide(h);
    CHECK(max_diff(x, oracle) < 1e-10);
    CHECK(max_offdiag_abs(h.adjoint() * x) < 1e-12);
  }
}

TEST_CASE("complex_mat: singular Gram is rejected") {
  ComplexMat h(4, 2);
  for (std::size_t i = 0; i < 4; ++i) {
    h(i, 0) = Complex(1.0 + i, 0.5);
    h(i, 1) = 2.0 * h(i, 0);
  }
  CHECK_THROWS_AS(irs::pinv_wide(h), irs::SingularGram);
  CHECK_THROWS_AS(irs::pinv_wide(ComplexMat(2, 3)), std::invalid_argument);
}

TEST_CASE("complex_mat: norms") {
  const ComplexMat m{{Complex(3.0, 4.0), 0.0}, {1.0, Complex(0.0, -2.0)}};
  CHECK(irs::frob_norm_sq(m) == doctest::Approx(25.0 + 1.0 + 4.0));
  CHECK(irs::frob_norm(m) == doctest::Approx(std::sqrt(30.0)));
  CHECK(irs::max_offdiag_abs(m) == doctest::Approx(1.0));
}
