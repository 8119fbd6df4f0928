// Copyright 2026 The Gaussamp Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <doctest.h>

#include <random>

#include "gaussamp/pauli.hpp"

using namespace gaussamp;

namespace {

double max_abs_diff(const Mat2& a, const Mat2& b) {
  return (a - b).cwiseAbs().maxCoeff();
}

Mat2 random_mat2(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(-3.0, 3.0);
  Mat2 m;
  for (int r = 0; r < 2; ++r) {
    for (int c = 0; c < 2; ++c) {
      m(r, c) = Complex(u(rng), u(rng));
    }
  }
  return m;
}

}  // namespace

TEST_CASE("decompose on basis elements and a hand case") {
  PauliCoeffs c = decompose(Mat2::Identity());
  CHECK(std::abs(c.c0 - 1.0) == 0.0);
  CHECK(std::abs(c.c1) == 0.0);
  CHECK(std::abs(c.c2) == 0.0);
  CHECK(std::abs(c.c3) == 0.0);

  c = decompose(sigma1());
  CHECK(std::abs(c.c0) == 0.0);
  CHECK(std::abs(c.c1 - 1.0) == 0.0);

  Mat2 a;
  a << 2, 3, 3, -2;
  c = decompose(a);
  CHECK(c.c0 == Complex(0));
  CHECK(c.c1 == Complex(3));
  CHECK(c.c2 == Complex(0));
  CHECK(c.c3 == Complex(2));
}

TEST_CASE("compose basis cases") {
  CHECK(max_abs_diff(compose({1, 0, 0, 0}), Mat2::Identity()) == 0.0);
  CHECK(max_abs_diff(compose({0, 0, 1, 0}), sigma2()) == 0.0);
}

TEST_CASE("compose(decompose) round-trips random complex matrices") {
  std::mt19937_64 rng(991);
  for (int i = 0; i < 100; ++i) {
    const Mat2 m = random_mat2(rng);
    CHECK(max_abs_diff(compose(decompose(m)), m) <= 1e-14);
  }
}

TEST_CASE("pauli_exp trivial cases") {
  CHECK(max_abs_diff(pauli_exp(0.0, Eigen::Vector3d::Zero(), 2.7),
                     Mat2::Identity()) == 0.0);
  CHECK(max_abs_diff(pauli_exp(1.0, Eigen::Vector3d::Zero(), 1.0),
                     std::exp(-1.0) * Mat2::Identity()) <= 1e-16);
}

TEST_CASE("pauli_exp matches the series exponential") {
  const Eigen::Vector3d v(0.5, 0.0, 0.2);
  const Mat2 got = pauli_exp(0.3, v, 1.7);
  Mat2 gen;
  gen << v.z(), v.x(), v.x(), -v.z();
  gen += 0.3 * Mat2::Identity();
  const Mat2 want = mat_exp_oracle((-gen * 1.7).eval(), 1e-14);
  CHECK(max_abs_diff(got, want) <= 1e-12);
}

TEST_CASE("pauli_exp one-parameter group and determinant") {
  std::mt19937_64 rng(17);
  std::uniform_real_distribution<double> u(-1.5, 1.5);
  for (int i = 0; i < 50; ++i) {
    const double a0 = u(rng);
    const Eigen::Vector3d v(u(rng), u(rng), u(rng));
    const double t = std::abs(u(rng));
    const double s = std::abs(u(rng));

    const Mat2 lhs = pauli_exp(a0, v, t) * pauli_exp(a0, v, s);
    const Mat2 rhs = pauli_exp(a0, v, t + s);
    CHECK(max_abs_diff(lhs, rhs) <= 1e-12 * std::max(1.0, rhs.cwiseAbs().maxCoeff()));

    const Complex det = pauli_exp(a0, v, t).determinant();
    CHECK(std::abs(det - std::exp(-2.0 * a0 * t)) <= 1e-12);
  }
}

TEST_CASE("pauli_exp agrees with the oracle over a parameter box") {
  std::mt19937_64 rng(23);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (int i = 0; i < 200; ++i) {
    const double a0 = 5.0 * u(rng) * 0.2;
    const Eigen::Vector3d v(u(rng), u(rng), u(rng));
    const double t = 2.5 * (u(rng) + 1.0);
    Mat2 gen;
    gen << v.z(), v.x() - Complex(0, 1) * v.y(), v.x() + Complex(0, 1) * v.y(),
        -v.z();
    gen += a0 * Mat2::Identity();
    const Mat2 want = mat_exp_oracle((-gen * t).eval(), 1e-14);
    const Mat2 got = pauli_exp(a0, v, t);
    CHECK(max_abs_diff(got, want) <=
          1e-12 * std::max(1.0, want.cwiseAbs().maxCoeff()));
  }
}

TEST_CASE("mat_exp_oracle exact small cases") {
  CHECK(max_abs_diff(mat_exp_oracle(Mat2::Zero(), 1e-14), Mat2::Identity()) ==
        0.0);

  Mat2 d;
  d << 1, 0, 0, -1;
  Mat2 want;
  want << std::exp(1.0), 0, 0, std::exp(-1.0);
  CHECK(max_abs_diff(mat_exp_oracle(d, 1e-14), want) <= 1e-14);

  Mat2 nil;
  nil << 0, 1, 0, 0;
  Mat2 exp_nil;
  exp_nil << 1, 1, 0, 1;
  CHECK(max_abs_diff(mat_exp_oracle(nil, 1e-14), exp_nil) <= 1e-15);
}
