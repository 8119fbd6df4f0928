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

#include "gaussamp/pauli.hpp"

#include <cmath>
#include <stdexcept>

namespace gaussamp {

namespace {
constexpr Complex kI{0.0, 1.0};
}  // namespace

Mat2 sigma0() { return Mat2::Identity(); }

Mat2 sigma1() {
  Mat2 s;
  s << 0, 1, 1, 0;
  return s;
}

Mat2 sigma2() {
  Mat2 s;
  s << 0, -kI, kI, 0;
  return s;
}

Mat2 sigma3() {
  Mat2 s;
  s << 1, 0, 0, -1;
  return s;
}

PauliCoeffs decompose(const Mat2& a) {
  return {
      0.5 * (a(0, 0) + a(1, 1)),
      0.5 * (a(0, 1) + a(1, 0)),
      0.5 * kI * (a(0, 1) - a(1, 0)),
      0.5 * (a(0, 0) - a(1, 1)),
  };
}

Mat2 compose(const PauliCoeffs& c) {
  Mat2 a;
  a(0, 0) = c.c0 + c.c3;
  a(1, 1) = c.c0 - c.c3;
  a(0, 1) = c.c1 - kI * c.c2;
  a(1, 0) = c.c1 + kI * c.c2;
  return a;
}

Mat2 pauli_exp(double a0, const Eigen::Vector3d& v, double t) {
  if (!std::isfinite(t)) {
    throw std::invalid_argument("pauli_exp: t must be finite");
  }
  Mat2 vsig;
  vsig(0, 0) = v.z();
  vsig(1, 1) = -v.z();
  vsig(0, 1) = v.x() - kI * v.y();
  vsig(1, 0) = v.x() + kI * v.y();

  const double vn = v.norm();
  const double scale = std::exp(-a0 * t);
  if (vn < 1e-12) {
    // sinh(|v|t)/|v| -> t
    return scale * (Mat2::Identity() - t * vsig);
  }
  const double ch = std::cosh(vn * t);
  const double sh = std::sinh(vn * t);
  return scale * (ch * Mat2::Identity() - (sh / vn) * vsig);
}

Mat2 mat_exp_oracle(const Mat2& a, double tol) {
  if (!(tol > 0.0)) {
    throw std::invalid_argument("mat_exp_oracle: tol must be positive");
  }
  // Scale so ||B||_1 <= 1/4, sum the Taylor series, square back up. The
  // squaring steps amplify the truncation error by at most 2^s (to first
  // order), so the series is cut against tol/2^s.
  const double norm = a.cwiseAbs().rowwise().sum().maxCoeff();
  int s = 0;
  if (norm > 0.25) {
    s = static_cast<int>(std::ceil(std::log2(norm / 0.25)));
  }
  const double cut = tol / std::ldexp(1.0, s) / 16.0;

  const Mat2 b = a / std::ldexp(1.0, s);
  Mat2 sum = Mat2::Identity();
  Mat2 term = Mat2::Identity();
  for (int i = 1; i <= 64; ++i) {
    term = (term * b) / static_cast<double>(i);
    sum += term;
    if (term.cwiseAbs().maxCoeff() < cut) {
      break;
    }
  }
  for (int i = 0; i < s; ++i) {
    sum = sum * sum;
  }
  return sum;
}

}  // namespace gaussamp
