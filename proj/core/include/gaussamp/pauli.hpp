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

#ifndef GAUSSAMP_PAULI_HPP_
#define GAUSSAMP_PAULI_HPP_

#include <complex>

#include <Eigen/Dense>

namespace gaussamp {

using Complex = std::complex<double>;
using Mat2 = Eigen::Matrix2cd;

/// Coefficients over the Pauli basis (sigma0 = I, sigma1, sigma2, sigma3):
/// A = c0*sigma0 + c1*sigma1 + c2*sigma2 + c3*sigma3.
struct PauliCoeffs {
  Complex c0, c1, c2, c3;
};

Mat2 sigma0();
Mat2 sigma1();
Mat2 sigma2();
Mat2 sigma3();

/// Exact linear inversion of the four trace formulas:
/// c0 = (A11+A22)/2, c3 = (A11-A22)/2, c1 = (A12+A21)/2, c2 = i(A12-A21)/2.
PauliCoeffs decompose(const Mat2& a);

/// Inverse of decompose.
Mat2 compose(const PauliCoeffs& c);

/// Closed-form exp(-(a0*sigma0 + v.sigma) t)
///   = e^{-a0 t} [cosh(|v| t) I - sinh(|v| t) (v/|v|).sigma].
/// For |v| < 1e-12 the sinh(|v|t)/|v| -> t limit is used.
Mat2 pauli_exp(double a0, const Eigen::Vector3d& v, double t);

/// exp(A) by scaling-and-squaring with a truncated Taylor series; the series
/// is cut once the term norm falls below tol scaled for the squaring steps.
/// Independent of the Pauli decomposition path by construction.
Mat2 mat_exp_oracle(const Mat2& a, double tol);

}  // namespace gaussamp

#endif  // GAUSSAMP_PAULI_HPP_
