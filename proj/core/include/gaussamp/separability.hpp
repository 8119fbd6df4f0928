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

#ifndef GAUSSAMP_SEPARABILITY_HPP_
#define GAUSSAMP_SEPARABILITY_HPP_

#include <utility>

#include <Eigen/Dense>

#include "gaussamp/channel.hpp"
#include "gaussamp/propagator.hpp"

namespace gaussamp {

enum class Decision { separable, entangled };

const char* decision_name(Decision d);

/// Separability decision with the signed criterion value (LHS - RHS).
/// Positive or zero margin means separable; every criterion here is an
/// ">= 0" inequality.
struct Verdict {
  Decision decision;
  double margin;
};

inline Verdict verdict_from_margin(double margin) {
  return {margin >= 0.0 ? Decision::separable : Decision::entangled, margin};
}

/// State with X = diag(alpha_a, alpha_b) and Y = beta_c sigma1; closed under
/// the eta0 = eta3 = 0 dynamics.
struct XpSymmetricState {
  double alpha_a;
  double alpha_b;
  double beta_c;

  ComplexCM to_cm() const;
};

/// PPT separability condition on the complex CM blocks
/// gamma_i = [[alpha_i, beta_i*], [beta_i, alpha_i*]], i = a, b, c:
///   det ga det gb + (1/4 - |det gc|)^2 - tr(ga s3 gc s3 gb s3 gc^dag s3)
///     >= (det ga + det gb)/4.
/// Necessary and sufficient for two-mode Gaussian states.
Verdict ppt_general(const ComplexCM& cm);

/// Reduced criterion for x-p symmetric states:
/// margin = (alpha_a - 1/2)(alpha_b - 1/2) - beta_c^2.
Verdict ppt_xp_symmetric(const XpSymmetricState& s);

/// Weak inter-mode stationary criterion (k < 1):
/// margin = 4 nbar0^2 (1-gamma3p^2) - [1 - gamma3p^2 (2 nbar0+1)^2] eta1p^2.
Verdict weak_intermode_criterion(double gamma3p, double eta1p, double nbar0);

/// Blocks of the state evolved from vacuum for eta0 = eta3 = 0 at
/// dimensionless time tprime, via
///   alpha_a' = alpha_a + Ma^2(1/2-alpha_a) + Nc^2(1/2-alpha_b)
///              + 2 Ma Nc beta_c   (and companions),
/// with M = diag(Ma, Mb), N = Nc sigma1 expressed through K1 =
/// e^{(k-1)tprime}, K2 = e^{-(k+1)tprime}.
XpSymmetricState strong_finite_time_state(const ChannelParams& params,
                                          double tprime);

/// The long closed-form polynomial in eta1p^2, K1, K2, gamma3p, nbar0 for the
/// finite-time criterion.
double strong_finite_time_polynomial(double gamma3p, double eta1p,
                                     double nbar0, double tprime);

/// Finite-time strong-amplifier criterion (k > 1), evaluated on both routes.
/// The polynomial margin is the closed form above; the state margin is
/// ppt_xp_symmetric(strong_finite_time_state(...)). When the routes disagree
/// in sign and the state route is numerically significant, the state route
/// decides and sign_conflict is set.
struct StrongFiniteTime {
  Verdict verdict;          // margin = polynomial_margin
  double polynomial_margin;
  double state_margin;
  bool state_reliable;      // state margin exceeds its cancellation noise
  bool sign_conflict;       // reliable routes disagreed; state route decided
};

StrongFiniteTime strong_finite_time_criterion(const ChannelParams& params,
                                              double tprime);

/// Asymptotic strong-amplifier criterion (k > 1):
/// margin = 2 nbar0 (nbar0 + gamma3p^2
///          + sqrt(nbar0^2 + (2 nbar0+1) gamma3p^2)) - eta1p^2.
Verdict strong_asymptotic_criterion(double gamma3p, double eta1p,
                                    double nbar0);

/// Coefficients of the stationary criterion for eta3 = 0,
/// s2 u^2 + s1 u + s0 >= 0 with u = eta1p^2.
struct QuarticCoeffs {
  double s0, s1, s2;
};

QuarticCoeffs symmetric_quartic_coeffs(double eta0p, double gamma3p,
                                       double nbar0);

/// Stationary criterion for eta3 = 0 in the weak symmetric regime (C2 > B1):
/// margin = s2 eta1p^4 + s1 eta1p^2 + s0.
Verdict symmetric_quartic_criterion(const ChannelParams& params);

/// Real 4x4 covariance matrix in (x1, p1, x2, p2) ordering under
/// a = (x + i p)/sqrt(2):
///   Vxx = Re(X+Y), Vpp = Re(X-Y), Vxp = Im(X) + Im(Y).
/// Vacuum maps to I/2.
Eigen::Matrix4d complex_to_real_cm(const ComplexCM& cm);

/// Moduli of the eigenvalue pairs of (symplectic form) * V, descending.
/// Uses the two-mode invariant form: nu^2 are the roots of
/// x^2 - Delta x + det V with Delta = det A + det B + 2 det C.
/// A state is physical iff the smaller one is >= 1/2.
std::pair<double, double> symplectic_eigenvalues(const Eigen::Matrix4d& v);

}  // namespace gaussamp

#endif  // GAUSSAMP_SEPARABILITY_HPP_
