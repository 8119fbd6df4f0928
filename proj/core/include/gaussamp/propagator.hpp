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

#ifndef GAUSSAMP_PROPAGATOR_HPP_
#define GAUSSAMP_PROPAGATOR_HPP_

#include <Eigen/Dense>

#include "gaussamp/channel.hpp"

namespace gaussamp {

/// The pair (M, N) solving dM/dt = -eta N - (Gamma/2) M,
/// dN/dt = -eta M - (Gamma/2) N with M(0) = I, N(0) = 0.
/// Both are real for real eta. P = M+N and Q = M-N are one-parameter
/// semigroups: P(t) = exp(-(eta+Gamma/2)t), Q(t) = exp((eta-Gamma/2)t).
struct Propagator {
  Eigen::Matrix2d M = Eigen::Matrix2d::Identity();
  Eigen::Matrix2d N = Eigen::Matrix2d::Zero();
  double t = 0.0;
};

/// Closed form via Pauli exponentials:
///   M = e^{-C1 t}[cosh(B1 t) I - sinh(B1 t) b1.sigma]/2
///     + e^{-C2 t}[cosh(B2 t) I - sinh(B2 t) b2.sigma]/2,  N the difference,
/// with C_{1,2} = +-eta0 + (Gamma1+Gamma2)/4,
/// B_{1,2} = sqrt(eta1^2 + ((Gamma1-Gamma2)/4 +- eta3)^2),
/// b_{1,2} = (+-eta1, 0, +-eta3 + (Gamma1-Gamma2)/4)/B_{1,2}.
Propagator compute_mn(const ChannelParams& params, double t);

/// Same pair through single matrix exponentials of the combined generators,
/// M = (P+Q)/2, N = (P-Q)/2 with P = exp(-(eta+Gamma/2)t),
/// Q = exp((eta-Gamma/2)t). Cross-form check for compute_mn.
Propagator compute_mn_exp(const ChannelParams& params, double t);

/// Stationary second moments: alpha (hermitian) and beta (symmetric) solving
///   2(eta alpha + alpha* eta) - Gamma beta - beta Gamma = 0,
///   Gamma alpha + alpha Gamma - 2 eta beta - 2 beta* eta
///     - Gamma(nbar+1/2) - (nbar+1/2)Gamma = 0.
/// Real for real eta.
struct ResiduePair {
  Mat2 alpha = Mat2::Zero();
  Mat2 beta = Mat2::Zero();
};

/// Pauli-coefficient solve of the stationary equations:
/// alpha_vec = (nbar0+1/2)(G - E G^-1 E)^-1 (Gamma0, 0, Gamma3)^T,
/// beta_vec = G^-1 E alpha_vec, over the (sigma0, sigma1, sigma3) components;
/// the sigma2 component and all imaginary parts vanish identically.
/// Throws SingularSystem at the resonances where no stationary solution
/// exists.
ResiduePair residue_general(const ChannelParams& params);

/// Closed form for eta3 = 0 (polynomial coefficients over the factored
/// discriminant Delta = (Gamma0^2-4 eta0^2)
/// [(Gamma0+2 eta0)^2-(Gamma3^2+4 eta1^2)]
/// [(Gamma0-2 eta0)^2-(Gamma3^2+4 eta1^2)]).
ResiduePair residue_eta3_zero(const ChannelParams& params);

/// Closed form for eta0 = eta3 = 0 (inter-mode amplification alone):
///   alpha = nbar0'/(1-k^2) [(1-gamma3p^2) sigma0 - gamma3p eta1p^2 sigma3],
///   beta  = nbar0' eta1p (1-gamma3p^2)/(1-k^2) sigma1.
/// The sigma3 coefficient sign is fixed by the stationary equations
/// themselves (residual-checked), matching the eta3 = 0 closed form at
/// eta0 = 0.
ResiduePair residue_intermode(const ChannelParams& params);

/// gamma_inf = [[alpha, beta*], [beta, alpha*]] as a ComplexCM.
ComplexCM stationary_cm(const ChannelParams& params);

/// gamma(t) = S (gamma(0) - gamma_inf) S + gamma_inf with
/// S = [[M, -N], [-N, M]]; first moments transform as
/// m(t) = M m(0) + N conj(m(0)).
GaussianState evolve(const GaussianState& state, const ChannelParams& params,
                     double t);

}  // namespace gaussamp

#endif  // GAUSSAMP_PROPAGATOR_HPP_
