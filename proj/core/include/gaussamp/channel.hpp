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

#ifndef GAUSSAMP_CHANNEL_HPP_
#define GAUSSAMP_CHANNEL_HPP_

#include <Eigen/Dense>

#include "gaussamp/errors.hpp"
#include "gaussamp/pauli.hpp"

namespace gaussamp {

/// Physical rates of the two-mode channel: the real symmetric amplifier
/// matrix eta = eta0*sigma0 + eta1*sigma1 + eta3*sigma3, the per-mode
/// amplitude-damping rates Gamma1, Gamma2, and the (mode-symmetric) thermal
/// occupancy nbar0.
///
/// Derived quantities use Gamma0 = (Gamma1+Gamma2)/2 as the rate unit:
/// Gamma3 = (Gamma1-Gamma2)/2, gamma3p = Gamma3/Gamma0, etaXp = 2*etaX/Gamma0,
/// k = sqrt(gamma3p^2 + eta1p^2), and the dimensionless time tprime =
/// Gamma0*t/2.
struct ChannelParams {
  double eta0 = 0.0;
  double eta1 = 0.0;
  double eta3 = 0.0;
  double gamma1 = 1.0;
  double gamma2 = 1.0;
  double nbar0 = 0.0;

  double gamma0() const { return 0.5 * (gamma1 + gamma2); }
  double gamma3() const { return 0.5 * (gamma1 - gamma2); }
  double gamma3p() const { return gamma3() / gamma0(); }
  double eta0p() const { return 2.0 * eta0 / gamma0(); }
  double eta1p() const { return 2.0 * eta1 / gamma0(); }
  double eta3p() const { return 2.0 * eta3 / gamma0(); }
  double k() const { return std::hypot(gamma3p(), eta1p()); }
  double nbar0_prime() const { return nbar0 + 0.5; }

  double t_from_tprime(double tprime) const { return 2.0 * tprime / gamma0(); }
  double tprime_from_t(double t) const { return 0.5 * gamma0() * t; }

  /// Raw-rate constructor; validates.
  static ChannelParams from_rates(double eta0, double eta1, double eta3,
                                  double gamma1, double gamma2, double nbar0);

  /// Normalized constructor with Gamma0 = 1: gamma1 = 1+gamma3p,
  /// gamma2 = 1-gamma3p, etaX = etaXp/2. Validates.
  static ChannelParams from_normalized(double eta0p, double eta1p, double eta3p,
                                       double gamma3p, double nbar0);
};

/// Checks finiteness, Gamma0 > 0 and nbar0 >= 0; returns the record unchanged
/// on success, throws ValidationError otherwise.
ChannelParams validate(const ChannelParams& params);

enum class Tristate { weak, strong, boundary };

const char* tristate_name(Tristate t);

/// Regime of the channel:
///  - intermode: k vs 1 (equivalently Gamma3^2 + 4 eta1^2 vs Gamma0^2),
///  - symmetric: C2 = -eta0 + Gamma0/2 vs B1 = sqrt(eta1^2+(Gamma3/2+eta3)^2).
/// Boundary is declared within |k-1| < 1e-9 resp. |C2-B1| < 1e-9*Gamma0 so
/// bisection sweeps see a deterministic tri-state.
struct RegimeClass {
  Tristate intermode;
  Tristate symmetric;
};

RegimeClass classify_regime(const ChannelParams& params);

/// Complex correlation matrix of a two-mode Gaussian state, stored as the
/// hermitian block X and symmetric block Y of gamma = [[X, Y*], [Y, X*]].
/// Vacuum is X = I/2, Y = 0.
struct ComplexCM {
  Mat2 X = 0.5 * Mat2::Identity();
  Mat2 Y = Mat2::Zero();

  static ComplexCM vacuum() { return {}; }
  static ComplexCM thermal(double nbar) {
    return {(nbar + 0.5) * Mat2::Identity(), Mat2::Zero()};
  }

  /// Max deviation from X^dag = X and Y^T = Y.
  double block_defect() const;
  /// Throws MalformedCM when block_defect() exceeds tol.
  void require_valid(double tol = 1e-9) const;
};

/// Gaussian state: first moments m (carried through evolution, never consulted
/// by separability) and the correlation matrix.
struct GaussianState {
  Eigen::Vector2cd m = Eigen::Vector2cd::Zero();
  ComplexCM cm;

  static GaussianState vacuum() { return {}; }
};

}  // namespace gaussamp

#endif  // GAUSSAMP_CHANNEL_HPP_
