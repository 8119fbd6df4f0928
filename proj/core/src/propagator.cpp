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

#include "gaussamp/propagator.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace gaussamp {

namespace {

void require_time(double t) {
  if (!(t >= 0.0) || !std::isfinite(t)) {
    throw std::invalid_argument("evolution time must be finite and >= 0");
  }
}

Mat2 eta_matrix(const ChannelParams& p) {
  Mat2 eta;
  eta << p.eta0 + p.eta3, p.eta1, p.eta1, p.eta0 - p.eta3;
  return eta;
}

ResiduePair pair_from_coeffs(double a0, double a1, double a3, double b0,
                             double b1, double b3) {
  ResiduePair r;
  r.alpha << a0 + a3, a1, a1, a0 - a3;
  r.beta << b0 + b3, b1, b1, b0 - b3;
  return r;
}

}  // namespace

Propagator compute_mn(const ChannelParams& p, double t) {
  require_time(t);
  const double quarter = 0.25 * (p.gamma1 - p.gamma2);  // = Gamma3/2

  // P = exp(-(eta + Gamma/2) t), Q = exp((eta - Gamma/2) t)
  const Mat2 P = pauli_exp(p.eta0 + 0.25 * (p.gamma1 + p.gamma2),
                           {p.eta1, 0.0, p.eta3 + quarter}, t);
  const Mat2 Q = pauli_exp(-p.eta0 + 0.25 * (p.gamma1 + p.gamma2),
                           {-p.eta1, 0.0, -p.eta3 + quarter}, t);

  Propagator out;
  out.M = (0.5 * (P + Q)).real();
  out.N = (0.5 * (P - Q)).real();
  out.t = t;
  return out;
}

Propagator compute_mn_exp(const ChannelParams& p, double t) {
  require_time(t);
  const Mat2 eta = eta_matrix(p);
  Mat2 gh = Mat2::Zero();
  gh(0, 0) = 0.5 * p.gamma1;
  gh(1, 1) = 0.5 * p.gamma2;

  const Mat2 P = mat_exp_oracle((-(eta + gh) * t).eval(), 1e-14);
  const Mat2 Q = mat_exp_oracle(((eta - gh) * t).eval(), 1e-14);

  Propagator out;
  out.M = (0.5 * (P + Q)).real();
  out.N = (0.5 * (P - Q)).real();
  out.t = t;
  return out;
}

ResiduePair residue_general(const ChannelParams& p) {
  const double g0 = p.gamma0();
  const double g3 = p.gamma3();
  const double npr = p.nbar0_prime();

  Eigen::Matrix3d G;
  G << g0, 0, g3, 0, g0, 0, g3, 0, g0;
  Eigen::Matrix3d E;
  E << p.eta0, p.eta1, p.eta3, p.eta1, p.eta0, 0, p.eta3, 0, p.eta0;
  E *= 2.0;

  const double scale3 = g0 * g0 * g0;
  Eigen::PartialPivLU<Eigen::Matrix3d> luG(G);
  if (std::abs(luG.determinant()) < 1e-12 * scale3) {
    throw SingularSystem("damping matrix G is singular (one mode undamped)");
  }
  const Eigen::Matrix3d GinvE = luG.solve(E);
  const Eigen::Matrix3d S = G - E * GinvE;
  Eigen::PartialPivLU<Eigen::Matrix3d> luS(S);
  if (std::abs(luS.determinant()) < 1e-12 * scale3) {
    std::ostringstream os;
    os << "stationary system singular: |det(G - E G^-1 E)| = "
       << std::abs(luS.determinant()) << " below 1e-12 Gamma0^3";
    throw SingularSystem(os.str());
  }

  const Eigen::Vector3d rhs(g0, 0.0, g3);
  const Eigen::Vector3d av = npr * luS.solve(rhs);
  const Eigen::Vector3d bv = GinvE * av;
  return pair_from_coeffs(av[0], av[1], av[2], bv[0], bv[1], bv[2]);
}

ResiduePair residue_eta3_zero(const ChannelParams& p) {
  if (p.eta3 != 0.0) {
    throw std::invalid_argument("residue_eta3_zero requires eta3 = 0");
  }
  const double g0 = p.gamma0(), g3 = p.gamma3();
  const double e0 = p.eta0, e1 = p.eta1;
  const double npr = p.nbar0_prime();
  const double g02 = g0 * g0, g32 = g3 * g3;
  const double e02 = e0 * e0, e12 = e1 * e1;
  const double s = g32 + 4.0 * e12;

  const double delta = (g02 - 4.0 * e02) *
                       ((g0 + 2.0 * e0) * (g0 + 2.0 * e0) - s) *
                       ((g0 - 2.0 * e0) * (g0 - 2.0 * e0) - s);
  const double scale6 = g02 * g02 * g02;
  if (std::abs(delta) < 1e-12 * scale6) {
    std::ostringstream os;
    os << "stationary system singular: |Delta| = " << std::abs(delta)
       << " below 1e-12 Gamma0^6";
    throw SingularSystem(os.str());
  }

  const double a0 =
      (g02 - 4.0 * e02) *
      ((g02 - g32) * (g02 - g32) + 4.0 * g32 * (e12 - e02) -
       4.0 * g02 * (e12 + e02));
  const double a1 =
      4.0 * e0 * e1 *
      ((2.0 * g02 - g32) * (g02 - g32) + 4.0 * g32 * (e12 - e02) -
       8.0 * g02 * e02);
  const double a3 =
      g0 * g3 *
      (16.0 * (2.0 * e02 - e12) * (e02 - e12) + 4.0 * e12 * (g32 - g02) -
       8.0 * g02 * e02);
  const double b0 = 2.0 * g0 * e0 * (g02 - 4.0 * e02) *
                    (g02 - g32 + 4.0 * (e12 - e02));
  const double b1 =
      2.0 * g0 * e1 *
      ((g02 - g32) * (g02 - g32) + 8.0 * e02 * (2.0 * e12 - 2.0 * e02 - g32) +
       4.0 * e12 * (g32 - g02));
  const double b3 =
      2.0 * e0 * g3 *
      (16.0 * (e02 - e12) * (e02 - e12) + g02 * (g32 - g02 - 8.0 * e12) +
       4.0 * g32 * (e12 - e02));

  const double c = npr / delta;
  return pair_from_coeffs(c * a0, c * a1, c * a3, c * b0, c * b1, c * b3);
}

ResiduePair residue_intermode(const ChannelParams& p) {
  if (p.eta0 != 0.0 || p.eta3 != 0.0) {
    throw std::invalid_argument("residue_intermode requires eta0 = eta3 = 0");
  }
  const double g3p = p.gamma3p();
  const double e1p = p.eta1p();
  const double d = 1.0 - g3p * g3p - e1p * e1p;  // = 1 - k^2
  if (std::abs(d) < 1e-12) {
    throw SingularSystem("stationary system singular at k = 1");
  }
  const double npr = p.nbar0_prime();
  const double pp = 1.0 - g3p * g3p;
  const double a0 = npr * pp / d;
  const double a3 = -npr * g3p * e1p * e1p / d;
  const double b1 = npr * e1p * pp / d;
  return pair_from_coeffs(a0, 0.0, a3, 0.0, b1, 0.0);
}

ComplexCM stationary_cm(const ChannelParams& p) {
  const ResiduePair r = residue_general(p);
  return {r.alpha, r.beta};
}

GaussianState evolve(const GaussianState& state, const ChannelParams& p,
                     double t) {
  require_time(t);
  const ResiduePair r = residue_general(p);
  const Propagator prop = compute_mn(p, t);
  const Mat2 M = prop.M.cast<Complex>();
  const Mat2 N = prop.N.cast<Complex>();

  const Mat2 Xd = state.cm.X - r.alpha;
  const Mat2 Yd = state.cm.Y - r.beta;
  const Mat2 Ydc = Yd.conjugate();
  const Mat2 Xdc = Xd.conjugate();

  GaussianState out;
  out.cm.X = r.alpha + M * Xd * M - N * Yd * M - M * Ydc * N + N * Xdc * N;
  out.cm.Y = r.beta + M * Yd * M - N * Xd * M - M * Xdc * N + N * Ydc * N;
  out.m = prop.M.cast<Complex>() * state.m +
          prop.N.cast<Complex>() * state.m.conjugate();
  return out;
}

}  // namespace gaussamp
