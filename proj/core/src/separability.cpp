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

#include "gaussamp/separability.hpp"

#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace gaussamp {

namespace {

void require_noise(double nbar0) {
  if (!std::isfinite(nbar0)) {
    throw ValidationError(ValidationError::Kind::NonFinite,
                          "nbar0 is not finite");
  }
  if (nbar0 < 0.0) {
    throw ValidationError(ValidationError::Kind::NegativeNoise,
                          "nbar0 must be non-negative");
  }
}

struct MnBlocks {
  double Ma, Mb, Nc;
};

// M = diag(Ma, Mb), N = Nc sigma1 for eta0 = eta3 = 0, expressed through
// K1 = e^{(k-1)t'}, K2 = e^{-(k+1)t'} so large-t' magnitudes stay graded:
// e^{-t'} cosh(kt') = (K1+K2)/2, e^{-t'} sinh(kt') = (K1-K2)/2.
MnBlocks intermode_mn(double gamma3p, double eta1p, double tprime) {
  const double k = std::hypot(gamma3p, eta1p);
  if (k < 1e-12) {
    const double et = std::exp(-tprime);
    return {et, et, -et * tprime * eta1p};
  }
  const double k1 = std::exp((k - 1.0) * tprime);
  const double k2 = std::exp(-(k + 1.0) * tprime);
  const double c = 0.5 * (k1 + k2);
  const double s = 0.5 * (k1 - k2);
  return {c - s * gamma3p / k, c + s * gamma3p / k, -s * eta1p / k};
}

void require_intermode_only(const ChannelParams& p, const char* who) {
  if (p.eta0 != 0.0 || p.eta3 != 0.0) {
    std::ostringstream os;
    os << who << " requires eta0 = eta3 = 0, got eta0 = " << p.eta0
       << ", eta3 = " << p.eta3;
    throw RegimeViolation(os.str());
  }
}

}  // namespace

const char* decision_name(Decision d) {
  return d == Decision::separable ? "separable" : "entangled";
}

ComplexCM XpSymmetricState::to_cm() const {
  ComplexCM cm;
  cm.X << alpha_a, 0, 0, alpha_b;
  cm.Y << 0, beta_c, beta_c, 0;
  return cm;
}

Verdict ppt_general(const ComplexCM& cm) {
  cm.require_valid(1e-9);

  const double aa = cm.X(0, 0).real();
  const double ab = cm.X(1, 1).real();
  const Complex ac = cm.X(0, 1);
  const Complex ba = cm.Y(0, 0);
  const Complex bc = cm.Y(0, 1);
  const Complex bb = cm.Y(1, 1);

  auto block = [](Complex alpha, Complex beta) {
    Mat2 g;
    g << alpha, std::conj(beta), beta, std::conj(alpha);
    return g;
  };
  const Mat2 ga = block(aa, ba);
  const Mat2 gb = block(ab, bb);
  const Mat2 gc = block(ac, bc);

  const double det_a = aa * aa - std::norm(ba);
  const double det_b = ab * ab - std::norm(bb);
  const double det_c = std::norm(ac) - std::norm(bc);

  const Mat2 s3 = sigma3();
  const double trace =
      (ga * s3 * gc * s3 * gb * s3 * gc.adjoint() * s3).trace().real();

  const double lhs =
      det_a * det_b + (0.25 - std::abs(det_c)) * (0.25 - std::abs(det_c)) -
      trace;
  const double rhs = 0.25 * (det_a + det_b);
  return verdict_from_margin(lhs - rhs);
}

Verdict ppt_xp_symmetric(const XpSymmetricState& s) {
  return verdict_from_margin((s.alpha_a - 0.5) * (s.alpha_b - 0.5) -
                             s.beta_c * s.beta_c);
}

Verdict weak_intermode_criterion(double gamma3p, double eta1p, double nbar0) {
  require_noise(nbar0);
  const double k = std::hypot(gamma3p, eta1p);
  if (k >= 1.0) {
    std::ostringstream os;
    os << "weak inter-mode criterion requires k < 1, got k = " << k;
    throw RegimeViolation(os.str());
  }
  const double g2 = gamma3p * gamma3p;
  const double w = 1.0 - g2 * (2.0 * nbar0 + 1.0) * (2.0 * nbar0 + 1.0);
  return verdict_from_margin(4.0 * nbar0 * nbar0 * (1.0 - g2) -
                             w * eta1p * eta1p);
}

XpSymmetricState strong_finite_time_state(const ChannelParams& p,
                                          double tprime) {
  require_intermode_only(p, "strong_finite_time_state");
  const ResiduePair r = residue_intermode(p);
  const double aa = r.alpha(0, 0).real();
  const double ab = r.alpha(1, 1).real();
  const double bc = r.beta(0, 1).real();

  const auto [Ma, Mb, Nc] = intermode_mn(p.gamma3p(), p.eta1p(), tprime);
  XpSymmetricState out{};
  out.alpha_a =
      aa + Ma * Ma * (0.5 - aa) + Nc * Nc * (0.5 - ab) + 2.0 * Ma * Nc * bc;
  out.alpha_b =
      ab + Mb * Mb * (0.5 - ab) + Nc * Nc * (0.5 - aa) + 2.0 * Mb * Nc * bc;
  out.beta_c = bc - Ma * Nc * (0.5 - aa) - Mb * Nc * (0.5 - ab) -
               (Ma * Mb + Nc * Nc) * bc;
  return out;
}

double strong_finite_time_polynomial(double gamma3p, double eta1p,
                                     double nbar0, double tprime) {
  const double k = std::hypot(gamma3p, eta1p);
  const double k1 = std::exp((k - 1.0) * tprime);
  const double k2 = std::exp(-(k + 1.0) * tprime);
  const double g2 = gamma3p * gamma3p;
  const double u = eta1p * eta1p;
  const double n = nbar0;
  const double k1s = k1 * k1 - 1.0;
  const double k2s = k2 * k2 - 1.0;
  const double kk = k1 * k2 - 1.0;
  const double tn = 2.0 * n + 1.0;

  const double quartic = k1s * k2s - kk * kk * tn * tn * g2;
  const double quadratic =
      kk * kk * (1.0 - g2) * g2 * (4.0 * n * n - 1.0) + 4.0 * n * n * k1s * k2s -
      4.0 * n * g2 *
          (k2 * k2 - g2 - 2.0 * k1 * k2 * (1.0 - g2) +
           k1 * k1 * (1.0 - k2 * k2 * g2));
  const double constant = 4.0 * n * n * k1s * k2s * (1.0 - g2) * g2;

  return u * u * quartic - u * quadratic - constant;
}

StrongFiniteTime strong_finite_time_criterion(const ChannelParams& p,
                                              double tprime) {
  require_intermode_only(p, "strong_finite_time_criterion");
  const double k = p.k();
  if (k <= 1.0) {
    std::ostringstream os;
    os << "strong finite-time criterion requires k > 1, got k = " << k;
    throw RegimeViolation(os.str());
  }

  StrongFiniteTime out{};
  out.polynomial_margin =
      strong_finite_time_polynomial(p.gamma3p(), p.eta1p(), p.nbar0, tprime);

  const XpSymmetricState s = strong_finite_time_state(p, tprime);
  const double p1 = s.alpha_a - 0.5;
  const double p2 = s.alpha_b - 0.5;
  out.state_margin = p1 * p2 - s.beta_c * s.beta_c;

  // The state route subtracts products that grow like K1^4 while the margin
  // grows like K1^2; below the rounding floor of those products its sign is
  // noise and the polynomial route decides.
  const double cancel_scale =
      std::abs(p1 * p2) + s.beta_c * s.beta_c;
  out.state_reliable =
      std::abs(out.state_margin) >
      256.0 * std::numeric_limits<double>::epsilon() * cancel_scale;

  const bool poly_sep = out.polynomial_margin >= 0.0;
  const bool state_sep = out.state_margin >= 0.0;
  if (out.state_reliable && poly_sep != state_sep) {
    out.sign_conflict = true;
    out.verdict = {state_sep ? Decision::separable : Decision::entangled,
                   out.polynomial_margin};
  } else {
    out.sign_conflict = false;
    out.verdict = {poly_sep ? Decision::separable : Decision::entangled,
                   out.polynomial_margin};
  }
  return out;
}

Verdict strong_asymptotic_criterion(double gamma3p, double eta1p,
                                    double nbar0) {
  require_noise(nbar0);
  const double k = std::hypot(gamma3p, eta1p);
  if (k <= 1.0) {
    std::ostringstream os;
    os << "strong asymptotic criterion requires k > 1, got k = " << k;
    throw RegimeViolation(os.str());
  }
  const double g2 = gamma3p * gamma3p;
  const double rhs =
      2.0 * nbar0 *
      (nbar0 + g2 + std::sqrt(nbar0 * nbar0 + (2.0 * nbar0 + 1.0) * g2));
  return verdict_from_margin(rhs - eta1p * eta1p);
}

QuarticCoeffs symmetric_quartic_coeffs(double eta0p, double gamma3p,
                                       double nbar0) {
  require_noise(nbar0);
  const double h2 = eta0p * eta0p;
  const double g2 = gamma3p * gamma3p;
  const double n = nbar0;
  const double nn1 = n * (n + 1.0);
  const double tn = 2.0 * n + 1.0;

  const double s0 =
      (1.0 - h2) * (1.0 - h2) *
      (h2 * h2 + 8.0 * (1.0 + g2) * h2 * nn1 +
       16.0 * (1.0 - g2) * (1.0 - g2) * nn1 * nn1);
  const double s2 = (1.0 - h2 - g2 * tn * tn) * (1.0 - h2 - g2 * tn * tn);
  const double s1 =
      -2.0 * h2 * h2 * h2 - 8.0 * h2 * h2 * nn1 -
      2.0 * g2 * h2 * h2 * (8.0 * n * n + 8.0 * n + 1.0) -
      4.0 * (1.0 - g2) * (1.0 - g2 * tn * tn) * (2.0 * n * n + 2.0 * n + 1.0) +
      2.0 * h2 *
          (8.0 * n * n + 8.0 * n + 3.0 - 4.0 * g2 * g2 * nn1 * tn * tn +
           g2 * (16.0 * n * n * n * n + 32.0 * n * n * n + 24.0 * n * n +
                 8.0 * n - 1.0));
  return {s0, s1, s2};
}

Verdict symmetric_quartic_criterion(const ChannelParams& p) {
  if (p.eta3 != 0.0) {
    std::ostringstream os;
    os << "quartic criterion requires eta3 = 0, got eta3 = " << p.eta3;
    throw RegimeViolation(os.str());
  }
  const RegimeClass regime = classify_regime(p);
  if (regime.symmetric != Tristate::weak) {
    std::ostringstream os;
    os << "quartic criterion requires the weak symmetric regime C2 > B1 "
          "(1 - eta0p > k); got 1 - eta0p = "
       << 1.0 - p.eta0p() << ", k = " << p.k();
    throw RegimeViolation(os.str());
  }
  const QuarticCoeffs c =
      symmetric_quartic_coeffs(p.eta0p(), p.gamma3p(), p.nbar0);
  const double u = p.eta1p() * p.eta1p();
  return verdict_from_margin(c.s2 * u * u + c.s1 * u + c.s0);
}

Eigen::Matrix4d complex_to_real_cm(const ComplexCM& cm) {
  cm.require_valid(1e-9);
  const Eigen::Matrix2d vxx = (cm.X + cm.Y).real();
  const Eigen::Matrix2d vpp = (cm.X - cm.Y).real();
  const Eigen::Matrix2d vxp = cm.X.imag() + cm.Y.imag();

  Eigen::Matrix4d v;
  for (int j = 0; j < 2; ++j) {
    for (int l = 0; l < 2; ++l) {
      v(2 * j, 2 * l) = vxx(j, l);
      v(2 * j + 1, 2 * l + 1) = vpp(j, l);
      v(2 * j, 2 * l + 1) = vxp(j, l);
      v(2 * j + 1, 2 * l) = vxp(l, j);
    }
  }
  return v;
}

std::pair<double, double> symplectic_eigenvalues(const Eigen::Matrix4d& v) {
  const Eigen::Matrix2d a = v.topLeftCorner<2, 2>();
  const Eigen::Matrix2d b = v.bottomRightCorner<2, 2>();
  const Eigen::Matrix2d c = v.topRightCorner<2, 2>();

  const double delta =
      a.determinant() + b.determinant() + 2.0 * c.determinant();
  const double det_v = v.determinant();
  const double disc = std::max(delta * delta - 4.0 * det_v, 0.0);
  const double root = std::sqrt(disc);
  const double hi = std::sqrt(std::max(0.5 * (delta + root), 0.0));
  const double lo = std::sqrt(std::max(0.5 * (delta - root), 0.0));
  return {hi, lo};
}

}  // namespace gaussamp
