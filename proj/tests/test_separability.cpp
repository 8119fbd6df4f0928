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

#include <cmath>
#include <random>

#include "gaussamp/oracle.hpp"
#include "gaussamp/propagator.hpp"
#include "gaussamp/separability.hpp"
#include "test_oracles.hpp"

using namespace gaussamp;

TEST_CASE("ppt_general anchor states") {
  const Verdict vac = ppt_general(ComplexCM::vacuum());
  CHECK(vac.margin == 0.0);
  CHECK(vac.decision == Decision::separable);

  const Verdict th = ppt_general(ComplexCM::thermal(0.4));
  CHECK(th.margin > 0.0);
  CHECK(th.decision == Decision::separable);
}

TEST_CASE("ppt_general rejects malformed blocks") {
  ComplexCM cm = ComplexCM::vacuum();
  cm.Y(0, 1) = Complex(0.2, 0.0);
  cm.Y(1, 0) = Complex(0.1, 0.0);  // asymmetric beyond 1e-9
  CHECK_THROWS_AS(ppt_general(cm), MalformedCM);
}

TEST_CASE("ppt_xp_symmetric frozen examples") {
  CHECK(ppt_xp_symmetric({0.5, 0.5, 0.0}).margin == 0.0);
  CHECK(ppt_xp_symmetric({0.5, 0.5, 0.0}).decision == Decision::separable);

  // the inter-mode residue state at gamma3p = 0, eta1p = 1/2, nbar0 = 0
  const Verdict v = ppt_xp_symmetric({2.0 / 3.0, 2.0 / 3.0, 1.0 / 3.0});
  CHECK(v.margin == doctest::Approx(1.0 / 36.0 - 1.0 / 9.0).epsilon(1e-14));
  CHECK(v.decision == Decision::entangled);
}

TEST_CASE("x-p reduction equivalence against the general criterion") {
  std::mt19937_64 rng(1001);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int i = 0; i < 500; ++i) {
    XpSymmetricState s{0.5 + 1.5 * u(rng), 0.5 + 1.5 * u(rng),
                       -1.0 + 2.0 * u(rng)};
    const double mg = ppt_general(s.to_cm()).margin;
    const double mx = ppt_xp_symmetric(s).margin;
    if (std::min(std::abs(mg), std::abs(mx)) > 1e-9) {
      CHECK((mg >= 0.0) == (mx >= 0.0));
    }
  }
}

TEST_CASE("weak inter-mode criterion thresholds") {
  // gamma3p = 0, nbar0 = 0.3: separable iff eta1p <= 0.6
  CHECK(weak_intermode_criterion(0.0, 0.6, 0.3).margin ==
        doctest::Approx(0.0).epsilon(1e-15));
  CHECK(weak_intermode_criterion(0.0, 0.59, 0.3).decision ==
        Decision::separable);
  CHECK(weak_intermode_criterion(0.0, 0.61, 0.3).decision ==
        Decision::entangled);

  // gamma3p = 0.5, nbar0 = 0: only eta1p = 0 is separable
  CHECK(weak_intermode_criterion(0.5, 0.0, 0.0).margin == 0.0);
  CHECK(weak_intermode_criterion(0.5, 0.2, 0.0).decision ==
        Decision::entangled);

  CHECK_THROWS_AS(weak_intermode_criterion(0.0, 1.5, 0.3), RegimeViolation);
  CHECK_THROWS_AS(weak_intermode_criterion(0.0, 0.5, -0.1), ValidationError);
}

TEST_CASE("ppt_general on the residue state matches the weak criterion") {
  const ChannelParams p = ChannelParams::from_normalized(0, 0.6, 0, 0.3, 0.1);
  const double mg = ppt_general(stationary_cm(p)).margin;
  const double mw = weak_intermode_criterion(0.3, 0.6, 0.1).margin;
  REQUIRE(std::min(std::abs(mg), std::abs(mw)) > 1e-9);
  CHECK((mg >= 0.0) == (mw >= 0.0));
}

TEST_CASE("weak criterion sign equals the residue-state PPT sign") {
  for (double g3p = 0.0; g3p <= 0.91; g3p += 0.1) {
    for (double nb = 0.0; nb <= 1.01; nb += 0.1) {
      const double lim = std::sqrt(1.0 - g3p * g3p);
      for (int j = 1; j <= 12; ++j) {
        const double e1p = lim * j / 13.0;
        const ChannelParams p =
            ChannelParams::from_normalized(0, e1p, 0, g3p, nb);
        const double ma = weak_intermode_criterion(g3p, e1p, nb).margin;
        const double mb = ppt_general(stationary_cm(p)).margin;
        if (std::min(std::abs(ma), std::abs(mb)) > 1e-9) {
          CHECK((ma >= 0.0) == (mb >= 0.0));
        }
      }
    }
  }
}

TEST_CASE("strong finite-time state: vacuum start and late-time limits") {
  const ChannelParams weak = ChannelParams::from_normalized(0, 0.5, 0, 0.2, 0.1);
  const XpSymmetricState at0 = strong_finite_time_state(weak, 0.0);
  CHECK(at0.alpha_a == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(at0.alpha_b == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(at0.beta_c == doctest::Approx(0.0).epsilon(1e-15));

  // k < 1: converges to the residue blocks
  const XpSymmetricState late = strong_finite_time_state(weak, 30.0);
  const ResiduePair r = residue_intermode(weak);
  CHECK(late.alpha_a == doctest::Approx(r.alpha(0, 0).real()).epsilon(1e-12));
  CHECK(late.alpha_b == doctest::Approx(r.alpha(1, 1).real()).epsilon(1e-12));
  CHECK(late.beta_c == doctest::Approx(r.beta(0, 1).real()).epsilon(1e-12));

  CHECK_THROWS_AS(strong_finite_time_state(
                      ChannelParams::from_normalized(0.1, 0.5, 0, 0.2, 0), 1.0),
                  RegimeViolation);
}

TEST_CASE("strong finite-time state equals the full evolution from vacuum") {
  for (double g3p : {0.0, 0.3, 0.6}) {
    for (double e1p : {0.4, 0.9, 1.3, 1.8}) {
      const ChannelParams p = ChannelParams::from_normalized(0, e1p, 0, g3p, 0.2);
      if (std::abs(p.k() - 1.0) < 1e-3) continue;
      const double tp = 1.5;
      const XpSymmetricState s = strong_finite_time_state(p, tp);
      const GaussianState full =
          evolve(GaussianState::vacuum(), p, p.t_from_tprime(tp));
      CHECK(s.alpha_a ==
            doctest::Approx(full.cm.X(0, 0).real()).epsilon(1e-12));
      CHECK(s.alpha_b ==
            doctest::Approx(full.cm.X(1, 1).real()).epsilon(1e-12));
      CHECK(s.beta_c == doctest::Approx(full.cm.Y(0, 1).real()).epsilon(1e-12));
    }
  }
}

TEST_CASE("strong finite-time criterion special points") {
  const ChannelParams p = ChannelParams::from_normalized(0, 1.3, 0, 0.0, 0.2);
  const StrongFiniteTime at0 = strong_finite_time_criterion(p, 0.0);
  CHECK(at0.polynomial_margin == doctest::Approx(0.0).epsilon(1e-15));
  CHECK(at0.verdict.decision == Decision::separable);

  // zero temperature, any t' > 0: entangled
  const ChannelParams zt = ChannelParams::from_normalized(0, 1.3, 0, 0.0, 0.0);
  for (double tp : {0.1, 1.0, 4.0}) {
    const StrongFiniteTime r = strong_finite_time_criterion(zt, tp);
    CHECK(r.verdict.decision == Decision::entangled);
    CHECK(r.state_margin < 0.0);
  }

  CHECK_THROWS_AS(strong_finite_time_criterion(
                      ChannelParams::from_normalized(0, 0.5, 0, 0.2, 0), 1.0),
                  RegimeViolation);
}

TEST_CASE("finite-time dual route: conflicts are flagged, state decides") {
  long conflicts = 0;
  for (double k : {1.05, 1.25, 1.6}) {
    for (double g3p : {0.0, 0.2, 0.5, 0.8}) {
      if (k * k <= g3p * g3p) continue;
      const double e1p = std::sqrt(k * k - g3p * g3p);
      for (double tp : {0.25, 1.0, 3.0}) {
        for (double nb = 0.0; nb <= 1.01; nb += 0.05) {
          const ChannelParams p =
              ChannelParams::from_normalized(0, e1p, 0, g3p, nb);
          const StrongFiniteTime r = strong_finite_time_criterion(p, tp);
          if (!r.state_reliable) continue;
          const bool state_sep = r.state_margin >= 0.0;
          if (r.sign_conflict) {
            ++conflicts;
            CHECK((r.verdict.decision == Decision::separable) == state_sep);
          } else if (std::min(std::abs(r.state_margin),
                              std::abs(r.polynomial_margin)) > 1e-9) {
            CHECK((r.polynomial_margin >= 0.0) == state_sep);
          }
        }
      }
    }
  }
  // the polynomial route and the state route are known to part ways away
  // from gamma3p = 0
  CHECK(conflicts > 0);
}

TEST_CASE("strong asymptotic criterion") {
  // gamma3p = 0: threshold at eta1p = 2 nbar0
  CHECK(strong_asymptotic_criterion(0.0, 1.4, 0.7).margin ==
        doctest::Approx(0.0).epsilon(1e-14));
  CHECK(strong_asymptotic_criterion(0.0, 1.41, 0.7).decision ==
        Decision::entangled);
  CHECK(strong_asymptotic_criterion(0.0, 1.39, 0.7).decision ==
        Decision::separable);

  // nbar0 = 0: every strong state is entangled
  CHECK(strong_asymptotic_criterion(0.3, 1.2, 0.0).margin ==
        doctest::Approx(-1.44).epsilon(1e-14));

  CHECK_THROWS_AS(strong_asymptotic_criterion(0.2, 0.5, 0.1), RegimeViolation);
}

TEST_CASE("quartic coefficients factor at eta0p = 0") {
  for (double g3p = 0.0; g3p <= 0.91; g3p += 0.1) {
    for (double nb = 0.0; nb <= 1.01; nb += 0.1) {
      const QuarticCoeffs c = symmetric_quartic_coeffs(0.0, g3p, nb);
      const double w = 1.0 - g3p * g3p * (2 * nb + 1) * (2 * nb + 1);
      const double pp = 1.0 - g3p * g3p;
      CHECK(c.s2 == doctest::Approx(w * w).epsilon(1e-12));
      CHECK(c.s1 ==
            doctest::Approx(-4.0 * w * pp * (2 * nb * nb + 2 * nb + 1))
                .epsilon(1e-12));
      CHECK(c.s0 ==
            doctest::Approx(16.0 * pp * pp * nb * nb * (nb + 1) * (nb + 1))
                .epsilon(1e-12));
    }
  }
}

TEST_CASE("quartic criterion gates and trivial points") {
  // eta1p = 0 is always separable (no inter-mode drive, no entanglement)
  for (double e0p : {0.0, 0.3, 0.6}) {
    for (double nb : {0.0, 0.2, 0.7}) {
      const ChannelParams p =
          ChannelParams::from_normalized(e0p, 0.0, 0, 0.2, nb);
      CHECK(symmetric_quartic_criterion(p).decision == Decision::separable);
    }
  }

  CHECK_THROWS_AS(symmetric_quartic_criterion(
                      ChannelParams::from_normalized(0.5, 0.7, 0, 0.3, 0.1)),
                  RegimeViolation);
  CHECK_THROWS_AS(symmetric_quartic_criterion(
                      ChannelParams::from_normalized(0.1, 0.2, 0.1, 0.3, 0.1)),
                  RegimeViolation);
}

TEST_CASE("quartic sign equals residue-state PPT sign (eta0p = 0.5 family)") {
  for (double g3p = 0.0; g3p <= 0.45; g3p += 0.05) {
    for (double nb = 0.0; nb <= 0.51; nb += 0.05) {
      for (double e1p = 0.05; e1p < 0.5; e1p += 0.05) {
        const ChannelParams p =
            ChannelParams::from_normalized(0.5, e1p, 0, g3p, nb);
        if (classify_regime(p).symmetric != Tristate::weak) continue;
        const double ma = symmetric_quartic_criterion(p).margin;
        const double mb = ppt_general(stationary_cm(p)).margin;
        if (std::min(std::abs(ma), std::abs(mb)) > 1e-9) {
          CHECK((ma >= 0.0) == (mb >= 0.0));
        }
      }
    }
  }
}

TEST_CASE("quartic at eta0p -> 0 reduces to the weak criterion") {
  for (double g3p : {0.0, 0.3, 0.6}) {
    for (double nb : {0.05, 0.2, 0.45}) {
      for (double e1p : {0.1, 0.4, 0.7}) {
        if (g3p * g3p + e1p * e1p >= 1.0) continue;
        const ChannelParams p =
            ChannelParams::from_normalized(0.0, e1p, 0, g3p, nb);
        const double ma = symmetric_quartic_criterion(p).margin;
        const double mb = weak_intermode_criterion(g3p, e1p, nb).margin;
        if (std::min(std::abs(ma), std::abs(mb)) > 1e-9) {
          CHECK((ma >= 0.0) == (mb >= 0.0));
        }
      }
    }
  }
}

TEST_CASE("complex_to_real_cm anchors") {
  CHECK((complex_to_real_cm(ComplexCM::vacuum()) -
         0.5 * Eigen::Matrix4d::Identity())
            .cwiseAbs()
            .maxCoeff() == 0.0);
  CHECK((complex_to_real_cm(ComplexCM::thermal(0.4)) -
         0.9 * Eigen::Matrix4d::Identity())
            .cwiseAbs()
            .maxCoeff() == 0.0);

  // x-p symmetric state: +beta_c between x1 x2, -beta_c between p1 p2
  const XpSymmetricState s{0.8, 0.6, 0.25};
  const Eigen::Matrix4d v = complex_to_real_cm(s.to_cm());
  CHECK(v(0, 0) == 0.8);
  CHECK(v(1, 1) == 0.8);
  CHECK(v(2, 2) == 0.6);
  CHECK(v(0, 2) == 0.25);
  CHECK(v(1, 3) == -0.25);
  CHECK(v(0, 1) == 0.0);
  CHECK((v - v.transpose()).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("symplectic eigenvalues match the direct 4x4 spectrum") {
  CHECK(symplectic_eigenvalues(0.5 * Eigen::Matrix4d::Identity()) ==
        std::pair<double, double>(0.5, 0.5));
  CHECK(symplectic_eigenvalues(0.9 * Eigen::Matrix4d::Identity()) ==
        std::pair<double, double>(0.9, 0.9));

  std::mt19937_64 rng(321);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int i = 0; i < 200; ++i) {
    const XpSymmetricState s{0.5 + 1.2 * u(rng), 0.5 + 1.2 * u(rng),
                             0.6 * (u(rng) - 0.5)};
    const Eigen::Matrix4d v = complex_to_real_cm(s.to_cm());
    const auto [a1, a2] = symplectic_eigenvalues(v);
    const auto [b1, b2] = testing::symplectic_direct(v);
    CHECK(a1 == doctest::Approx(b1).epsilon(1e-10));
    CHECK(a2 == doctest::Approx(b2).epsilon(1e-10));
  }
}

TEST_CASE("channel output stays physical") {
  for (double g3p : {0.0, 0.4, 0.8}) {
    for (double e1p : {0.3, 0.8, 1.4}) {
      for (double tp : {0.2, 1.0, 3.0}) {
        const ChannelParams p =
            ChannelParams::from_normalized(0, e1p, 0, g3p, 0.15);
        const GaussianState out =
            evolve(GaussianState::vacuum(), p, p.t_from_tprime(tp));
        const auto [n1, n2] =
            symplectic_eigenvalues(complex_to_real_cm(out.cm));
        CHECK(n2 >= 0.5 - 1e-9);
      }
    }
  }
}

TEST_CASE("ppt_general sign agrees with the real-CM criterion oracle") {
  ParamSampler sampler(8080);
  int checked = 0;
  while (checked < 300) {
    const ChannelParams p = sampler.draw_params();
    ComplexCM cm;
    try {
      cm = stationary_cm(p);
    } catch (const SingularSystem&) {
      continue;
    }
    if (cm.X.cwiseAbs().maxCoeff() > 50.0) continue;
    const double ma = ppt_general(cm).margin;
    const double mb = testing::simon_margin(complex_to_real_cm(cm));
    if (std::min(std::abs(ma), std::abs(mb)) > 1e-9) {
      CHECK((ma >= 0.0) == (mb >= 0.0));
    }
    ++checked;
  }
}
